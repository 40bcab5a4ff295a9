#include <doctest.h>

#include <random>
#include <set>

#include "canweight/weight.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace canweight;
using namespace canweight::test;

TEST_CASE("essential_cone examples") {
  auto quad = essential_cone(quad_counterexample());
  // membership must match the min-based definition on the classic probes
  CHECK(quad.contains(w({2, 2, 1, 1})));
  CHECK(quad.contains(w({2, 1, 2, 1})));
  CHECK_FALSE(quad.contains(w({2, 1, 1, 1})));
  CHECK_FALSE(quad.contains(w({1, 1, 1, 1})));

  auto single = essential_cone(poly("x0^2+x1^4+x2^4", 3));
  REQUIRE(single.rays().size() == 1);
  CHECK(single.rays()[0] == w({2, 1, 1}));

  auto zero = essential_cone(poly("x0^2+x1^2+x2^2", 3));
  CHECK(zero.is_zero_cone());
}

TEST_CASE("essential-cone membership equals the min-based definition on random probes") {
  std::mt19937_64 rng(808);
  std::vector<PolynomialSupport> polys = {
      quad_counterexample(), k3_deform_example(0), double_weight_example(3), poly("x0^2+x1^4+x2^4", 3),
      poly("x0*x1*x2 + x0^3 + x1^4 + x2^5", 3)};
  for (const auto& f : polys) {
    auto cone = essential_cone(f);
    std::size_t d = static_cast<std::size_t>(f.dim);
    for (int probe = 0; probe < 200; ++probe) {
      IntVec qv(d);
      for (auto& x : qv) x = Int(rng() % 25);
      WeightVector q(qv);
      bool def = weight_of_poly(q, f) >= pairing(q, all_ones(f.dim));
      CHECK(cone.contains(q) == def);
    }
  }
}

TEST_CASE("absolutely_minimal examples") {
  CHECK_FALSE(absolutely_minimal(essential_cone(quad_counterexample())).has_value());

  auto m1 = absolutely_minimal(essential_cone(poly("x0^2+x1^4+x2^4", 3)));
  REQUIRE(m1.has_value());
  CHECK(*m1 == w({2, 1, 1}));

  auto m2 = absolutely_minimal(essential_cone(poly("x0*x1*x2 + x0^3 + x1^4 + x2^5", 3)));
  REQUIRE(m2.has_value());
  CHECK(*m2 == w({1, 1, 1}));

  CHECK_THROWS_AS(absolutely_minimal(essential_cone(poly("x0^2+x1^2+x2^2", 3))), input_error);
}

TEST_CASE("absolutely_minimal agrees with brute force on random orthant subcones") {
  std::mt19937_64 rng(909);
  int done = 0;
  while (done < 60) {
    std::size_t d = 2 + rng() % 3;
    std::size_t nrays = 1 + rng() % (d + 1);
    std::vector<IntVec> rays;
    for (std::size_t i = 0; i < nrays; ++i) {
      IntVec r(d);
      bool nz = false;
      for (auto& x : r) {
        x = Int(rng() % 5);
        if (x != 0) nz = true;
      }
      if (!nz) r[0] = 1;
      rays.push_back(reduced(r));
    }
    ConeDescription dual = dual_description(static_cast<int>(d), rays);
    std::vector<IntVec> forms = dual.rays;
    for (const auto& b : dual.lineality) {
      forms.push_back(b);
      forms.push_back(scale(-1, b));
    }
    auto c = RationalCone::from_inequalities(static_cast<int>(d), forms);
    if (c.is_zero_cone() || !c.pointed()) continue;
    ++done;

    long long maxh = 1;
    for (const auto& h : c.hilbert_basis())
      for (const auto& x : h.coords) maxh = std::max(maxh, static_cast<long long>(x));
    long long B = 3 * maxh;

    auto brute = brute_abs_min(to_vec64_forms(c.hrep()), d, B);
    auto fast = absolutely_minimal(c);
    if (brute) {
      REQUIRE(fast.has_value());
      for (std::size_t i = 0; i < d; ++i) CHECK(fast->coords[i] == Int((*brute)[i]));
    } else {
      CHECK_FALSE(fast.has_value());
    }
  }
}

TEST_CASE("star_subdivision examples") {
  auto s1 = star_subdivision(w({1, 1, 1}));
  REQUIRE(s1.charts.size() == 3);
  for (const auto& ch : s1.charts) CHECK(ch.determinant == 1);

  auto s2 = star_subdivision(w({2, 1, 1}));
  CHECK(s2.charts[0].dual_basis[0] == std::vector<Rat>{Rat(1, 2), Rat(0), Rat(0)});
  CHECK(s2.charts[0].determinant == 2);

  auto s3 = star_subdivision(w({21, 14, 6, 1}));
  for (std::size_t i = 0; i < 4; ++i) CHECK(s3.charts[i].determinant == s3.center.coords[i]);

  CHECK_THROWS_AS(star_subdivision(w({2, 0, 1})), input_error);
  CHECK_THROWS_AS(star_subdivision(w({2, 2, 4})), input_error);
}

TEST_CASE("star charts cover the orthant with disjoint interiors") {
  std::mt19937_64 rng(4242);
  for (const auto& center : {w({2, 1, 1}), w({4, 3, 3}), w({21, 14, 6, 1}), w({2, 1, 2, 1})}) {
    auto sub = star_subdivision(center);
    std::size_t d = center.coords.size();
    for (int trial = 0; trial < 200; ++trial) {
      IntVec qv(d);
      bool nz = false;
      for (auto& x : qv) {
        x = Int(rng() % 30);
        if (x != 0) nz = true;
      }
      if (!nz) qv[0] = 1;
      WeightVector q(qv);
      // membership in chart i: all barycentric coordinates nonnegative
      int containing = 0;
      int strict = 0;
      for (std::size_t i = 0; i < d; ++i) {
        Rat c0(q.coords[i], center.coords[i]);
        bool inside = true, inside_strict = c0 > 0;
        for (std::size_t j = 0; j < d; ++j) {
          if (j == i) continue;
          Rat res = Rat(q.coords[j]) - c0 * Rat(center.coords[j]);
          if (res < 0) inside = false;
          if (res <= 0) inside_strict = false;
        }
        if (inside) ++containing;
        if (inside_strict) ++strict;
      }
      CHECK(containing >= 1);  // covering
      CHECK(strict <= 1);      // disjoint interiors
      auto chart = interior_chart(sub, q);
      CHECK(chart.has_value() == (strict == 1));
    }
  }
}

TEST_CASE("interior_chart examples") {
  auto s1 = star_subdivision(w({4, 3, 3}));
  auto c1 = interior_chart(s1, w({1, 1, 1}));
  REQUIRE(c1.has_value());
  CHECK(*c1 == 0);

  auto s2 = star_subdivision(w({2, 1, 1}));
  CHECK_FALSE(interior_chart(s2, w({2, 1, 1})).has_value());

  auto s3 = star_subdivision(w({1, 1, 1}));
  CHECK_FALSE(interior_chart(s3, w({3, 1, 1})).has_value());
}

TEST_CASE("leq_f examples") {
  auto f = poly("x0^3+x1^4+x2^4", 3);
  CHECK(leq_f(w({1, 1, 1}), w({4, 3, 3}), f));
  CHECK_FALSE(leq_f(w({4, 3, 3}), w({1, 1, 1}), f));
  CHECK(leq_f(w({4, 3, 3}), w({4, 3, 3}), f));
  CHECK_THROWS_AS(leq_f(w({1, 1, 1}), w({9, 1, 1}), f), input_error);
}

TEST_CASE("prec_f examples") {
  auto f = poly("x0^3+x1^4+x2^4", 3);
  CHECK(prec_f(w({4, 3, 3}), w({1, 1, 1}), f));
  auto quad = quad_counterexample();
  CHECK_FALSE(prec_f(w({2, 1, 2, 1}), w({2, 2, 1, 1}), quad));
  CHECK(prec_f(w({2, 1, 2, 1}), w({2, 1, 2, 1}), quad));
}

TEST_CASE("is_f_minimal examples") {
  auto f3 = double_weight_example(3);
  CHECK(is_f_minimal(w({1, 1, 1}), f3).minimal);
  CHECK(is_f_minimal(w({4, 3, 3}), f3).minimal);

  auto quad = quad_counterexample();
  auto res = is_f_minimal(w({2, 1, 1, 1}), quad);
  CHECK_FALSE(res.minimal);
  CHECK_FALSE(res.in_essential_cone);

  auto single = poly("x0^2+x1^4+x2^4", 3);
  CHECK(is_f_minimal(w({2, 1, 1}), single).minimal);

  // the two cone members defeat each other in the counterexample
  auto r1 = is_f_minimal(w({2, 1, 2, 1}), quad);
  CHECK_FALSE(r1.minimal);
  REQUIRE(r1.counterexample.has_value());
  CHECK(*r1.counterexample == w({2, 2, 1, 1}));
  auto r2 = is_f_minimal(w({2, 2, 1, 1}), quad);
  CHECK_FALSE(r2.minimal);
}

TEST_CASE("unbounded violator families are rejected through their recession rays") {
  // the coordinate-1 failure region of p over the x0^2-vertex subcone is
  // unbounded along (7,2); that ray fails prec_f and defeats minimality
  auto f = poly("x0^2+x1^7", 2);
  WeightVector p = w({2, 1});
  REQUIRE(essential_cone(f).contains(p));
  auto res = is_f_minimal(p, f);
  CHECK_FALSE(res.minimal);
  REQUIRE(res.counterexample.has_value());
  // the witness is a genuine violator of the definition
  auto sub = star_subdivision(p);
  CHECK_FALSE(leq_f(p, *res.counterexample, f));
  bool escape = prec_f(p, *res.counterexample, f) &&
                interior_chart(sub, *res.counterexample).has_value();
  CHECK_FALSE(escape);
}

TEST_CASE("is_f_minimal agrees with a direct scan over small weights") {
  // brute force: test the defining condition against every primitive q in a
  // box; any violation found by the scan must also be found by the decision
  // procedure and vice versa (for counterexamples inside the box).
  std::vector<PolynomialSupport> polys = {double_weight_example(3), poly("x0^2+x1^3+x2^6", 3),
                                          poly("x0^2+x1^4+x2^4", 3),
                                          poly("x0^3+x1^3+x2^4", 3)};
  std::vector<WeightVector> centers = {w({1, 1, 1}), w({4, 3, 3}), w({3, 2, 1}), w({2, 1, 1}),
                                       w({3, 2, 2}), w({1, 2, 1})};
  for (const auto& f : polys) {
    auto E = essential_cone(f);
    for (const auto& p : centers) {
      if (!E.contains(p)) continue;
      auto res = is_f_minimal(p, f);
      StarSubdivision sub = star_subdivision(p);
      auto satisfies = [&](const WeightVector& q) {
        return leq_f(p, q, f) || (prec_f(p, q, f) && interior_chart(sub, q).has_value());
      };
      bool brute_ok = true;
      for (long long x0 = 0; x0 <= 12 && brute_ok; ++x0)
        for (long long x1 = 0; x1 <= 12 && brute_ok; ++x1)
          for (long long x2 = 0; x2 <= 12 && brute_ok; ++x2) {
            if (x0 + x1 + x2 == 0) continue;
            WeightVector q = w({x0, x1, x2});
            if (!q.primitive || !E.contains(q)) continue;
            if (!satisfies(q)) brute_ok = false;
          }
      if (res.minimal) {
        CHECK(brute_ok);
      } else {
        // the reported counterexample must genuinely violate the definition
        REQUIRE(res.counterexample.has_value());
        CHECK(res.counterexample->primitive);
        CHECK(E.contains(*res.counterexample));
        CHECK_FALSE(satisfies(*res.counterexample));
      }
      if (!brute_ok) CHECK_FALSE(res.minimal);
    }
  }
}

TEST_CASE("non-primitive violators reduce to primitive violators") {
  // the lattice-level reduction lemma behind the decision procedure
  std::mt19937_64 rng(321);
  std::vector<PolynomialSupport> polys = {double_weight_example(3), poly("x0^2+x1^3+x2^6", 3),
                                          quad_counterexample()};
  for (const auto& f : polys) {
    auto E = essential_cone(f);
    std::size_t d = static_cast<std::size_t>(f.dim);
    std::vector<WeightVector> centers;
    if (f.dim == 3) centers = {w({1, 1, 1}), w({4, 3, 3}), w({3, 2, 1})};
    else centers = {w({2, 1, 2, 1}), w({2, 2, 1, 1})};
    for (const auto& p : centers) {
      if (!E.contains(p)) continue;
      auto sub = star_subdivision(p);
      for (int trial = 0; trial < 300; ++trial) {
        IntVec qv(d);
        bool nz = false;
        for (auto& x : qv) {
          x = Int(rng() % 8);
          if (x != 0) nz = true;
        }
        if (!nz) continue;
        WeightVector q(qv);
        if (!E.contains(q)) continue;
        Int k = 2 + Int(rng() % 3);
        WeightVector kq(scale(k, qv));
        auto ok = [&](const WeightVector& v) {
          return leq_f(p, v, f) || (prec_f(p, v, f) && interior_chart(sub, v).has_value());
        };
        if (ok(q)) CHECK(ok(kq));
      }
    }
  }
}

TEST_CASE("canonical_weight_verdict examples") {
  auto vq = canonical_weight_verdict(quad_counterexample(), false);
  CHECK(vq.cls.label == SingLabel::LogCanonicalNonCanonical);
  CHECK_FALSE(vq.abs_min.has_value());
  CHECK_FALSE(vq.chosen.has_value());

  auto vw = canonical_weight_verdict(k3_deform_example(0), false);
  REQUIRE(vw.abs_min.has_value());
  CHECK(*vw.abs_min == w({21, 14, 6, 1}));
  REQUIRE(vw.leading_coeff.has_value());
  CHECK(*vw.leading_coeff == Rat(1, 42));
  CHECK(vw.minus_k_cubed);

  auto vt = canonical_weight_verdict(double_weight_example(3), false);
  CHECK(vt.cls.label == SingLabel::NotLogCanonical);
  std::set<IntVec> fmin;
  for (const auto& m : vt.f_minimal) fmin.insert(m.coords);
  CHECK(fmin.count(iv({1, 1, 1})));
  CHECK(fmin.count(iv({4, 3, 3})));
}

TEST_CASE("one-ray essential cones: the facet normal through the all-ones vector is the abs min") {
  for (const auto& text : {"x0^2+x1^4+x2^4", "x0^2+x1^3+x2^6", "x0^3+x1^3+x2^3"}) {
    auto f = poly(text, 3);
    auto np = build_newton(f);
    if (position_of_one(np) != OnePosition::OnCompactFace) continue;
    auto face = face_containing_one(np);
    if (!face.normal_ray) continue;
    auto cone = essential_cone(f);
    REQUIRE(cone.rays().size() == 1);
    CHECK(cone.rays()[0] == *face.normal_ray);
    auto m = absolutely_minimal(cone);
    REQUIRE(m.has_value());
    CHECK(*m == *face.normal_ray);
  }
}

TEST_CASE("quasi-reduced log-canonical supports have an abs min and a meet-closed cone") {
  std::vector<std::string> texts = {
      "x0*x1*x2 + x0^3 + x1^4 + x2^5", "x0*x1*x2 + x0^4 + x1^4 + x2^4",
      "x0*x1*x2*x3 + x0^6 + x1^6 + x2^6 + x3^6", "x0*x1*x2 + x0^2 + x1^5 + x2^9"};
  for (const auto& text : texts) {
    auto f = poly(text, 3 + (text.find("x3") != std::string::npos ? 1 : 0));
    if (!quasi_reduced(f)) continue;
    if (classify(f, true).label != SingLabel::LogCanonicalNonCanonical) continue;
    auto cone = essential_cone(f);
    CHECK(absolutely_minimal(cone).has_value());
    auto h = cone.hilbert_basis();
    for (const auto& a : h)
      for (const auto& b : h) CHECK(meet_closed_under(cone, a, b));
  }
}

TEST_CASE("maximal-ideal corollary: x0...xn + high-degree rest has abs min all-ones") {
  auto f1 = poly("x0*x1*x2 + x0^4 + x1^4 + x1^3*x2^2 + x2^5", 3);
  auto v1 = canonical_weight_verdict(f1, true);
  REQUIRE(v1.abs_min.has_value());
  CHECK(*v1.abs_min == w({1, 1, 1}));

  auto f2 = poly("x0*x1*x2*x3 + x0^5 + x1^5 + x2^5 + x3^5 + x2^3*x3^2", 4);
  auto v2 = canonical_weight_verdict(f2, true);
  REQUIRE(v2.abs_min.has_value());
  CHECK(*v2.abs_min == w({1, 1, 1, 1}));
}

TEST_CASE("zero-coordinate abs min is reported but yields no blow-up center") {
  // contains the x3-axis, so the singularity is not isolated; the essential
  // cone picks up a boundary ray and the minimum has a zero coordinate
  auto f = poly("x0*x1*x2*x3 + x0^5 + x1^5 + x2^5 + x2^3*x3^2", 4);
  auto v = canonical_weight_verdict(f, true);
  REQUIRE(v.abs_min.has_value());
  CHECK_FALSE(is_positive(v.abs_min->coords));
  CHECK_FALSE(v.chosen.has_value());
  bool screen_caveat = false;
  for (const auto& c : v.caveats)
    if (c.find("isolatedness screen failed") != std::string::npos) screen_caveat = true;
  CHECK(screen_caveat);
}

TEST_CASE("an absolutely minimal vector is f-minimal") {
  for (const auto& text :
       {"x0^2+x1^4+x2^4", "x0^2+x1^3+x2^6", "x0*x1*x2 + x0^3 + x1^4 + x2^5"}) {
    auto f = poly(text, 3);
    auto m = absolutely_minimal(essential_cone(f));
    REQUIRE(m.has_value());
    CHECK(is_f_minimal(*m, f).minimal);
  }
  auto fw = k3_deform_example(1);
  auto mw = absolutely_minimal(essential_cone(fw));
  REQUIRE(mw.has_value());
  CHECK(is_f_minimal(*mw, fw).minimal);
}

TEST_CASE("discrepancies examples") {
  auto f = poly("x0^2+x1^4+x2^4", 3);
  auto recs = discrepancies(w({2, 1, 1}), f, {w({1, 1, 1})});
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].chart == 0);
  CHECK(recs[0].m == Rat(1, 2));
  // q(f) = 2 = (1/2) p(f) with q chart-interior: the divisor misses X(p)
  CHECK(recs[0].excluded);

  // the blow-up at (2,1,2,1) is log-terminal but not canonical along (2,2,1,1)
  auto quad = quad_counterexample();
  auto r2 = discrepancies(w({2, 1, 2, 1}), quad, {w({2, 2, 1, 1})});
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].chart == 2);
  CHECK(r2[0].m == Rat(-1, 2));
  CHECK_FALSE(r2[0].excluded);
  CHECK_FALSE(r2[0].wall_tie);

  auto r3 = discrepancies(w({2, 1, 2, 1}), quad, {w({2, 1, 2, 1})});
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].m == 0);
  CHECK(r3[0].wall_tie);

  CHECK_THROWS_AS(discrepancies(w({2, 1, 1}), f, {WeightVector(iv({-1, 0, 0}))}), input_error);
}

TEST_CASE("discrepancy coefficient agrees across a shared wall") {
  // on a wall both adjacent charts give the same q_i/p_i, hence the same m
  auto f = poly("x0^2+x1^4+x2^4", 3);
  WeightVector p = w({2, 1, 1});
  WeightVector q = w({2, 1, 2});  // minimal ratio tied between coordinates 0 and 1
  Int pf = weight_of_poly(p, f);
  Int qf = weight_of_poly(q, f);
  Int P = pf - pairing(p, all_ones(3)) + 1;
  Int Q = qf - pairing(q, all_ones(3)) + 1;
  Rat m0 = Rat(q.coords[0], p.coords[0]) * Rat(P) - Rat(Q);
  Rat m1 = Rat(q.coords[1], p.coords[1]) * Rat(P) - Rat(Q);
  CHECK(m0 == m1);
  auto recs = discrepancies(p, f, {q});
  CHECK(recs[0].wall_tie);
  CHECK(recs[0].m == m0);
}

TEST_CASE("exclusion flag: divisors missing the proper transform in the double-weight example") {
  auto f = double_weight_example(3);
  auto recs = discrepancies(w({4, 3, 3}), f, {w({1, 1, 1})});
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].chart == 0);
  CHECK(recs[0].excluded);  // q(f) = 3 = (1/4) * 12
  CHECK(recs[0].m == Rat(-1, 4));
}

TEST_CASE("discrepancy sign discipline for verified canonical weights") {
  struct Case {
    PolynomialSupport f;
    WeightVector p;
  };
  std::vector<Case> cases = {{poly("x0^2+x1^4+x2^4", 3), w({2, 1, 1})},
                             {poly("x0^2+x1^3+x2^6", 3), w({3, 2, 1})},
                             {k3_deform_example(0), w({21, 14, 6, 1})},
                             {double_weight_example(3), w({1, 1, 1})},
                             {double_weight_example(3), w({4, 3, 3})}};
  for (auto& c : cases) {
    auto cert = is_f_minimal(c.p, c.f);
    REQUIRE(cert.minimal);
    std::vector<WeightVector> cands = essential_cone(c.f).hilbert_basis();
    for (const auto& viol : cert.violators) cands.push_back(viol.q);
    for (const auto& rec : discrepancies(c.p, c.f, cands)) {
      if (!rec.excluded) CHECK(rec.m >= 0);
    }
  }
}

TEST_CASE("leading_coefficient examples") {
  CHECK(leading_coefficient(w({2, 1, 2, 1})) == Rat(3, 2));
  CHECK(leading_coefficient(w({21, 14, 6, 1})) == Rat(1, 42));
  CHECK(leading_coefficient(w({1, 1, 1, 1})) == Rat(4));
  CHECK_THROWS_AS(leading_coefficient(w({1, 0, 1})), input_error);
}

TEST_CASE("leading_coefficient is positive and equals dim at the all-ones weight") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 2 + rng() % 4;
    IntVec v(d);
    for (auto& x : v) x = 1 + Int(rng() % 9);
    CHECK(leading_coefficient(WeightVector(v)) > 0);
    CHECK(leading_coefficient(WeightVector(IntVec(d, 1))) == Rat(d));
  }
}

TEST_CASE("pool search finds every f-minimal weight reachable by a small-box scan") {
  // stress for the candidate-pool completeness of the verdict search
  for (const auto& text : {"x0^3+x1^4+x2^4", "x0^4+x1^5+x2^5", "x0^3+x1^3+x2^4"}) {
    auto f = poly(text, 3);
    REQUIRE(classify(f, true).label == SingLabel::NotLogCanonical);
    auto v = canonical_weight_verdict(f, true);
    std::set<IntVec> found;
    for (const auto& m : v.f_minimal) found.insert(m.coords);
    auto E = essential_cone(f);
    for (long long x0 = 1; x0 <= 6; ++x0)
      for (long long x1 = 1; x1 <= 6; ++x1)
        for (long long x2 = 1; x2 <= 6; ++x2) {
          WeightVector p = w({x0, x1, x2});
          if (!p.primitive || !E.contains(p)) continue;
          if (is_f_minimal(p, f).minimal) CHECK(found.count(p.coords) == 1);
        }
    for (const auto& m : v.f_minimal) CHECK(is_f_minimal(m, f).minimal);
  }
}

TEST_CASE("weights_above_threshold examples") {
  auto ws = weights_above_threshold(4, Rat(3, 2), 6);
  CHECK(!ws.empty());
  for (const auto& v : ws) {
    int ones = 0;
    for (const auto& x : v.coords)
      if (x == 1) ++ones;
    CHECK(ones >= 3);
  }

  auto one = weights_above_threshold(4, Rat(3, 2), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == w({1, 1, 1, 1}));

  auto d3 = weights_above_threshold(3, Rat(1), 2);
  std::set<IntVec> s;
  for (const auto& v : d3) s.insert(v.coords);
  CHECK(s.count(iv({1, 1, 2})));
  CHECK_FALSE(s.count(iv({2, 2, 2})));
}
