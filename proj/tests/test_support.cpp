#include <doctest.h>

#include <random>

#include "canweight/support.hpp"
#include "helpers.hpp"

using namespace canweight;
using namespace canweight::test;

TEST_CASE("pairing examples") {
  CHECK(pairing(w({2, 1, 2, 1}), e({1, 1, 1, 1})) == 6);
  CHECK(pairing(w({21, 14, 6, 1}), e({0, 0, 0, 43})) == 43);
  CHECK(pairing(w({0, 0, 0}), e({5, 1, 2})) == 0);
  CHECK_THROWS_AS(pairing(w({1, 2}), e({1, 2, 3})), input_error);
}

TEST_CASE("weight_of_poly examples") {
  CHECK(weight_of_poly(w({2, 1, 2, 1}), quad_counterexample()) == 6);
  CHECK(weight_of_poly(w({21, 14, 6, 1}), k3_deform_example(0)) == 42);
  CHECK(weight_of_poly(w({1, 1, 1}), double_weight_example(3)) == 3);
  CHECK_THROWS_AS(weight_of_poly(w({-1, 1, 1}), double_weight_example(3)), input_error);
}

TEST_CASE("monomial_divisor_weight examples") {
  CHECK(monomial_divisor_weight(w({1, 1, 1}), poly("x0^2", 3), 2) == Rat(1));
  CHECK(monomial_divisor_weight(w({2, 1, 1}), poly("x0^2+x1^4+x2^4", 3), 1) == Rat(4));
  CHECK(monomial_divisor_weight(w({3, 2, 1}), poly("x0^2+x1^3+x2^6", 3), 2) == Rat(3));
  CHECK_THROWS_AS(monomial_divisor_weight(w({1, 1, 1}), poly("x0^2", 3), 0), input_error);
}

TEST_CASE("make_primitive examples") {
  CHECK(make_primitive(w({4, 2, 4, 2})) == w({2, 1, 2, 1}));
  CHECK(make_primitive(w({21, 14, 6, 1})) == w({21, 14, 6, 1}));
  CHECK(make_primitive(w({6, 4, 2})) == w({3, 2, 1}));
  CHECK_THROWS_AS(make_primitive(w({0, 0})), input_error);
  CHECK(w({2, 1, 2, 1}).primitive);
  CHECK_FALSE(w({4, 2, 4, 2}).primitive);
}

TEST_CASE("parser examples") {
  auto f = poly("x0^2 + x1^4 + x2^4", 3);
  REQUIRE(f.support.size() == 3);
  CHECK(f.support[0] == e({0, 0, 4}));
  CHECK(f.support[1] == e({0, 4, 0}));
  CHECK(f.support[2] == e({2, 0, 0}));

  CHECK(quad_counterexample().support.size() == 6);

  auto g = poly("x0^2 - x0^2 + x1^3", 2);
  REQUIRE(g.support.size() == 1);
  CHECK(g.support[0] == e({0, 3}));

  CHECK_THROWS_AS(poly("x0 + x3", 3), input_error);
  CHECK_THROWS_AS(poly("x0^", 3), input_error);
  CHECK_THROWS_AS(poly("x0 + + x1", 3), input_error);
  CHECK_THROWS_AS(poly("x0^2 - x0^2", 3), input_error);
  CHECK_THROWS_AS(poly("x0^2000000", 3), input_error);

  auto h = poly("3/4*x0*x1 - 2*x2^2", 3);
  REQUIRE(h.has_coeffs());
  CHECK(h.coeffs->at(iv({1, 1, 0})) == Rat(3, 4));
  CHECK(h.coeffs->at(iv({0, 0, 2})) == Rat(-2));
}

TEST_CASE("parse -> serialize -> parse round-trips") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 3);
    int terms = 1 + static_cast<int>(rng() % 5);
    std::vector<ExponentVector> vs;
    std::map<IntVec, Rat> cs;
    for (int t = 0; t < terms; ++t) {
      IntVec ev(static_cast<std::size_t>(dim));
      bool nonzero = false;
      for (auto& x : ev) {
        x = Int(rng() % 5);
        if (x != 0) nonzero = true;
      }
      if (!nonzero) ev[0] = 1;
      if (cs.count(ev)) continue;
      long long num = static_cast<long long>(rng() % 9) - 4;
      if (num == 0) num = 1;
      cs.emplace(ev, Rat(num, 1 + static_cast<long long>(rng() % 4)));
      vs.emplace_back(std::move(ev));
    }
    auto f = make_support(dim, vs, cs);
    auto g = parse_polynomial(to_text(f), dim);
    CHECK(f.support == g.support);
    CHECK(*f.coeffs == *g.coeffs);
  }
}

TEST_CASE("pairing is bilinear on random vectors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 2 + rng() % 4;
    IntVec q1(d), q2(d), av(d);
    for (std::size_t i = 0; i < d; ++i) {
      q1[i] = Int(static_cast<long long>(rng() % 41)) - 20;
      q2[i] = Int(static_cast<long long>(rng() % 41)) - 20;
      av[i] = Int(rng() % 20);
    }
    ExponentVector a(av);
    Int lhs = pairing(WeightVector(add(q1, q2)), a);
    Int rhs = pairing(WeightVector(q1), a) + pairing(WeightVector(q2), a);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("weight_of_poly: attained lower bound and positive homogeneity") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 3);
    int terms = 1 + static_cast<int>(rng() % 4);
    std::vector<ExponentVector> vs;
    std::set<IntVec> seen;
    for (int t = 0; t < terms; ++t) {
      IntVec ev(static_cast<std::size_t>(dim));
      for (auto& x : ev) x = Int(rng() % 7);
      if (seen.insert(ev).second) vs.emplace_back(std::move(ev));
    }
    auto f = make_support(dim, vs);
    IntVec qv(static_cast<std::size_t>(dim));
    for (auto& x : qv) x = Int(rng() % 6);
    WeightVector q(qv);
    Int m = weight_of_poly(q, f);
    bool attained = false;
    for (const auto& a : f.support) {
      Int v = pairing(q, a);
      CHECK(m <= v);
      if (v == m) attained = true;
    }
    CHECK(attained);
    Int k = Int(rng() % 4);
    CHECK(weight_of_poly(WeightVector(scale(k, qv)), f) == k * m);
  }
}

TEST_CASE("make_primitive is idempotent and ray-preserving") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 2 + rng() % 4;
    IntVec v(d);
    bool nonzero = false;
    for (auto& x : v) {
      x = Int(static_cast<long long>(rng() % 19)) - 9;
      if (x != 0) nonzero = true;
    }
    if (!nonzero) v[0] = 3;
    WeightVector q(v);
    WeightVector p = make_primitive(q);
    CHECK(p.primitive);
    CHECK(make_primitive(p) == p);
    // output = input / content: cross-multiplication preserves the ray
    Int g = content(v);
    CHECK(scale(g, p.coords) == q.coords);
  }
}
