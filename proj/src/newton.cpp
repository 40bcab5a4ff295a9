#include "canweight/newton.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace canweight {

namespace {

bool dominates(const IntVec& a, const IntVec& b) {
  // b <= a componentwise
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] > a[i]) return false;
  return true;
}

}  // namespace

bool NewtonPolyhedron::member(const IntVec& a) const {
  for (const auto& fc : facets)
    if (dot(fc.normal.coords, a) < fc.offset) return false;
  for (const auto& x : a)
    if (x < 0) return false;
  return true;
}

NewtonPolyhedron build_newton(const PolynomialSupport& f) {
  NewtonPolyhedron np;
  np.dim = f.dim;

  for (const auto& a : f.support) {
    bool minimal = true;
    for (const auto& b : f.support) {
      if (b == a) continue;
      if (dominates(a.coords, b.coords)) {
        minimal = false;
        break;
      }
    }
    if (minimal) np.generators.push_back(a);
  }

  // Facets of conv(generators) + orthant via the lifted cone
  // cone{(g,1)} + cone{(e_i,0)}; its dual's extreme rays (q,c) with q != 0
  // give the inequalities q.a >= -c.
  std::size_t d = static_cast<std::size_t>(f.dim);
  std::vector<IntVec> lifted;
  for (const auto& g : np.generators) {
    IntVec v = g.coords;
    v.push_back(1);
    lifted.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < d; ++i) {
    IntVec v(d + 1, 0);
    v[i] = 1;
    lifted.push_back(std::move(v));
  }
  ConeDescription dual = dual_description(f.dim + 1, lifted);
  check_invariant(dual.lineality.empty(), "newton: lifted cone is not full-dimensional");

  for (const auto& ray : dual.rays) {
    IntVec q(ray.begin(), ray.end() - 1);
    if (is_zero(q)) continue;  // the trivial t >= 0 constraint
    check_invariant(is_nonnegative(q), "newton: facet normal with a negative entry");
    NewtonFacet fc;
    fc.offset = -ray.back();
    fc.normal = WeightVector(std::move(q));
    fc.compact = is_positive(fc.normal.coords);
    np.facets.push_back(std::move(fc));
  }
  std::sort(np.facets.begin(), np.facets.end(), [](const NewtonFacet& a, const NewtonFacet& b) {
    if (a.normal.coords != b.normal.coords) return lex_less(a.normal.coords, b.normal.coords);
    return a.offset < b.offset;
  });

  for (const auto& g : np.generators)
    check_invariant(np.member(g.coords), "newton: generator violates a facet");
  return np;
}

OnePosition position_of_one(const NewtonPolyhedron& np) {
  bool tight = false;
  IntVec one(static_cast<std::size_t>(np.dim), 1);
  for (const auto& fc : np.facets) {
    Int v = dot(fc.normal.coords, one);
    if (v < fc.offset) return OnePosition::Outside;
    if (v == fc.offset) tight = true;
  }
  return tight ? OnePosition::OnCompactFace : OnePosition::Interior;
}

std::string to_string(SingLabel label) {
  switch (label) {
    case SingLabel::Canonical:
      return "canonical";
    case SingLabel::LogCanonicalNonCanonical:
      return "log-canonical, non-canonical";
    case SingLabel::NotLogCanonical:
      return "not log-canonical";
  }
  return "?";
}

std::string kappa_to_string(const SingularityClass& cls) {
  return cls.kappa ? std::to_string(*cls.kappa) : "-infinity";
}

std::string to_string(NondegVerdict v) {
  switch (v) {
    case NondegVerdict::NonDegenerate:
      return "non-degenerate";
    case NondegVerdict::Degenerate:
      return "degenerate";
    case NondegVerdict::Undecided:
      return "undecided";
  }
  return "?";
}

SingularityClass classify(const PolynomialSupport& f, bool assume_nondegenerate) {
  SingularityClass cls;
  switch (position_of_one(build_newton(f))) {
    case OnePosition::Interior:
      cls.label = SingLabel::Canonical;
      cls.kappa = std::nullopt;
      break;
    case OnePosition::OnCompactFace:
      cls.label = SingLabel::LogCanonicalNonCanonical;
      cls.kappa = 0;
      break;
    case OnePosition::Outside:
      cls.label = SingLabel::NotLogCanonical;
      cls.kappa = f.dim - 1;
      break;
  }
  if (assume_nondegenerate) {
    cls.nondegeneracy = NondegStatus::Assumed;
  } else if (f.has_coeffs()) {
    cls.nondegeneracy = NondegStatus::CheckedLimited;
    cls.nondeg_verdict = check_nondegeneracy_limited(f);
  } else {
    cls.nondegeneracy = NondegStatus::Unchecked;
  }
  return cls;
}

FaceOfOne face_containing_one(const NewtonPolyhedron& np) {
  require(position_of_one(np) == OnePosition::OnCompactFace,
          "face_containing_one: the all-ones vector is not on a compact face");
  IntVec one(static_cast<std::size_t>(np.dim), 1);
  std::vector<const NewtonFacet*> tight;
  for (const auto& fc : np.facets)
    if (dot(fc.normal.coords, one) == fc.offset) tight.push_back(&fc);

  FaceOfOne face;
  std::vector<IntVec> normals;
  for (const auto* fc : tight) normals.push_back(fc->normal.coords);
  face.dim = np.dim - rank_of(normals);
  for (const auto& g : np.generators) {
    bool on = true;
    for (const auto* fc : tight) {
      if (dot(fc->normal.coords, g.coords) != fc->offset) {
        on = false;
        break;
      }
    }
    if (on) face.generators.push_back(g);
  }
  if (face.dim == np.dim - 1) {
    for (const auto* fc : tight) {
      if (fc->compact) {
        face.normal_ray = fc->normal;
        break;
      }
    }
  }
  return face;
}

namespace {

// Lattice points on compact faces of Gamma_+(f). Compact faces lie in
// conv(generators), so a box scan suffices.
template <typename Fn>
void for_each_compact_face_point(const NewtonPolyhedron& np, Fn&& fn) {
  std::size_t d = static_cast<std::size_t>(np.dim);
  IntVec hi(d, 0);
  for (const auto& g : np.generators)
    for (std::size_t j = 0; j < d; ++j)
      if (g.coords[j] > hi[j]) hi[j] = g.coords[j];
  Int cells = 1;
  for (std::size_t j = 0; j < d; ++j) cells *= hi[j] + 1;
  if (cells > Int(work_cap()))
    throw resource_error("compact-face scan box " + cells.str() + " exceeds the work cap");

  IntVec a(d, 0);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == d) {
      std::vector<const NewtonFacet*> tight;
      for (const auto& fc : np.facets) {
        Int v = dot(fc.normal.coords, a);
        if (v < fc.offset) return;  // outside Gamma_+
        if (v == fc.offset) tight.push_back(&fc);
      }
      if (tight.empty()) return;  // interior point
      // minimal face is compact iff every coordinate is covered by a tight normal
      for (std::size_t m = 0; m < d; ++m) {
        bool covered = false;
        for (const auto* fc : tight) {
          if (fc->normal.coords[m] > 0) {
            covered = true;
            break;
          }
        }
        if (!covered) return;
      }
      fn(a);
      return;
    }
    for (Int v = 0; v <= hi[j]; ++v) {
      a[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

bool quasi_reduced(const PolynomialSupport& f) {
  NewtonPolyhedron np = build_newton(f);
  bool ok = true;
  for_each_compact_face_point(np, [&](const IntVec& a) {
    int big = 0;
    for (const auto& x : a)
      if (x >= 2) ++big;
    if (big > 1) ok = false;
  });
  return ok;
}

std::optional<ExponentVector> is_type_T(const PolynomialSupport& f) {
  std::size_t d = static_cast<std::size_t>(f.dim);
  if (f.support.size() != d + 1) return std::nullopt;
  IntVec a(d, 0);
  bool saw_ones = false;
  for (const auto& s : f.support) {
    int nonzero = 0;
    std::size_t axis = 0;
    bool ones = true;
    for (std::size_t j = 0; j < d; ++j) {
      if (s.coords[j] != 1) ones = false;
      if (s.coords[j] != 0) {
        ++nonzero;
        axis = j;
      }
    }
    if (ones) {
      saw_ones = true;
      continue;
    }
    if (nonzero != 1) return std::nullopt;
    if (a[axis] != 0) return std::nullopt;  // two monomials on one axis
    a[axis] = s.coords[axis];
  }
  if (!saw_ones) return std::nullopt;
  for (std::size_t j = 0; j < d; ++j)
    if (a[j] == 0) return std::nullopt;
  Rat sum = 0;
  for (std::size_t j = 0; j < d; ++j) sum += Rat(1, a[j]);
  if (sum >= 1) return std::nullopt;
  return ExponentVector(std::move(a));
}

// ---------------------------------------------------------------------------
// Limited Kouchnirenko check

namespace {

using Poly = std::vector<Rat>;  // coefficient of t^i at index i

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rat(i) * p[i]);
  trim(d);
  return d;
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (degree(a) >= degree(b)) {
    Rat fac = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= fac * b[i];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// does p have a nonzero complex root?
bool has_nonzero_root(const Poly& p) {
  std::size_t first = 0;
  while (first < p.size() && p[first] == 0) ++first;
  if (first >= p.size()) return false;  // zero polynomial handled by callers
  return p.size() - 1 - first >= 1;     // positive degree after stripping t^k
}

struct FacePoints {
  std::vector<IntVec> exps;
  std::vector<Rat> coeffs;
};

// one face: NonDegenerate / Degenerate / Undecided
NondegVerdict check_face(const FacePoints& fp, std::size_t d) {
  std::vector<std::size_t> vars;
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& e : fp.exps) {
      if (e[j] > 0) {
        vars.push_back(j);
        break;
      }
    }
  }
  // all partials single monomials -> no torus critical point
  bool all_monomial = true;
  for (std::size_t j : vars) {
    int terms = 0;
    for (const auto& e : fp.exps)
      if (e[j] >= 1) ++terms;
    if (terms > 1) {
      all_monomial = false;
      break;
    }
  }
  if (all_monomial) return NondegVerdict::NonDegenerate;

  if (vars.size() == 1) {
    // derivative has >= 2 terms with distinct exponents, hence a nonzero root
    return NondegVerdict::Degenerate;
  }
  if (vars.size() != 2) return NondegVerdict::Undecided;

  std::size_t iu = vars[0], iv = vars[1];
  // projected points must be collinear; otherwise the face polynomial has a
  // two-dimensional diagram and is out of the limited checker's scope
  Int du = 0, dv = 0;
  for (std::size_t i = 1; i < fp.exps.size(); ++i) {
    Int su = fp.exps[i][iu] - fp.exps[0][iu];
    Int sv = fp.exps[i][iv] - fp.exps[0][iv];
    if (su == 0 && sv == 0) continue;
    if (du == 0 && dv == 0) {
      Int g = gcd(abs(su), abs(sv));
      du = su / g;
      dv = sv / g;
    } else if (su * dv != sv * du) {
      return NondegVerdict::Undecided;
    }
  }
  check_invariant(du != 0 || dv != 0, "face with repeated support points");

  // parameters along the direction
  std::vector<Int> k(fp.exps.size());
  for (std::size_t i = 0; i < fp.exps.size(); ++i) {
    Int su = fp.exps[i][iu] - fp.exps[0][iu];
    Int sv = fp.exps[i][iv] - fp.exps[0][iv];
    k[i] = (du != 0) ? su / du : sv / dv;
  }
  Int kmin = k[0], kmax = k[0];
  std::size_t base = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < kmin) {
      kmin = k[i];
      base = i;
    }
    if (k[i] > kmax) kmax = k[i];
  }
  if (kmax - kmin > 100000)
    throw resource_error("face polynomial degree too large for the exact gcd test");

  std::size_t deg = static_cast<std::size_t>(static_cast<long long>(kmax - kmin));
  Poly g(deg + 1, Rat(0));
  for (std::size_t i = 0; i < k.size(); ++i)
    g[static_cast<std::size_t>(static_cast<long long>(k[i] - kmin))] += fp.coeffs[i];
  trim(g);

  const Int P0 = fp.exps[base][iu];
  const Int Q0 = fp.exps[base][iv];
  Int delta = P0 * dv - Q0 * du;
  if (delta != 0) {
    // critical points need a repeated nonzero root of g
    Poly gd = derivative(g);
    if (gd.empty()) return NondegVerdict::NonDegenerate;
    Poly h = poly_gcd(g, gd);
    return has_nonzero_root(h) ? NondegVerdict::Degenerate : NondegVerdict::NonDegenerate;
  }
  // proportional equations: alpha*g + beta*t*g' must have no nonzero root
  Rat alpha, beta;
  if (P0 != 0 || du != 0) {
    alpha = Rat(P0);
    beta = Rat(du);
  } else {
    alpha = Rat(Q0);
    beta = Rat(dv);
  }
  Poly h(g.size(), Rat(0));
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = (alpha + beta * Rat(i)) * g[i];
  trim(h);
  if (h.empty()) return NondegVerdict::Degenerate;  // every torus point is critical
  return has_nonzero_root(h) ? NondegVerdict::Degenerate : NondegVerdict::NonDegenerate;
}

}  // namespace

NondegVerdict check_nondegeneracy_limited(const PolynomialSupport& f) {
  require(f.has_coeffs(), "non-degeneracy check needs exact coefficients");
  NewtonPolyhedron np = build_newton(f);
  std::size_t d = static_cast<std::size_t>(f.dim);

  // tight facet sets per support point; faces are their intersection closure
  std::vector<std::vector<int>> point_tight(f.support.size());
  for (std::size_t i = 0; i < f.support.size(); ++i) {
    for (int fi = 0; fi < static_cast<int>(np.facets.size()); ++fi) {
      const auto& fc = np.facets[static_cast<std::size_t>(fi)];
      if (dot(fc.normal.coords, f.support[i].coords) == fc.offset)
        point_tight[i].push_back(fi);
    }
  }
  std::set<std::vector<int>> faces(point_tight.begin(), point_tight.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<int>> snapshot(faces.begin(), faces.end());
    for (const auto& a : snapshot) {
      for (const auto& b : point_tight) {
        std::vector<int> c;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
        if (!c.empty() && faces.insert(c).second) changed = true;
      }
    }
  }

  bool any_undecided = false;
  for (const auto& T : faces) {
    // compact iff every coordinate is covered by some tight normal
    bool compact = true;
    for (std::size_t m = 0; m < d && compact; ++m) {
      bool covered = false;
      for (int fi : T) {
        if (np.facets[static_cast<std::size_t>(fi)].normal.coords[m] > 0) {
          covered = true;
          break;
        }
      }
      compact = covered;
    }
    if (!compact) continue;

    FacePoints fp;
    for (std::size_t i = 0; i < f.support.size(); ++i) {
      if (std::includes(point_tight[i].begin(), point_tight[i].end(), T.begin(), T.end())) {
        fp.exps.push_back(f.support[i].coords);
        fp.coeffs.push_back(f.coeffs->at(f.support[i].coords));
      }
    }
    if (fp.exps.empty()) continue;
    switch (check_face(fp, d)) {
      case NondegVerdict::Degenerate:
        return NondegVerdict::Degenerate;
      case NondegVerdict::Undecided:
        any_undecided = true;
        break;
      case NondegVerdict::NonDegenerate:
        break;
    }
  }
  return any_undecided ? NondegVerdict::Undecided : NondegVerdict::NonDegenerate;
}

}  // namespace canweight
