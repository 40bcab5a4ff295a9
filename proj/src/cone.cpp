#include "canweight/cone.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace canweight {

namespace {

std::vector<IntVec> canonical_forms(int dim, std::vector<IntVec> forms) {
  std::vector<IntVec> out;
  for (auto& f : forms) {
    require(static_cast<int>(f.size()) == dim, "form dimension mismatch");
    IntVec r = reduced(std::move(f));
    if (!is_zero(r)) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct DDRay {
  IntVec v;
  std::vector<int> tight;  // indices of processed forms vanishing on v, sorted
};

bool tight_subset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<int> tight_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Combinatorial adjacency test (Fukuda-Prodon): p and n span an edge iff no
// third extreme ray is tight on every processed form tight on both.
bool dd_adjacent(const std::vector<DDRay>& rays, std::size_t ip, std::size_t in) {
  auto common = tight_intersection(rays[ip].tight, rays[in].tight);
  for (std::size_t k = 0; k < rays.size(); ++k) {
    if (k == ip || k == in) continue;
    if (tight_subset(common, rays[k].tight)) return false;
  }
  return true;
}

}  // namespace

ConeDescription double_description(int dim, std::vector<IntVec> forms_in) {
  require(dim >= 1, "cone dimension must be at least 1");
  std::vector<IntVec> forms = canonical_forms(dim, std::move(forms_in));

  std::vector<IntVec> lin;
  for (int i = 0; i < dim; ++i) {
    IntVec e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(i)] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<DDRay> rays;

  for (int t = 0; t < static_cast<int>(forms.size()); ++t) {
    const IntVec& L = forms[static_cast<std::size_t>(t)];

    // If the lineality space is not orthogonal to L, consume one basis vector.
    std::size_t pivot = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i) {
      if (dot(L, lin[i]) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < lin.size()) {
      IntVec v = lin[pivot];
      Int lv = dot(L, v);
      if (lv < 0) {
        v = scale(-1, v);
        lv = -lv;
      }
      std::vector<IntVec> newlin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pivot) continue;
        newlin.push_back(reduced(combine(lv, lin[i], -dot(L, lin[i]), v)));
      }
      lin = std::move(newlin);
      for (auto& r : rays) {
        r.v = reduced(combine(lv, r.v, -dot(L, r.v), v));
        r.tight.push_back(t);  // projected into ker L
      }
      DDRay nr;
      nr.v = reduced(std::move(v));
      nr.tight.resize(static_cast<std::size_t>(t));
      for (int j = 0; j < t; ++j) nr.tight[static_cast<std::size_t>(j)] = j;
      rays.push_back(std::move(nr));
      continue;
    }

    std::vector<Int> val(rays.size());
    bool any_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(L, rays[i].v);
      if (val[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) rays[i].tight.push_back(t);
      continue;
    }

    std::vector<DDRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] > 0) {
        next.push_back(rays[i]);
      } else if (val[i] == 0) {
        DDRay z = rays[i];
        z.tight.push_back(t);
        next.push_back(std::move(z));
      }
    }
    for (std::size_t ip = 0; ip < rays.size(); ++ip) {
      if (val[ip] <= 0) continue;
      for (std::size_t in = 0; in < rays.size(); ++in) {
        if (val[in] >= 0) continue;
        if (!dd_adjacent(rays, ip, in)) continue;
        DDRay w;
        w.v = reduced(combine(val[ip], rays[in].v, -val[in], rays[ip].v));
        w.tight = tight_intersection(rays[ip].tight, rays[in].tight);
        w.tight.push_back(t);
        next.push_back(std::move(w));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const DDRay& a, const DDRay& b) { return lex_less(a.v, b.v); });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const DDRay& a, const DDRay& b) { return a.v == b.v; }),
               next.end());
    rays = std::move(next);
  }

  ConeDescription out;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  std::sort(out.rays.begin(), out.rays.end(),
            [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  for (auto& b : lin) out.lineality.push_back(reduced(std::move(b)));
  std::sort(out.lineality.begin(), out.lineality.end(),
            [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  return out;
}

ConeDescription dual_description(int dim, const std::vector<IntVec>& rays,
                                 const std::vector<IntVec>& lineality) {
  std::vector<IntVec> forms = rays;
  for (const auto& b : lineality) {
    forms.push_back(b);
    forms.push_back(scale(-1, b));
  }
  return double_description(dim, std::move(forms));
}

int rank_of(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 0;
  std::size_t d = rows[0].size();
  std::vector<std::vector<Rat>> m;
  for (const auto& r : rows) {
    check_invariant(r.size() == d, "rank_of: ragged rows");
    std::vector<Rat> row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = Rat(r[j]);
    m.push_back(std::move(row));
  }
  int rank = 0;
  std::size_t col = 0;
  for (std::size_t rrow = 0; rrow < m.size() && col < d; ++col) {
    std::size_t piv = m.size();
    for (std::size_t i = rrow; i < m.size(); ++i) {
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == m.size()) continue;
    std::swap(m[rrow], m[piv]);
    for (std::size_t i = rrow + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      Rat fac = m[i][col] / m[rrow][col];
      for (std::size_t j = col; j < d; ++j) m[i][j] -= fac * m[rrow][j];
    }
    ++rank;
    ++rrow;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// RationalCone

struct RationalCone::Impl {
  int dim = 0;
  std::vector<IntVec> hrep;
  std::vector<WeightVector> rays;
  std::vector<IntVec> lineality;
  bool full_space = false;
  mutable std::mutex mu;
  mutable std::optional<std::vector<WeightVector>> hilbert;
};

RationalCone RationalCone::from_inequalities(int dim, std::vector<IntVec> forms) {
  auto impl = std::make_shared<Impl>();
  impl->dim = dim;
  impl->hrep = canonical_forms(dim, std::move(forms));
  impl->full_space = impl->hrep.empty();
  ConeDescription d = double_description(dim, impl->hrep);
  for (auto& r : d.rays) impl->rays.emplace_back(std::move(r));
  impl->lineality = std::move(d.lineality);
  RationalCone c;
  c.impl_ = std::move(impl);
  return c;
}

int RationalCone::dim() const { return impl_->dim; }
const std::vector<IntVec>& RationalCone::hrep() const { return impl_->hrep; }
const std::vector<WeightVector>& RationalCone::rays() const { return impl_->rays; }
const std::vector<IntVec>& RationalCone::lineality() const { return impl_->lineality; }
bool RationalCone::pointed() const { return impl_->lineality.empty(); }
bool RationalCone::is_zero_cone() const {
  return impl_->rays.empty() && impl_->lineality.empty();
}
bool RationalCone::full_space() const { return impl_->full_space; }

bool RationalCone::contains(const IntVec& q) const {
  require(static_cast<int>(q.size()) == impl_->dim, "contains: dimension mismatch");
  for (const auto& f : impl_->hrep)
    if (dot(f, q) < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Triangulation of a pointed cone on its extreme rays (pulling triangulation
// over the face lattice derived from form incidences).

namespace {

using RaySet = std::vector<int>;  // sorted ray indices

std::vector<RaySet> all_faces(const std::vector<IntVec>& rayvecs,
                              const std::vector<IntVec>& forms) {
  int n = static_cast<int>(rayvecs.size());
  RaySet full(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) full[static_cast<std::size_t>(i)] = i;
  std::vector<RaySet> incidences;
  for (const auto& f : forms) {
    RaySet inc;
    for (int i = 0; i < n; ++i)
      if (dot(f, rayvecs[static_cast<std::size_t>(i)]) == 0) inc.push_back(i);
    incidences.push_back(std::move(inc));
  }
  std::set<RaySet> faces;
  faces.insert(full);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<RaySet> snapshot(faces.begin(), faces.end());
    for (const auto& F : snapshot) {
      for (const auto& inc : incidences) {
        RaySet g = tight_intersection(F, inc);
        if (!g.empty() && faces.insert(g).second) changed = true;
      }
    }
  }
  return {faces.begin(), faces.end()};
}

struct Triangulator {
  const std::vector<IntVec>& rayvecs;
  std::vector<RaySet> faces;
  std::map<RaySet, int> rank_memo;
  std::map<RaySet, std::vector<RaySet>> simplex_memo;

  int rank(const RaySet& F) {
    auto it = rank_memo.find(F);
    if (it != rank_memo.end()) return it->second;
    std::vector<IntVec> rows;
    for (int i : F) rows.push_back(rayvecs[static_cast<std::size_t>(i)]);
    int r = rank_of(rows);
    rank_memo.emplace(F, r);
    return r;
  }

  std::vector<RaySet> facets_of(const RaySet& F) {
    std::vector<RaySet> subs;
    for (const auto& G : faces) {
      if (G.size() >= F.size()) continue;
      if (tight_subset(G, F) && G != F) subs.push_back(G);
    }
    std::vector<RaySet> maximal;
    for (const auto& G : subs) {
      bool is_max = true;
      for (const auto& H : subs) {
        if (H != G && tight_subset(G, H)) {
          is_max = false;
          break;
        }
      }
      if (is_max) maximal.push_back(G);
    }
    return maximal;
  }

  const std::vector<RaySet>& triangulate(const RaySet& F) {
    auto it = simplex_memo.find(F);
    if (it != simplex_memo.end()) return it->second;
    std::vector<RaySet> result;
    if (static_cast<int>(F.size()) == rank(F)) {
      result.push_back(F);
    } else {
      int apex = F.front();
      for (const auto& G : facets_of(F)) {
        if (std::binary_search(G.begin(), G.end(), apex)) continue;
        for (const auto& s : triangulate(G)) {
          RaySet with = s;
          with.insert(std::lower_bound(with.begin(), with.end(), apex), apex);
          result.push_back(std::move(with));
        }
      }
      check_invariant(!result.empty(), "triangulation produced no simplices");
    }
    auto [pos, ok] = simplex_memo.emplace(F, std::move(result));
    (void)ok;
    return pos->second;
  }
};

}  // namespace

std::vector<IntVec> parallelepiped_points(const std::vector<IntVec>& rays) {
  check_invariant(!rays.empty(), "parallelepiped of nothing");
  std::size_t k = rays.size();
  std::size_t d = rays[0].size();

  // Diagonalize the d x k matrix with ray columns via row and column
  // operations, tracking column operations in V.
  std::vector<IntVec> A(d, IntVec(k, 0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < d; ++i) A[i][j] = rays[j][i];
  std::vector<IntVec> V(k, IntVec(k, 0));
  for (std::size_t j = 0; j < k; ++j) V[j][j] = 1;

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d; ++i) std::swap(A[i][a], A[i][b]);
    for (std::size_t i = 0; i < k; ++i) std::swap(V[i][a], V[i][b]);
  };
  auto negate_col = [&](std::size_t a) {
    for (std::size_t i = 0; i < d; ++i) A[i][a] = -A[i][a];
    for (std::size_t i = 0; i < k; ++i) V[i][a] = -V[i][a];
  };
  auto addmul_col = [&](std::size_t dst, const Int& c, std::size_t src) {
    for (std::size_t i = 0; i < d; ++i) A[i][dst] += c * A[i][src];
    for (std::size_t i = 0; i < k; ++i) V[i][dst] += c * V[i][src];
  };

  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      std::size_t pi = d, pj = k;
      Int best = 0;
      for (std::size_t i = t; i < d; ++i) {
        for (std::size_t j = t; j < k; ++j) {
          if (A[i][j] == 0) continue;
          Int a = abs(A[i][j]);
          if (pi == d || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      }
      check_invariant(pi != d, "parallelepiped: rays are linearly dependent");
      if (pi != t) std::swap(A[pi], A[t]);
      swap_cols(pj, t);
      if (A[t][t] < 0) negate_col(t);
      bool clean = true;
      for (std::size_t i = t + 1; i < d; ++i) {
        if (A[i][t] == 0) continue;
        Int q = A[i][t] / A[t][t];
        if (q != 0)
          for (std::size_t j = t; j < k; ++j) A[i][j] -= q * A[t][j];
        if (A[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (A[t][j] == 0) continue;
        Int q = A[t][j] / A[t][t];
        if (q != 0) addmul_col(j, -q, t);
        if (A[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
  }

  IntVec diag(k);
  Int cells = 1;
  for (std::size_t t = 0; t < k; ++t) {
    diag[t] = A[t][t];
    check_invariant(diag[t] > 0, "parallelepiped: zero diagonal");
    cells *= diag[t];
  }
  if (cells > Int(work_cap()))
    throw resource_error("parallelepiped cell count " + cells.str() +
                         " exceeds the work cap (CANWEIGHT_MAX_CELLS)");

  // lambda = frac(V * (counter / diag)) with all arithmetic over the common
  // denominator D: numer(lambda_i) = sum_j V[i][j] * (D/diag[j]) * t_j mod D
  Int D = 1;
  for (std::size_t t = 0; t < k; ++t) D = lcm(D, diag[t]);
  std::vector<IntVec> weight(k, IntVec(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Int wv = (V[i][j] * (D / diag[j])) % D;
      if (wv < 0) wv += D;
      weight[i][j] = wv;
    }
  }

  std::vector<IntVec> points;
  IntVec counter(k, 0), numer(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) {
      Int n = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (counter[j] != 0 && weight[i][j] != 0) n += weight[i][j] * counter[j];
      }
      numer[i] = n % D;
    }
    IntVec x(d);
    bool integral = true;
    for (std::size_t i = 0; i < d; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (numer[j] != 0) s += numer[j] * rays[j][i];
      }
      if (s % D != 0) {
        integral = false;
        break;
      }
      x[i] = s / D;
    }
    check_invariant(integral, "parallelepiped point is not integral");
    points.push_back(std::move(x));

    std::size_t c = 0;
    while (c < k) {
      counter[c] += 1;
      if (counter[c] < diag[c]) break;
      counter[c] = 0;
      ++c;
    }
    if (c == k) break;
  }
  std::sort(points.begin(), points.end(),
            [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

const std::vector<WeightVector>& RationalCone::hilbert_basis() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (impl_->hilbert) return *impl_->hilbert;
  require(pointed(), "hilbert basis requires a pointed cone");

  std::vector<WeightVector> basis;
  if (!impl_->rays.empty()) {
    std::vector<IntVec> rayvecs;
    for (const auto& r : impl_->rays) rayvecs.push_back(r.coords);

    Triangulator tri{rayvecs, all_faces(rayvecs, impl_->hrep), {}, {}};
    RaySet full(rayvecs.size());
    for (std::size_t i = 0; i < rayvecs.size(); ++i) full[i] = static_cast<int>(i);
    const auto& simplices = tri.triangulate(full);

    std::set<IntVec> cand(rayvecs.begin(), rayvecs.end());
    for (const auto& s : simplices) {
      std::vector<IntVec> srays;
      for (int i : s) srays.push_back(rayvecs[static_cast<std::size_t>(i)]);
      for (auto& p : parallelepiped_points(srays)) {
        if (!is_zero(p)) cand.insert(std::move(p));
      }
    }

    // grade by a functional strictly positive on the cone minus the origin
    // (the sum of all defining forms); a candidate is reducible iff some
    // already-kept irreducible element can be subtracted within the cone
    IntVec grade(static_cast<std::size_t>(impl_->dim), 0);
    for (const auto& f : impl_->hrep) grade = add(grade, f);
    std::vector<std::pair<Int, IntVec>> candidates;
    candidates.reserve(cand.size());
    for (const auto& x : cand) {
      Int g = dot(grade, x);
      check_invariant(g > 0, "grading functional not positive on a candidate");
      candidates.emplace_back(std::move(g), x);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return lex_less(a.second, b.second);
              });
    std::vector<IntVec> kept;
    for (const auto& [g, x] : candidates) {
      bool reducible = false;
      for (const auto& y : kept) {
        IntVec diff = sub(x, y);
        if (is_zero(diff)) continue;
        bool inside = true;
        for (const auto& f : impl_->hrep) {
          if (dot(f, diff) < 0) {
            inside = false;
            break;
          }
        }
        if (inside) {
          reducible = true;
          break;
        }
      }
      if (!reducible) kept.push_back(x);
    }
    for (auto& x : kept) basis.emplace_back(std::move(x));
    std::sort(basis.begin(), basis.end(),
              [](const WeightVector& a, const WeightVector& b) { return lex_less(a, b); });
  }
  impl_->hilbert = std::move(basis);
  return *impl_->hilbert;
}

WeightVector componentwise_min(const std::vector<WeightVector>& vs) {
  require(!vs.empty(), "componentwise_min of an empty list");
  IntVec m = vs[0].coords;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    require(vs[i].coords.size() == m.size(), "componentwise_min: dimension mismatch");
    for (std::size_t j = 0; j < m.size(); ++j)
      if (vs[i].coords[j] < m[j]) m[j] = vs[i].coords[j];
  }
  return WeightVector(std::move(m));
}

bool meet_closed_under(const RationalCone& c, const WeightVector& p, const WeightVector& q) {
  require(c.contains(p) && c.contains(q), "meet_closed_under: inputs must lie in the cone");
  return c.contains(componentwise_min({p, q}));
}

std::vector<WeightVector> lattice_points_under(const RationalCone& c, const IntVec& form,
                                               const Int& bound) {
  require(static_cast<int>(form.size()) == c.dim(), "lattice_points_under: dimension mismatch");
  if (c.is_zero_cone()) return {};
  require(c.pointed(), "lattice_points_under: cone must be pointed");
  for (const auto& r : c.rays()) {
    require(dot(form, r.coords) > 0,
            "lattice_points_under: form is not strictly positive on an extreme ray (enumeration "
            "would be infinite)");
  }
  std::vector<WeightVector> out;
  if (bound <= 0) return out;

  std::size_t d = static_cast<std::size_t>(c.dim());
  // The slab {q in c : form(q) <= bound} is conv{0, bound*r/form(r)}; bound
  // each coordinate over its vertices.
  std::vector<Int> lo(d, 0), hi(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    Rat mn(0), mx(0);
    for (const auto& r : c.rays()) {
      Rat v = Rat(bound * r.coords[j], dot(form, r.coords));
      if (v < mn) mn = v;
      if (v > mx) mx = v;
    }
    lo[j] = ceil_rat(mn);
    hi[j] = floor_rat(mx);
  }
  Int cells = 1;
  for (std::size_t j = 0; j < d; ++j) {
    Int w = hi[j] - lo[j] + 1;
    if (w <= 0) return out;
    cells *= w;
  }
  if (cells > Int(work_cap()))
    throw resource_error("lattice enumeration box " + cells.str() +
                         " exceeds the work cap (CANWEIGHT_MAX_CELLS)");

  IntVec q(d);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == d) {
      if (is_zero(q)) return;
      if (dot(form, q) > bound) return;
      if (!c.contains(q)) return;
      out.emplace_back(q);
      return;
    }
    for (Int v = lo[j]; v <= hi[j]; ++v) {
      q[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const WeightVector& a, const WeightVector& b) { return lex_less(a, b); });
  return out;
}

SimplicialFrame simplicial_frame(std::vector<WeightVector> generators) {
  require(!generators.empty(), "frame needs generators");
  std::size_t d = generators[0].coords.size();
  require(generators.size() == d, "a simplicial frame needs exactly dim generators");
  for (const auto& g : generators) {
    require(g.coords.size() == d, "frame generator dimension mismatch");
    require(g.primitive, "frame generators must be primitive");
  }

  // Gauss-Jordan on [A | I], rows of A = generators.
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(2 * d, Rat(0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = Rat(generators[i].coords[j]);
    m[i][d + i] = 1;
  }
  Rat det(1);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = d;
    for (std::size_t i = col; i < d; ++i) {
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    }
    require(piv != d, "dependent generators");
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rat inv = 1 / m[col][col];
    for (std::size_t j = 0; j < 2 * d; ++j) m[col][j] *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rat fac = m[i][col];
      for (std::size_t j = col; j < 2 * d; ++j) m[i][j] -= fac * m[col][j];
    }
  }

  SimplicialFrame frame;
  frame.generators = std::move(generators);
  frame.dual_basis.assign(d, std::vector<Rat>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) frame.dual_basis[j][i] = m[i][d + j];
  frame.multipliers.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    Int l = 1;
    for (std::size_t i = 0; i < d; ++i) l = lcm(l, denominator(frame.dual_basis[j][i]));
    frame.multipliers[j] = l;
  }
  Int dn = numerator(det);
  check_invariant(denominator(det) == 1, "integer matrix has non-integer determinant");
  frame.determinant = abs(dn);
  return frame;
}

}  // namespace canweight
