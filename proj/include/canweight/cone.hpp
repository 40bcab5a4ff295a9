#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "canweight/support.hpp"

namespace canweight {

// Generator description of { x : L(x) >= 0 for all forms L }.
struct ConeDescription {
  std::vector<IntVec> rays;       // extreme rays mod lineality; primitive, lex-sorted
  std::vector<IntVec> lineality;  // lattice basis of the lineality space, lex-sorted
};

// Double description: H-representation -> generator description.
ConeDescription double_description(int dim, std::vector<IntVec> forms);

// Extreme rays of the dual cone { y : r.y >= 0, y orthogonal to the lineality }.
// For a full-dimensional cone these are exactly its facet normals.
ConeDescription dual_description(int dim, const std::vector<IntVec>& rays,
                                 const std::vector<IntVec>& lineality = {});

// Rank over Q of a list of integer vectors.
int rank_of(const std::vector<IntVec>& rows);

// A rational polyhedral cone held by H-representation, with cached extreme
// rays and (for pointed cones) a lazily computed Hilbert basis. Copies share
// state; all observable data is immutable once built.
class RationalCone {
 public:
  RationalCone() = default;
  static RationalCone from_inequalities(int dim, std::vector<IntVec> forms);

  int dim() const;
  const std::vector<IntVec>& hrep() const;
  const std::vector<WeightVector>& rays() const;
  const std::vector<IntVec>& lineality() const;

  bool pointed() const;      // lineality space == {0}
  bool is_zero_cone() const;  // == {0}
  bool full_space() const;   // no effective constraint was given

  bool contains(const IntVec& q) const;
  bool contains(const WeightVector& q) const { return contains(q.coords); }

  // Unique minimal generating set of the semigroup cone ∩ Z^dim.
  // Requires a pointed cone.
  const std::vector<WeightVector>& hilbert_basis() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// Entrywise minimum of a nonempty list.
WeightVector componentwise_min(const std::vector<WeightVector>& vs);

// Is min(p,q) still in the cone? Requires p, q in the cone.
bool meet_closed_under(const RationalCone& c, const WeightVector& p, const WeightVector& q);

// All nonzero lattice points q of c with form(q) <= bound. Requires the form
// to be strictly positive on every extreme ray (finiteness).
std::vector<WeightVector> lattice_points_under(const RationalCone& c, const IntVec& form,
                                               const Int& bound);

// Lattice points of the half-open parallelepiped spanned by linearly
// independent integer vectors (the zero point included).
std::vector<IntVec> parallelepiped_points(const std::vector<IntVec>& rays);

// A full-dimensional simplicial cone with its exact dual basis and the least
// integer multipliers making each dual vector integral.
struct SimplicialFrame {
  std::vector<WeightVector> generators;
  std::vector<std::vector<Rat>> dual_basis;  // dual_basis[j] pairs to delta_ij with generators[i]
  std::vector<Int> multipliers;
  Int determinant;  // |det| of the generator matrix
};

SimplicialFrame simplicial_frame(std::vector<WeightVector> generators);

}  // namespace canweight
