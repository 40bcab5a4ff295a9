#pragma once

#include <optional>
#include <string>
#include <vector>

#include "canweight/cone.hpp"
#include "canweight/support.hpp"

namespace canweight {

struct NewtonFacet {
  WeightVector normal;  // primitive, entrywise >= 0
  Int offset;           // facet inequality: normal . a >= offset
  bool compact;         // all normal entries strictly positive
};

// Gamma_+(f) = conv(supp f) + nonnegative orthant, as generators + facets.
struct NewtonPolyhedron {
  int dim = 0;
  std::vector<ExponentVector> generators;  // componentwise-minimal support vectors
  std::vector<NewtonFacet> facets;         // canonical order

  bool member(const IntVec& a) const;
};

NewtonPolyhedron build_newton(const PolynomialSupport& f);

enum class OnePosition { Interior, OnCompactFace, Outside };

OnePosition position_of_one(const NewtonPolyhedron& np);

enum class SingLabel { Canonical, LogCanonicalNonCanonical, NotLogCanonical };
enum class NondegStatus { Assumed, CheckedLimited, Unchecked };
enum class NondegVerdict { NonDegenerate, Degenerate, Undecided };

struct SingularityClass {
  SingLabel label = SingLabel::Canonical;
  std::optional<int> kappa;  // nullopt encodes -infinity
  NondegStatus nondegeneracy = NondegStatus::Unchecked;
  std::optional<NondegVerdict> nondeg_verdict;  // when CheckedLimited
};

std::string to_string(SingLabel label);
std::string kappa_to_string(const SingularityClass& cls);
std::string to_string(NondegVerdict v);

SingularityClass classify(const PolynomialSupport& f, bool assume_nondegenerate);

struct FaceOfOne {
  std::vector<ExponentVector> generators;  // Newton generators lying on the face
  int dim = 0;
  std::optional<WeightVector> normal_ray;  // present when the face is a compact facet
};

// Minimal face of Gamma_+ containing the all-ones vector. Requires
// position_of_one == OnCompactFace.
FaceOfOne face_containing_one(const NewtonPolyhedron& np);

// Every lattice point on a compact face has at most one coordinate >= 2.
bool quasi_reduced(const PolynomialSupport& f);

// If f = x0...xn + sum x_i^{a_i} with sum 1/a_i < 1, returns a.
std::optional<ExponentVector> is_type_T(const PolynomialSupport& f);

// Exact Kouchnirenko check on faces it can decide (single-monomial partials,
// univariate, or two-variable collinear faces); Undecided otherwise.
NondegVerdict check_nondegeneracy_limited(const PolynomialSupport& f);

}  // namespace canweight
