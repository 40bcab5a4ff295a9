#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "canweight/numeric.hpp"

namespace canweight {

// A monomial exponent a in M = Z^{n+1}; entries nonnegative.
struct ExponentVector {
  IntVec coords;

  ExponentVector() = default;
  explicit ExponentVector(IntVec c);

  int dim() const { return static_cast<int>(coords.size()); }
  const Int& operator[](std::size_t i) const { return coords[i]; }
  bool operator==(const ExponentVector& o) const { return coords == o.coords; }
};

// A weight q in the dual lattice N = Z^{n+1}; may have negative entries.
struct WeightVector {
  IntVec coords;
  bool primitive = false;  // gcd of |entries| == 1 (false for the zero vector)

  WeightVector() = default;
  explicit WeightVector(IntVec c);

  int dim() const { return static_cast<int>(coords.size()); }
  const Int& operator[](std::size_t i) const { return coords[i]; }
  bool operator==(const WeightVector& o) const { return coords == o.coords; }
  bool is_zero() const { return canweight::is_zero(coords); }
};

bool lex_less(const ExponentVector& a, const ExponentVector& b);
bool lex_less(const WeightVector& a, const WeightVector& b);

ExponentVector all_ones(int dim);

// The combinatorial stand-in for f: its monomial set, with optional exact
// coefficients (kept only when coefficient-level checks are wanted).
struct PolynomialSupport {
  int dim = 0;
  std::vector<ExponentVector> support;            // lex-sorted, no duplicates
  std::optional<std::map<IntVec, Rat>> coeffs;    // keys == support, values != 0

  bool has_coeffs() const { return coeffs.has_value(); }
};

// Validates the type invariants (nonempty, no duplicates, coeff keys match).
PolynomialSupport make_support(int dim, std::vector<ExponentVector> vectors,
                               std::optional<std::map<IntVec, Rat>> coeffs = std::nullopt);

// --- operations ---

// The bilinear pairing N x M -> Z.
Int pairing(const WeightVector& q, const ExponentVector& a);

// q(f) = min over the support of q(a). Requires q >= 0 entrywise.
Int weight_of_poly(const WeightVector& q, const PolynomialSupport& f);

// q(D) = q(f)/m for the Q-divisor D with mD defined by f.
Rat monomial_divisor_weight(const WeightVector& q, const PolynomialSupport& f, const Int& m);

// q / gcd(entries); rejects the zero vector.
WeightVector make_primitive(const WeightVector& q);

// --- parsing / serialization (ASCII grammar, see README) ---

inline constexpr long long kDefaultExponentLimit = 1'000'000;

PolynomialSupport parse_polynomial(std::string_view text, int dim,
                                   long long exponent_limit = kDefaultExponentLimit);

// Canonical re-parseable text form (terms in lex order of exponents).
std::string to_text(const PolynomialSupport& f);

// Stable FNV-1a hash of the canonical text, as 16 hex digits.
std::string support_hash(const PolynomialSupport& f);

}  // namespace canweight
