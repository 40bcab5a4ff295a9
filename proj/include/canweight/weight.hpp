#pragma once

#include <optional>
#include <string>
#include <vector>

#include "canweight/cone.hpp"
#include "canweight/newton.hpp"
#include "canweight/support.hpp"

namespace canweight {

// C_1(f) = { q >= 0 : q(f) >= q(1) }, with a pruned inequality description.
RationalCone essential_cone(const PolynomialSupport& f);

// Componentwise minimum of the Hilbert basis when it lies in the cone.
// Requires a pointed nonzero subcone of the nonnegative orthant.
std::optional<WeightVector> absolutely_minimal(const RationalCone& c);

// The fan obtained by inserting the ray through p into the orthant; chart i
// replaces e_i by p.
struct StarSubdivision {
  WeightVector center;
  std::vector<SimplicialFrame> charts;
};

StarSubdivision star_subdivision(const WeightVector& p);

// Chart whose interior contains q (all barycentric coordinates strictly
// positive), or nullopt when q lies on a wall.
std::optional<int> interior_chart(const StarSubdivision& sub, const WeightVector& q);

// p <=_f q : p_i/(p(f)-p(1)+1) <= q_i/(q(f)-q(1)+1) for all i.
bool leq_f(const WeightVector& p, const WeightVector& q, const PolynomialSupport& f);

// p prec_f q : p_i/p(f) <= q_i/q(f) for all i.
bool prec_f(const WeightVector& p, const WeightVector& q, const PolynomialSupport& f);

struct ViolatorRecord {
  WeightVector q;
  bool prec_ok = false;
  std::optional<int> chart;
  bool fallback_ok = false;
};

struct FMinimality {
  bool minimal = false;
  bool in_essential_cone = false;
  std::vector<ViolatorRecord> violators;  // enumerated finite violators of <=_f
  std::vector<std::string> conic_notes;   // unbounded families verified wholesale
  std::optional<WeightVector> counterexample;
  std::string reason;
};

// Decides whether every primitive q in C_1(f) - {0} satisfies
// [p <=_f q] or [p prec_f q and q interior to a chart of the p-star].
FMinimality is_f_minimal(const WeightVector& p, const PolynomialSupport& f);

struct DiscrepancyRecord {
  WeightVector q;
  int chart = 0;
  bool wall_tie = false;  // chart assignment tied; lowest index recorded
  Rat m;                  // (q_i/p_i)(p(f)-p(1)+1) - (q(f)-q(1)+1) in the recorded chart
  bool excluded = false;  // q(f) = (q_i/p_i) p(f) with q chart-interior: divisor misses X(p)
};

std::vector<DiscrepancyRecord> discrepancies(const WeightVector& p, const PolynomialSupport& f,
                                             std::vector<WeightVector> candidates);

// sum(p_i) / prod(p_i); equals -K^3 of the blow-up when dim == 4 and p(f) = p(1).
Rat leading_coefficient(const WeightVector& p);

// All weight vectors with entries in [1, cap] and sum/prod > threshold, in
// lexicographic order.
std::vector<WeightVector> weights_above_threshold(int dim, const Rat& threshold, long long cap);

enum class CandidateStatus { FMinimal, NotFMinimal, CanonicalWeight, NotCanonicalWeight };
std::string to_string(CandidateStatus s);

struct CandidateResult {
  WeightVector w;
  CandidateStatus status = CandidateStatus::NotFMinimal;
  std::string reason;
  FMinimality cert;
};

struct WeightVerdict {
  std::string f_hash;
  SingularityClass cls;
  std::vector<WeightVector> essential_rays;
  std::vector<WeightVector> hilbert;  // empty for the zero cone
  std::optional<WeightVector> abs_min;
  std::vector<CandidateResult> candidates;
  std::vector<WeightVector> f_minimal;  // all f-minimal weights found, lex order
  std::optional<WeightVector> chosen;   // canonical weight / first f-minimal weight
  std::optional<Rat> leading_coeff;     // for chosen
  bool minus_k_cubed = false;           // leading_coeff is -K^3 (dim 4, p(f) = p(1))
  bool search_exhaustive = false;
  std::string search_note;
  std::string summary;
  std::vector<std::string> caveats;
};

WeightVerdict canonical_weight_verdict(const PolynomialSupport& f, bool assume_nondegenerate,
                                       const std::vector<WeightVector>& extra_candidates = {});

}  // namespace canweight
