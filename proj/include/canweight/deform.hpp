#pragma once

#include <string>
#include <vector>

#include "canweight/support.hpp"
#include "canweight/weight.hpp"

namespace canweight {

// Finitely many support snapshots of a one-parameter family.
struct SupportFamily {
  struct Member {
    std::string label;
    PolynomialSupport poly;
  };
  std::vector<Member> members;
};

SupportFamily make_family(std::vector<SupportFamily::Member> members);

// Every member's Newton polyhedron sits in the halfspace 1 + p^v:
// p.(a - 1) >= 0 for every support vector a of every member.
bool halfspace_condition(const SupportFamily& fam, const WeightVector& p);

// p(F) = p(1) for every member F.
bool weight_constancy(const SupportFamily& fam, const WeightVector& p);

struct SimultaneousReport {
  WeightVerdict f_verdict;
  bool weight_canonical_for_f = false;       // condition (a)
  bool partner_weighted_homogeneous = false;  // condition (b): p.a = p.1 on supp(g)
  bool halfspace_ok = false;                  // condition (c), first half
  bool constancy_ok = false;                  // condition (c), second half
  bool all_conditions = false;
  std::vector<std::string> caveats;
};

// Checks the simultaneous-canonical-modification conditions for the segment
// family between f and its weighted-homogeneous partner g.
SimultaneousReport simultaneous_report(const PolynomialSupport& f, const PolynomialSupport& g,
                                       const WeightVector& p, bool assume_nondegenerate);

}  // namespace canweight
