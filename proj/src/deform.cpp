#include "canweight/deform.hpp"

#include <algorithm>

namespace canweight {

SupportFamily make_family(std::vector<SupportFamily::Member> members) {
  require(!members.empty(), "family must have at least one member");
  int dim = members[0].poly.dim;
  for (const auto& m : members)
    require(m.poly.dim == dim, "family members must share the ambient dimension");
  return SupportFamily{std::move(members)};
}

bool halfspace_condition(const SupportFamily& fam, const WeightVector& p) {
  require(is_positive(p.coords), "halfspace_condition: weight must have positive entries");
  for (const auto& m : fam.members) {
    require(p.dim() == m.poly.dim, "halfspace_condition: dimension mismatch");
    Int p1 = pairing(p, all_ones(m.poly.dim));
    for (const auto& a : m.poly.support) {
      if (pairing(p, a) < p1) return false;
    }
  }
  return true;
}

bool weight_constancy(const SupportFamily& fam, const WeightVector& p) {
  require(is_positive(p.coords), "weight_constancy: weight must have positive entries");
  for (const auto& m : fam.members) {
    require(p.dim() == m.poly.dim, "weight_constancy: dimension mismatch");
    if (weight_of_poly(p, m.poly) != pairing(p, all_ones(m.poly.dim))) return false;
  }
  return true;
}

SimultaneousReport simultaneous_report(const PolynomialSupport& f, const PolynomialSupport& g,
                                       const WeightVector& p, bool assume_nondegenerate) {
  require(f.dim == g.dim, "simultaneous_report: dimension mismatch");
  require(p.dim() == f.dim, "simultaneous_report: weight dimension mismatch");
  require(is_positive(p.coords), "simultaneous_report: weight must have positive entries");

  SimultaneousReport rep;
  rep.f_verdict = canonical_weight_verdict(f, assume_nondegenerate, {p});
  rep.weight_canonical_for_f = false;
  for (const auto& c : rep.f_verdict.candidates) {
    if (c.w == p) {
      rep.weight_canonical_for_f = c.status == CandidateStatus::CanonicalWeight ||
                                   c.status == CandidateStatus::FMinimal;
      if (c.status == CandidateStatus::FMinimal)
        rep.caveats.push_back(
            "condition (a) holds up to non-degeneracy: the weight is f-minimal but "
            "non-degeneracy was not established");
      break;
    }
  }

  Int p1 = pairing(p, all_ones(g.dim));
  rep.partner_weighted_homogeneous = true;
  for (const auto& a : g.support) {
    if (pairing(p, a) != p1) {
      rep.partner_weighted_homogeneous = false;
      break;
    }
  }

  SupportFamily fam = make_family({{"f", f}, {"g", g}});
  rep.halfspace_ok = halfspace_condition(fam, p);
  rep.constancy_ok = weight_constancy(fam, p);
  rep.all_conditions = rep.weight_canonical_for_f && rep.partner_weighted_homogeneous &&
                       rep.halfspace_ok && rep.constancy_ok;
  rep.caveats.push_back(
      "members at parameters t != 0 are assumed non-degenerate; the generic segment support is "
      "the union of the endpoint supports, special parameters with extra cancellation are coefficient-dependent");
  for (const auto& c : rep.f_verdict.caveats) rep.caveats.push_back(c);
  return rep;
}

}  // namespace canweight
