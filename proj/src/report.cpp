#include "canweight/report.hpp"

#include <algorithm>
#include <sstream>

namespace canweight {

std::string version() { return "0.1.0"; }

namespace {

std::string wv(const WeightVector& w) { return vec_to_string(w.coords); }

Json vec_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::string nondeg_text(const SingularityClass& cls) {
  switch (cls.nondegeneracy) {
    case NondegStatus::Assumed:
      return "assumed";
    case NondegStatus::Unchecked:
      return "unchecked";
    case NondegStatus::CheckedLimited:
      return "checked-limited (" + to_string(*cls.nondeg_verdict) + ")";
  }
  return "?";
}

Json class_json(const SingularityClass& cls) {
  Json j;
  j["label"] = to_string(cls.label);
  j["kappa"] = kappa_to_string(cls);
  j["nondegeneracy"] = nondeg_text(cls);
  return j;
}

void emit_caveats(std::ostringstream& os, const std::vector<std::string>& caveats) {
  if (caveats.empty()) {
    os << "caveats: (none)\n";
    return;
  }
  os << "caveats:\n";
  for (const auto& c : caveats) os << "  - " << c << "\n";
}

Json header_json(const std::string& command, const PolynomialSupport& f) {
  Json j;
  j["tool"] = "canweight";
  j["version"] = version();
  j["schema"] = 1;
  j["command"] = command;
  j["input"] = to_text(f);
  j["dim"] = f.dim;
  j["hash"] = support_hash(f);
  return j;
}

void header_text(std::ostringstream& os, const std::string& command,
                 const PolynomialSupport& f) {
  os << "canweight " << command << " (v" << version() << ")\n";
  os << "input: " << to_text(f) << "  (dim " << f.dim << ")\n";
  os << "hash: " << support_hash(f) << "\n";
}

std::string discrepancy_label(const DiscrepancyRecord& r) {
  if (r.excluded) return "excluded: divisor misses the proper transform";
  if (r.m >= 0) return "canonical along this divisor";
  if (r.m > -1) return "log-terminal, not canonical";
  return "not log-canonical";
}

Json verdict_json(const WeightVerdict& v) {
  Json j;
  j["class"] = class_json(v.cls);
  j["essential_rays"] = Json::array();
  for (const auto& r : v.essential_rays) j["essential_rays"].push_back(vec_json(r.coords));
  j["hilbert_basis"] = Json::array();
  for (const auto& h : v.hilbert) j["hilbert_basis"].push_back(vec_json(h.coords));
  j["absolutely_minimal"] = v.abs_min ? vec_json(v.abs_min->coords) : Json();
  j["f_minimal"] = Json::array();
  for (const auto& w : v.f_minimal) j["f_minimal"].push_back(vec_json(w.coords));
  j["candidates"] = Json::array();
  for (const auto& c : v.candidates) {
    Json cj;
    cj["weight"] = vec_json(c.w.coords);
    cj["status"] = to_string(c.status);
    cj["reason"] = c.reason;
    cj["violators"] = Json::array();
    for (const auto& viol : c.cert.violators) {
      Json vj;
      vj["q"] = vec_json(viol.q.coords);
      vj["prec_f"] = viol.prec_ok;
      vj["chart"] = viol.chart ? Json(*viol.chart) : Json();
      vj["fallback_ok"] = viol.fallback_ok;
      cj["violators"].push_back(std::move(vj));
    }
    cj["conic_notes"] = c.cert.conic_notes;
    if (c.cert.counterexample) cj["counterexample"] = vec_json(c.cert.counterexample->coords);
    j["candidates"].push_back(std::move(cj));
  }
  j["chosen"] = v.chosen ? vec_json(v.chosen->coords) : Json();
  j["leading_coefficient"] = v.leading_coeff ? Json(rat_to_string(*v.leading_coeff)) : Json();
  j["leading_coefficient_is_minus_K_cubed"] = v.minus_k_cubed;
  j["search_exhaustive"] = v.search_exhaustive;
  j["search_note"] = v.search_note;
  j["summary"] = v.summary;
  j["caveats"] = v.caveats;
  return j;
}

void verdict_text(std::ostringstream& os, const WeightVerdict& v) {
  os << "class: " << to_string(v.cls.label) << "\n";
  os << "kappa: " << kappa_to_string(v.cls) << "\n";
  os << "nondegeneracy: " << nondeg_text(v.cls) << "\n";
  os << "essential cone: " << v.essential_rays.size() << " extreme ray(s)\n";
  for (const auto& r : v.essential_rays) os << "  ray " << wv(r) << "\n";
  os << "hilbert basis: " << v.hilbert.size() << " element(s)\n";
  for (const auto& h : v.hilbert) os << "  " << wv(h) << "\n";
  os << "absolutely minimal: " << (v.abs_min ? wv(*v.abs_min) : "(none)") << "\n";
  if (!v.f_minimal.empty()) {
    os << "f-minimal weights:";
    for (const auto& w : v.f_minimal) os << " " << wv(w);
    os << "\n";
  }
  if (!v.candidates.empty()) {
    os << "candidates:\n";
    for (const auto& c : v.candidates) {
      os << "  " << wv(c.w) << ": " << to_string(c.status);
      if (!c.reason.empty()) os << " -- " << c.reason;
      os << "\n";
    }
  }
  os << "verdict: " << v.summary << "\n";
  if (v.leading_coeff) {
    os << "leading coefficient sum/prod: " << rat_to_string(*v.leading_coeff);
    if (v.minus_k_cubed) os << "  [equals -K^3 of the blow-up]";
    os << "\n";
  }
  os << "search: " << (v.search_exhaustive ? "exhaustive" : "pool-based") << " -- "
     << v.search_note << "\n";
  emit_caveats(os, v.caveats);
}

}  // namespace

Json support_to_json(const PolynomialSupport& f) {
  Json j;
  j["dim"] = f.dim;
  j["terms"] = Json::array();
  for (const auto& a : f.support) {
    Json t;
    Json e = Json::array();
    for (const auto& x : a.coords) {
      check_invariant(x <= Int(std::numeric_limits<long long>::max()), "exponent too large");
      e.push_back(static_cast<long long>(x));
    }
    t["exp"] = std::move(e);
    if (f.coeffs) t["coeff"] = rat_to_string(f.coeffs->at(a.coords));
    j["terms"].push_back(std::move(t));
  }
  return j;
}

namespace {

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    require(den != 0, "zero denominator in coefficient");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw input_error("malformed rational coefficient: " + s);
  }
}

}  // namespace

PolynomialSupport support_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("dim") && j.contains("terms"),
          "support JSON needs \"dim\" and \"terms\"");
  require(j["dim"].is_number_integer(), "\"dim\" must be an integer");
  int dim = j["dim"].get<int>();
  require(dim >= 1, "dimension must be at least 1");
  std::vector<ExponentVector> vectors;
  std::map<IntVec, Rat> coeffs;
  bool all_coeffs = true;
  require(j["terms"].is_array() && !j["terms"].empty(), "\"terms\" must be a nonempty array");
  for (const auto& t : j["terms"]) {
    require(t.contains("exp") && t["exp"].is_array(), "term needs an \"exp\" array");
    require(static_cast<int>(t["exp"].size()) == dim, "term exponent dimension mismatch");
    IntVec e;
    for (const auto& x : t["exp"]) {
      require(x.is_number_integer() && x.get<long long>() >= 0,
              "exponents must be nonnegative integers");
      e.push_back(Int(x.get<long long>()));
    }
    vectors.emplace_back(e);
    if (t.contains("coeff")) {
      require(t["coeff"].is_string(), "\"coeff\" must be a string like \"3/2\"");
      coeffs.emplace(std::move(e), rat_from_string(t["coeff"].get<std::string>()));
    } else {
      all_coeffs = false;
    }
  }
  if (all_coeffs) return make_support(dim, std::move(vectors), std::move(coeffs));
  return make_support(dim, std::move(vectors));
}

FamilyFile family_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("members") && j["members"].is_array() &&
              !j["members"].empty(),
          "family JSON needs a nonempty \"members\" array");
  FamilyFile ff;
  std::vector<SupportFamily::Member> members;
  for (const auto& m : j["members"]) {
    require(m.contains("poly"), "family member needs a \"poly\"");
    SupportFamily::Member mem;
    mem.label = m.contains("label") ? m["label"].get<std::string>()
                                    : "member" + std::to_string(members.size());
    mem.poly = support_from_json(m["poly"]);
    members.push_back(std::move(mem));
  }
  ff.family = make_family(std::move(members));
  if (j.contains("weight")) {
    require(j["weight"].is_array(), "\"weight\" must be an array of integers");
    IntVec w;
    for (const auto& x : j["weight"]) {
      require(x.is_number_integer(), "weight entries must be integers");
      w.push_back(Int(x.get<long long>()));
    }
    ff.weight = WeightVector(std::move(w));
  }
  return ff;
}

std::string render_classify(const PolynomialSupport& f, bool assume_nondeg, bool json) {
  SingularityClass cls = classify(f, assume_nondeg);
  std::vector<std::string> caveats;
  if (cls.nondegeneracy != NondegStatus::Assumed &&
      !(cls.nondeg_verdict && *cls.nondeg_verdict == NondegVerdict::NonDegenerate)) {
    caveats.push_back(
        "without non-degeneracy only the necessary directions hold: canonical => interior, "
        "log-canonical => membership");
  }
  if (json) {
    Json j = header_json("classify", f);
    j["class"] = class_json(cls);
    j["caveats"] = caveats;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  header_text(os, "classify", f);
  os << "class: " << to_string(cls.label) << "\n";
  os << "kappa: " << kappa_to_string(cls) << "\n";
  os << "nondegeneracy: " << nondeg_text(cls) << "\n";
  emit_caveats(os, caveats);
  return os.str();
}

std::string render_weight(const PolynomialSupport& f, bool assume_nondeg,
                          const std::vector<WeightVector>& user_candidates,
                          const std::optional<BlowupRequest>& blowup, bool json) {
  WeightVerdict v = canonical_weight_verdict(f, assume_nondeg, user_candidates);

  std::vector<DiscrepancyRecord> recs;
  std::optional<Rat> blowup_lead;
  if (blowup) {
    std::vector<WeightVector> cands = v.hilbert;
    for (const auto& c : v.candidates)
      for (const auto& viol : c.cert.violators) cands.push_back(viol.q);
    for (const auto& q : blowup->extra_candidates) cands.push_back(q);
    recs = discrepancies(blowup->center, f, std::move(cands));
    blowup_lead = leading_coefficient(blowup->center);
  }

  if (json) {
    Json j = header_json("weight", f);
    j["verdict"] = verdict_json(v);
    if (blowup) {
      Json b;
      b["center"] = vec_json(blowup->center.coords);
      b["leading_coefficient"] = rat_to_string(*blowup_lead);
      Int cf = weight_of_poly(blowup->center, f);
      b["leading_coefficient_is_minus_K_cubed"] =
          (f.dim == 4) && (cf == pairing(blowup->center, all_ones(f.dim)));
      b["discrepancies"] = Json::array();
      for (const auto& r : recs) {
        Json rj;
        rj["q"] = vec_json(r.q.coords);
        rj["chart"] = r.chart;
        rj["wall_tie"] = r.wall_tie;
        rj["m"] = rat_to_string(r.m);
        rj["excluded"] = r.excluded;
        rj["label"] = discrepancy_label(r);
        b["discrepancies"].push_back(std::move(rj));
      }
      j["blowup"] = std::move(b);
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  header_text(os, "weight", f);
  verdict_text(os, v);
  if (blowup) {
    os << "blow-up with center " << wv(blowup->center) << ":\n";
    os << "  leading coefficient sum/prod: " << rat_to_string(*blowup_lead);
    Int cf = weight_of_poly(blowup->center, f);
    if (f.dim == 4 && cf == pairing(blowup->center, all_ones(f.dim)))
      os << "  [equals -K^3 of the blow-up]";
    os << "\n";
    for (const auto& r : recs) {
      os << "  q=" << wv(r.q) << " chart " << r.chart;
      if (r.wall_tie) os << " (wall tie)";
      os << " m=" << rat_to_string(r.m) << "  [" << discrepancy_label(r) << "]\n";
    }
  }
  return os.str();
}

std::string render_cone(const PolynomialSupport& f, const std::vector<WeightVector>& probes,
                        bool json) {
  RationalCone c = essential_cone(f);
  std::vector<WeightVector> hilbert;
  if (!c.is_zero_cone() && c.pointed()) hilbert = c.hilbert_basis();
  std::optional<WeightVector> cmin;
  if (!hilbert.empty()) cmin = componentwise_min(hilbert);

  if (json) {
    Json j = header_json("cone", f);
    j["hrep"] = Json::array();
    for (const auto& h : c.hrep()) j["hrep"].push_back(vec_json(h));
    j["rays"] = Json::array();
    for (const auto& r : c.rays()) j["rays"].push_back(vec_json(r.coords));
    j["hilbert_basis"] = Json::array();
    for (const auto& h : hilbert) j["hilbert_basis"].push_back(vec_json(h.coords));
    j["componentwise_min"] = cmin ? vec_json(cmin->coords) : Json();
    j["componentwise_min_in_cone"] = cmin ? Json(c.contains(*cmin)) : Json();
    j["probes"] = Json::array();
    for (const auto& p : probes) {
      Json pj;
      pj["q"] = vec_json(p.coords);
      pj["inside"] = c.contains(p);
      j["probes"].push_back(std::move(pj));
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  header_text(os, "cone", f);
  os << "hrep: " << c.hrep().size() << " form(s)\n";
  for (const auto& h : c.hrep()) os << "  " << vec_to_string(h) << " . q >= 0\n";
  os << "rays: " << c.rays().size() << "\n";
  for (const auto& r : c.rays()) os << "  " << wv(r) << "\n";
  os << "hilbert basis: " << hilbert.size() << "\n";
  for (const auto& h : hilbert) os << "  " << wv(h) << "\n";
  if (cmin) {
    os << "componentwise min: " << wv(*cmin) << "  [in cone: " << (c.contains(*cmin) ? "yes" : "no")
       << "]\n";
  } else {
    os << "componentwise min: (none; zero cone)\n";
  }
  if (!probes.empty()) {
    os << "probes:\n";
    for (const auto& p : probes)
      os << "  " << wv(p) << ": " << (c.contains(p) ? "inside" : "outside") << "\n";
  }
  return os.str();
}

std::string render_deform(const FamilyFile& ff, bool assume_nondeg, bool json) {
  require(ff.weight.has_value(), "deform: the family file must provide a \"weight\"");
  const WeightVector& p = *ff.weight;
  const SupportFamily& fam = ff.family;
  bool half = halfspace_condition(fam, p);
  bool cons = weight_constancy(fam, p);
  std::optional<SimultaneousReport> sim;
  if (fam.members.size() >= 2)
    sim = simultaneous_report(fam.members[0].poly, fam.members[1].poly, p, assume_nondeg);

  if (json) {
    Json j;
    j["tool"] = "canweight";
    j["version"] = version();
    j["schema"] = 1;
    j["command"] = "deform";
    j["weight"] = vec_json(p.coords);
    j["members"] = Json::array();
    for (const auto& m : fam.members) {
      Json mj;
      mj["label"] = m.label;
      mj["poly"] = to_text(m.poly);
      j["members"].push_back(std::move(mj));
    }
    j["halfspace_condition"] = half;
    j["weight_constancy"] = cons;
    if (sim) {
      Json sj;
      sj["weight_canonical_for_f"] = sim->weight_canonical_for_f;
      sj["partner_weighted_homogeneous"] = sim->partner_weighted_homogeneous;
      sj["halfspace"] = sim->halfspace_ok;
      sj["weight_constancy"] = sim->constancy_ok;
      sj["all_conditions"] = sim->all_conditions;
      sj["verdict"] = sim->all_conditions
                          ? "simultaneous canonical modification conditions satisfied"
                          : "conditions not all satisfied";
      sj["caveats"] = sim->caveats;
      sj["f_verdict"] = verdict_json(sim->f_verdict);
      j["simultaneous"] = std::move(sj);
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "canweight deform (v" << version() << ")\n";
  os << "weight: " << wv(p) << "\n";
  for (const auto& m : fam.members)
    os << "member " << m.label << ": " << to_text(m.poly) << "\n";
  os << "halfspace condition: " << (half ? "holds" : "fails") << "\n";
  os << "weight constancy: " << (cons ? "holds" : "fails") << "\n";
  if (sim) {
    os << "simultaneous conditions (f=" << fam.members[0].label << ", g=" << fam.members[1].label
       << "):\n";
    os << "  (a) weight is canonical for f: " << (sim->weight_canonical_for_f ? "yes" : "no")
       << "\n";
    os << "  (b) partner weighted-homogeneous for p/sum(p): "
       << (sim->partner_weighted_homogeneous ? "yes" : "no") << "\n";
    os << "  (c) halfspace: " << (sim->halfspace_ok ? "yes" : "no")
       << ", constancy: " << (sim->constancy_ok ? "yes" : "no") << "\n";
    os << "verdict: "
       << (sim->all_conditions ? "simultaneous canonical modification conditions satisfied"
                               : "conditions not all satisfied")
       << "\n";
    emit_caveats(os, sim->caveats);
  } else {
    emit_caveats(os, {});
  }
  return os.str();
}

std::string render_batch(const std::vector<BatchRow>& rows, bool json) {
  if (json) {
    Json j;
    j["tool"] = "canweight";
    j["version"] = version();
    j["schema"] = 1;
    j["command"] = "batch";
    j["rows"] = Json::array();
    for (const auto& r : rows) {
      Json rj;
      rj["name"] = r.name;
      if (!r.error.empty()) {
        rj["error"] = r.error;
      } else {
        rj["class"] = to_string(r.verdict->cls.label);
        rj["absolutely_minimal"] =
            r.verdict->abs_min ? vec_json(r.verdict->abs_min->coords) : Json();
        rj["summary"] = r.verdict->summary;
      }
      j["rows"].push_back(std::move(rj));
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "canweight batch (v" << version() << ")\n";
  for (const auto& r : rows) {
    os << r.name << ": ";
    if (!r.error.empty()) {
      os << "ERROR -- " << r.error << "\n";
    } else {
      os << to_string(r.verdict->cls.label) << " | " << r.verdict->summary << "\n";
    }
  }
  os << rows.size() << " input(s)\n";
  return os.str();
}

}  // namespace canweight
