#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "canweight/deform.hpp"
#include "canweight/newton.hpp"
#include "canweight/support.hpp"
#include "canweight/weight.hpp"

namespace canweight {

std::string version();

using Json = nlohmann::ordered_json;

// JSON file schema for supports: {"dim": n+1, "terms": [{"exp": [...], "coeff": "p/q"}...]}
Json support_to_json(const PolynomialSupport& f);
PolynomialSupport support_from_json(const nlohmann::json& j);

// Family file: {"members": [{"label": "f", "poly": {...}}...], "weight": [...]}
struct FamilyFile {
  SupportFamily family;
  std::optional<WeightVector> weight;
};
FamilyFile family_from_json(const nlohmann::json& j);

struct BlowupRequest {
  WeightVector center;
  std::vector<WeightVector> extra_candidates;  // probed in addition to the certificate set
};

// Command-level renderers; the returned string is exactly what the CLI prints.
std::string render_classify(const PolynomialSupport& f, bool assume_nondeg, bool json);
std::string render_weight(const PolynomialSupport& f, bool assume_nondeg,
                          const std::vector<WeightVector>& user_candidates,
                          const std::optional<BlowupRequest>& blowup, bool json);
std::string render_cone(const PolynomialSupport& f, const std::vector<WeightVector>& probes,
                        bool json);
std::string render_deform(const FamilyFile& ff, bool assume_nondeg, bool json);

struct BatchRow {
  std::string name;
  std::string error;  // nonempty when the input failed to load
  std::optional<WeightVerdict> verdict;
};
std::string render_batch(const std::vector<BatchRow>& rows, bool json);

}  // namespace canweight
