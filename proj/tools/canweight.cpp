#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "canweight/report.hpp"

namespace fs = std::filesystem;
using namespace canweight;

namespace {

WeightVector parse_weight_arg(const std::string& s) {
  IntVec w;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      w.push_back(Int(part));
    } catch (const std::runtime_error&) {
      throw input_error("malformed weight entry '" + part + "' in '" + s + "'");
    }
  }
  require(!w.empty(), "empty weight '" + s + "'");
  return WeightVector(std::move(w));
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PolynomialSupport load_support_file(const fs::path& path, std::optional<int> dim) {
  std::string text = slurp(path);
  if (path.extension() == ".json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw input_error(path.string() + ": " + e.what());
    }
    return support_from_json(j);
  }
  require(dim.has_value(), "text input needs --dim");
  // strip trailing whitespace/newlines
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return parse_polynomial(text, *dim);
}

PolynomialSupport load_input(const std::string& input, std::optional<int> dim) {
  if (!input.empty() && input[0] == '@') return load_support_file(input.substr(1), dim);
  std::error_code ec;
  if (fs::is_regular_file(input, ec)) return load_support_file(input, dim);
  require(dim.has_value(), "inline polynomial text needs --dim");
  return parse_polynomial(input, *dim);
}

struct Common {
  std::string input;
  std::optional<int> dim;
  bool json = false;
  bool assume_nondeg = false;
  std::optional<unsigned long long> cap;
};

void add_common(CLI::App* cmd, Common& c, bool with_input = true) {
  if (with_input)
    cmd->add_option("input", c.input, "polynomial text, a file path, or @file")->required();
  cmd->add_option("--dim", c.dim, "ambient dimension n+1 for text input");
  cmd->add_flag("--json", c.json, "emit JSON instead of text");
  cmd->add_flag("--assume-nondegenerate", c.assume_nondeg,
                "assert Kouchnirenko non-degeneracy of the input");
  cmd->add_option("--cap", c.cap, "enumeration work cap (overrides CANWEIGHT_MAX_CELLS)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonical weights of isolated hypersurface singularities by exact "
               "Newton-polyhedron and cone computations"};
  app.require_subcommand(1);

  Common ccl, cw, cco, cd, cb;
  std::vector<std::string> cand_args, probe_args;
  std::string blowup_arg, family_path, batch_dir;

  CLI::App* cmd_classify = app.add_subcommand("classify", "classify the singularity");
  add_common(cmd_classify, ccl);

  CLI::App* cmd_weight = app.add_subcommand("weight", "find the canonical weight");
  add_common(cmd_weight, cw);
  cmd_weight->add_option("--candidate", cand_args, "test a user weight, e.g. 21,14,6,1")
      ->take_all();
  cmd_weight->add_option("--blowup", blowup_arg,
                         "emit discrepancies and the leading coefficient for this center");
  cmd_weight->add_option("--probe", probe_args, "extra divisor candidates for --blowup")
      ->take_all();

  CLI::App* cmd_cone = app.add_subcommand("cone", "essential cone report");
  add_common(cmd_cone, cco);
  cmd_cone->add_option("--probe", probe_args, "test membership of these weights")->take_all();

  CLI::App* cmd_deform = app.add_subcommand("deform", "family / deformation conditions");
  cmd_deform->add_option("family", family_path, "family JSON file")->required();
  cmd_deform->add_flag("--json", cd.json, "emit JSON instead of text");
  cmd_deform->add_flag("--assume-nondegenerate", cd.assume_nondeg,
                       "assert non-degeneracy of the members");
  cmd_deform->add_option("--cap", cd.cap, "enumeration work cap");

  CLI::App* cmd_batch = app.add_subcommand("batch", "run weight over a directory of inputs");
  cmd_batch->add_option("dir", batch_dir, "directory of .json/.poly inputs")->required();
  cmd_batch->add_flag("--json", cb.json, "emit JSON instead of text");
  cmd_batch->add_flag("--assume-nondegenerate", cb.assume_nondeg,
                      "assert non-degeneracy of the inputs");
  cmd_batch->add_option("--cap", cb.cap, "enumeration work cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cmd_classify) {
      if (ccl.cap) set_work_cap(*ccl.cap);
      std::cout << render_classify(load_input(ccl.input, ccl.dim), ccl.assume_nondeg, ccl.json);
    } else if (*cmd_weight) {
      if (cw.cap) set_work_cap(*cw.cap);
      PolynomialSupport f = load_input(cw.input, cw.dim);
      std::vector<WeightVector> cands;
      for (const auto& s : cand_args) cands.push_back(parse_weight_arg(s));
      std::optional<BlowupRequest> blowup;
      if (!blowup_arg.empty()) {
        BlowupRequest b;
        b.center = parse_weight_arg(blowup_arg);
        for (const auto& s : probe_args) b.extra_candidates.push_back(parse_weight_arg(s));
        blowup = std::move(b);
      }
      std::cout << render_weight(f, cw.assume_nondeg, cands, blowup, cw.json);
    } else if (*cmd_cone) {
      if (cco.cap) set_work_cap(*cco.cap);
      PolynomialSupport f = load_input(cco.input, cco.dim);
      std::vector<WeightVector> probes;
      for (const auto& s : probe_args) probes.push_back(parse_weight_arg(s));
      std::cout << render_cone(f, probes, cco.json);
    } else if (*cmd_deform) {
      if (cd.cap) set_work_cap(*cd.cap);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(slurp(family_path));
      } catch (const nlohmann::json::exception& e) {
        throw input_error(family_path + ": " + e.what());
      }
      std::cout << render_deform(family_from_json(j), cd.assume_nondeg, cd.json);
    } else if (*cmd_batch) {
      if (cb.cap) set_work_cap(*cb.cap);
      std::error_code ec;
      require(fs::is_directory(batch_dir, ec), batch_dir + " is not a directory");
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(batch_dir)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension();
        if (ext == ".json" || ext == ".poly") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      std::vector<BatchRow> rows;
      for (const auto& p : files) {
        BatchRow row;
        row.name = p.filename().string();
        try {
          PolynomialSupport f = load_support_file(p, std::nullopt);
          row.verdict = canonical_weight_verdict(f, cb.assume_nondeg);
        } catch (const input_error& e) {
          row.error = e.what();
        }
        rows.push_back(std::move(row));
      }
      std::cout << render_batch(rows, cb.json);
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
