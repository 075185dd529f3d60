// nlg: command-line front end over the C API.
//
// Exit codes: 0 success/pass, 1 verification failed, 2 input or parameter
// error, 3 internal invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilgraded/nilgraded.h"

namespace {

using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

struct Failure {
  int code;
  std::string message;
};

int exit_code(nlg_status s) {
  switch (s) {
    case NLG_OK: return kPass;
    case NLG_INTERNAL_ERROR: return kInternal;
    default: return kInputError;
  }
}

void check(nlg_status s) {
  if (s != NLG_OK) throw Failure{exit_code(s), std::string(nlg_status_name(s)) + ": " + nlg_last_error()};
}

struct AlgebraDeleter {
  void operator()(nlg_algebra* g) const { nlg_algebra_free(g); }
};
using Algebra = std::unique_ptr<nlg_algebra, AlgebraDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  nlg_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kInputError, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// A .json file, a structure-equation file, or a catalog model id.
Algebra load(const std::string& source) {
  nlg_algebra* g = nullptr;
  std::ifstream probe(source);
  if (!probe && source.find('(') != std::string::npos) {
    check(nlg_model_build(source.c_str(), &g));
  } else {
    const std::string text = read_file(source);
    check(ends_with(source, ".json") ? nlg_algebra_from_json(text.c_str(), &g) : nlg_algebra_from_mc(text.c_str(), &g));
  }
  return Algebra(g);
}

std::string join(const json& array, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < array.size(); ++i) {
    if (i) out += sep;
    out += array[i].is_string() ? array[i].get<std::string>() : array[i].dump();
  }
  return out;
}

std::vector<int> parse_weights(const std::string& text) {
  std::vector<int> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{kInputError, "bad weight '" + item + "'"};
    }
  }
  return w;
}

int cmd_build(const std::string& id, const std::string& format) {
  Algebra g = load(id);
  char* out = nullptr;
  check(format == "mc" ? nlg_algebra_to_mc(g.get(), &out) : nlg_algebra_to_json(g.get(), &out));
  std::cout << take(out) << '\n';
  return kPass;
}

int cmd_parse(const std::string& path) {
  const std::string text = read_file(path);
  nlg_algebra* raw = nullptr;
  check(nlg_algebra_from_mc(text.c_str(), &raw));
  Algebra g(raw);
  char* out = nullptr;
  check(nlg_algebra_to_mc(g.get(), &out));
  std::cout << take(out) << '\n';
  check(nlg_jacobi_json(g.get(), &out));
  const json defects = json::parse(take(out));
  if (defects.empty()) {
    std::cout << "jacobi: ok\n";
    return kPass;
  }
  std::cout << "jacobi: " << defects.size() << " defect(s)\n";
  for (const auto& d : defects)
    std::cout << "  (X" << d["triple"][0] << ",X" << d["triple"][1] << ",X" << d["triple"][2] << "): ["
              << join(d["defect"]) << "]\n";
  return kFailed;
}

int cmd_invariants(const std::string& source, std::uint64_t seed, bool as_json) {
  Algebra g = load(source);
  char* out = nullptr;
  check(nlg_invariants_json(g.get(), seed, &out));
  const std::string text = take(out);
  if (as_json) {
    std::cout << text << '\n';
    return kPass;
  }
  const json j = json::parse(text);
  std::cout << "dim: " << j["dim"] << '\n'
            << "lower central series: " << join(j["series_dims"]) << '\n'
            << "nilindex: " << j["nilindex"] << '\n'
            << "center dim: " << j["center_dim"] << '\n'
            << "characteristic sequence: (" << join(j["characteristic_sequence"]) << ")"
            << (j["linear"].get<bool>() ? " linear" : "") << '\n'
            << "witness: [" << join(j["witness"]) << "]\n"
            << "split: " << (j["split"].get<bool>() ? "yes" : "no") << '\n';
  return kPass;
}

int cmd_check_graded(const std::string& source, const std::optional<std::string>& weights) {
  Algebra g = load(source);
  std::vector<int> w;
  if (weights) w = parse_weights(*weights);
  int ok = 0;
  char* reason = nullptr;
  check(nlg_graded_certificate(g.get(), weights ? w.data() : nullptr, w.size(), &ok, &reason));
  const std::string why = take(reason);
  std::cout << (ok ? "certificate: pass" : "certificate: fail: " + why) << '\n';
  return ok ? kPass : kFailed;
}

int cmd_h2(const std::string& source, bool as_json) {
  Algebra g = load(source);
  char* out = nullptr;
  check(nlg_h2_json(g.get(), &out));
  const std::string text = take(out);
  if (as_json) {
    std::cout << text << '\n';
    return kPass;
  }
  const json j = json::parse(text);
  std::cout << "dim Z2: " << j["z2_dim"] << "\ndim B2: " << j["b2_dim"] << "\ndim H2: " << j["h2_dim"] << '\n';
  return kPass;
}

int cmd_extensions(const std::string& source, int max_weight, std::uint64_t seed, bool as_json) {
  Algebra g = load(source);
  char* out = nullptr;
  check(nlg_extensions_json(g.get(), nullptr, 0, max_weight, seed, &out));
  const std::string text = take(out);
  if (as_json) {
    std::cout << text << '\n';
    return kPass;
  }
  const json j = json::parse(text);
  std::cout << "cocycles tried: " << j["cocycles_tried"] << " over " << j["weights_searched"] << " weight(s)\n"
            << "candidates: " << j["candidates"].size() << '\n';
  for (const auto& c : j["candidates"])
    std::cout << "  weight " << c["new_weight"] << "  " << c["cocycle"].get<std::string>() << "  dim " << c["dim"]
              << " (" << join(c["characteristic_sequence"]) << ") series " << join(c["series_dims"]) << " h2 "
              << c["h2_dim"] << '\n';
  return kPass;
}

int cmd_enumerate(std::size_t dim, bool as_json) {
  char* out = nullptr;
  check(nlg_enumerate_json(dim, &out));
  const std::string text = take(out);
  if (as_json) {
    std::cout << text << '\n';
    return kPass;
  }
  const json j = json::parse(text);
  for (const auto& m : j["models"])
    std::cout << m["id"].get<std::string>() << (m["filiform"].get<bool>() ? "  filiform" : "") << '\n';
  std::cout << "count: " << j["count"] << '\n';
  return kPass;
}

int cmd_verify(std::size_t max_dim, std::uint64_t seed, bool as_json, const std::string& corrupt) {
  int passed = 0;
  char* report = nullptr;
  check(nlg_verify_paper(max_dim, seed, as_json ? 1 : 0, corrupt.empty() ? nullptr : corrupt.c_str(), &passed,
                         &report));
  std::cout << take(report);
  return passed ? kPass : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on naturally graded nilpotent Lie algebras"};
  app.require_subcommand(1);
  std::uint64_t seed = nlg_default_seed();
  bool as_json = false;

  std::string source, format = "json";
  auto* build = app.add_subcommand("build", "Emit a catalog model");
  build->add_option("model", source, "Model id, e.g. L(7;1,3) or VQ(5)")->required();
  build->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "mc"}));

  auto* parse = app.add_subcommand("parse", "Parse structure equations, echo canonical form, report Jacobi defects");
  parse->add_option("file", source, "Structure-equation file")->required();

  auto* invariants = app.add_subcommand("invariants", "Lower central series, center, characteristic sequence");
  invariants->add_option("source", source, "File (.json or structure equations) or model id")->required();
  invariants->add_option("--seed", seed, "Seed for characteristic-sequence sampling");
  invariants->add_flag("--json", as_json);

  std::optional<std::string> weights;
  auto* graded = app.add_subcommand("check-graded", "Grading certificate");
  graded->add_option("source", source, "File or model id")->required();
  graded->add_option("--weights", weights, "Comma-separated weights (default: attached)");

  auto* h2 = app.add_subcommand("h2", "Second cohomology with trivial coefficients");
  h2->add_option("source", source, "File or model id")->required();
  h2->add_flag("--json", as_json);

  int max_weight = 0;
  auto* ext = app.add_subcommand("extensions", "Graded one-dimensional central extensions with linear sequence");
  ext->add_option("source", source, "File with attached weights, or model id")->required();
  ext->add_option("--max-weight", max_weight, "Largest weight to search (default nilindex+1)");
  ext->add_option("--seed", seed, "Seed for random cocycle combinations");
  ext->add_flag("--json", as_json);

  std::size_t dim = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List the catalog models of one dimension");
  enumerate->add_option("--dim", dim, "Dimension")->required();
  enumerate->add_flag("--json", as_json);

  std::size_t max_dim = 0;
  std::string corrupt;
  auto* verify = app.add_subcommand("verify-paper", "Run the full verification pipeline");
  verify->add_option("--max-dim", max_dim, "Largest model dimension")->required();
  verify->add_option("--seed", seed, "Seed for all sampling");
  verify->add_flag("--json", as_json);
  verify->add_option("--corrupt", corrupt, "Perturb one model (test hook)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*build) return cmd_build(source, format);
    if (*parse) return cmd_parse(source);
    if (*invariants) return cmd_invariants(source, seed, as_json);
    if (*graded) return cmd_check_graded(source, weights);
    if (*h2) return cmd_h2(source, as_json);
    if (*ext) return cmd_extensions(source, max_weight, seed, as_json);
    if (*enumerate) return cmd_enumerate(dim, as_json);
    if (*verify) return cmd_verify(max_dim, seed, as_json, corrupt);
  } catch (const Failure& f) {
    std::cerr << "nlg: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "nlg: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
