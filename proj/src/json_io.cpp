// Copyright 2026 the vlsc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vlsc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace vlsc {

using nlohmann::json;

namespace {

json parse(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_argument(origin + ": " + e.what());
  }
}

const json& field(const json& j, const char* name, const std::string& origin) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw invalid_argument(origin + ": missing field '" + name + "'");
  }
  return *it;
}

std::vector<Symbol> symbol_list(const json& j, const char* name,
                                const std::string& origin) {
  const json& arr = field(j, name, origin);
  if (!arr.is_array()) {
    throw invalid_argument(origin + ": field '" + name + "' must be an array");
  }
  std::vector<Symbol> out;
  for (const auto& v : arr) {
    if (!v.is_string()) {
      throw invalid_argument(origin + ": field '" + name +
                             "' must contain strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<double> number_list(const json& arr, const std::string& what,
                                const std::string& origin) {
  if (!arr.is_array()) {
    throw invalid_argument(origin + ": " + what + " must be an array");
  }
  std::vector<double> out;
  for (const auto& v : arr) {
    if (!v.is_number()) {
      throw invalid_argument(origin + ": " + what + " must contain numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_argument("cannot write '" + path + "'");
  out << text;
}

FinitePmf pmf_from_json_text(const std::string& text, const std::string& origin) {
  const json j = parse(text, origin);
  try {
    return FinitePmf(symbol_list(j, "alphabet", origin),
                     number_list(field(j, "probs", origin), "'probs'", origin));
  } catch (const invalid_argument& e) {
    throw invalid_argument(origin + ": " + e.what());
  }
}

FinitePmf load_pmf(const std::string& path) {
  return pmf_from_json_text(read_text_file(path), path);
}

std::string pmf_to_json_text(const FinitePmf& pmf) {
  json j;
  j["alphabet"] = pmf.alphabet();
  j["probs"] = pmf.probs();
  return j.dump(2) + "\n";
}

DistortionSpec distortion_from_json_text(const std::string& text,
                                         const std::string& origin) {
  const json j = parse(text, origin);
  DistortionSpec spec;
  spec.source_alphabet = symbol_list(j, "source_alphabet", origin);
  spec.repro_alphabet = symbol_list(j, "repro_alphabet", origin);
  const json& rows = field(j, "d", origin);
  if (!rows.is_array()) {
    throw invalid_argument(origin + ": field 'd' must be a matrix");
  }
  std::size_t row_index = 0;
  for (const auto& row : rows) {
    spec.d.push_back(number_list(row, "'d' row " + std::to_string(row_index),
                                 origin));
    ++row_index;
  }
  try {
    spec.validate();
  } catch (const invalid_argument& e) {
    throw invalid_argument(origin + ": " + e.what());
  }
  return spec;
}

DistortionSpec load_distortion(const std::string& path) {
  return distortion_from_json_text(read_text_file(path), path);
}

std::string distortion_to_json_text(const DistortionSpec& spec) {
  json j;
  j["source_alphabet"] = spec.source_alphabet;
  j["repro_alphabet"] = spec.repro_alphabet;
  j["d"] = spec.d;
  return j.dump(2) + "\n";
}

std::string code_to_json_text(const Code& code, const FinitePmf& source,
                              const DistortionSpec& spec) {
  json j;
  j["variant"] = to_string(code.variant);
  json encoder = json::array();
  for (std::size_t x = 0; x < code.encoder.size(); ++x) {
    json branches = json::array();
    for (const CodeBranch& b : code.encoder[x]) {
      branches.push_back({{"codeword", code.codewords[b.center]},
                          {"prob", b.prob}});
    }
    encoder.push_back({{"symbol", source.symbol(x)}, {"branches", branches}});
  }
  j["encoder"] = encoder;
  json decoder = json::array();
  for (std::size_t i = 0; i < code.codewords.size(); ++i) {
    decoder.push_back({{"codeword", code.codewords[i]},
                       {"symbol", spec.repro_alphabet[code.center_repro[i]]}});
  }
  j["decoder"] = decoder;
  return j.dump(2) + "\n";
}

std::string rd_solution_to_json_text(const RdSolution& solution) {
  json j;
  j["D"] = solution.distortion;
  j["R"] = solution.rate;
  j["lambda_star"] = solution.lambda_star;
  j["V"] = solution.dispersion;
  j["tilted_info"] = solution.tilted_info;
  j["output_marginal"] = {{"alphabet", solution.output_marginal.alphabet()},
                          {"probs", solution.output_marginal.probs()}};
  j["kernel"] = solution.kernel;
  return j.dump(2) + "\n";
}

std::string gquantity_csv(
    const std::vector<std::tuple<double, double, double, double,
                                 std::optional<double>>>& rows) {
  std::string out = "D,epsilon,t,alpha,G\n";
  for (const auto& [level, epsilon, t, alpha, g] : rows) {
    out += format_real(level) + "," + format_real(epsilon) + "," +
           format_real(t) + "," + format_real(alpha) + "," +
           (g ? format_real(*g) : "inf") + "\n";
  }
  return out;
}

std::string rd_sweep_csv(const std::vector<RdSolution>& rows) {
  std::string out = "D,R,lambda_star,V\n";
  for (const auto& r : rows) {
    out += format_real(r.distortion) + "," + format_real(r.rate) + "," +
           format_real(r.lambda_star) + "," + format_real(r.dispersion) + "\n";
  }
  return out;
}

std::string sweep_csv(const std::vector<AsymptoticRow>& rows,
                      const std::vector<RateBounds>& bounds, double t,
                      double epsilon, double level) {
  std::string out = "n,t,epsilon,D,lower,upper,gaussian,gap,scaled_gap\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const AsymptoticRow& row = rows[i];
    out += std::to_string(row.n) + "," + format_real(t) + "," +
           format_real(epsilon) + "," + format_real(level) + ",";
    if (row.skipped) {
      out += "skipped,skipped,skipped,skipped,skipped\n";
      continue;
    }
    const RateBounds& b = bounds[i];
    out += (b.lower ? format_real(*b.lower) : "inf");
    out += ",";
    out += (b.upper ? format_real(*b.upper) : "inf");
    out += "," + format_real(row.gaussian) + ",";
    out += (row.gap ? format_real(*row.gap) : "inf");
    out += ",";
    out += (row.scaled_gap ? format_real(*row.scaled_gap) : "inf");
    out += "\n";
  }
  return out;
}

namespace {

GridConfig grid_from_json(const json& j, const std::string& origin) {
  GridConfig grid;
  grid.level = number_list(field(j, "D", origin), "'D'", origin);
  grid.epsilon = number_list(field(j, "epsilon", origin), "'epsilon'", origin);
  grid.t = number_list(field(j, "t", origin), "'t'", origin);
  if (grid.level.empty() || grid.epsilon.empty() || grid.t.empty()) {
    throw invalid_argument(origin + ": grids must be non-empty");
  }
  return grid;
}

}  // namespace

SuiteConfig suite_config_from_json_text(const std::string& text,
                                        const std::string& origin) {
  const json j = parse(text, origin);
  SuiteConfig config;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) {
      throw invalid_argument(origin + ": 'seed' must be a non-negative integer");
    }
    config.seed = j["seed"].get<std::uint64_t>();
    config.seed_set = true;
  }
  if (j.contains("workers")) config.workers = j["workers"].get<std::size_t>();
  if (j.contains("checks")) {
    for (const auto& c : j["checks"]) {
      if (!c.is_string()) {
        throw invalid_argument(origin + ": 'checks' must contain strings");
      }
      config.checks.push_back(c.get<std::string>());
    }
  }
  if (j.contains("negative_controls")) {
    config.negative_controls = j["negative_controls"].get<bool>();
  }
  if (j.contains("budgets")) {
    const json& b = j["budgets"];
    if (b.contains("random_kernels")) {
      config.budgets.random_kernels = b["random_kernels"].get<std::size_t>();
    }
    if (b.contains("random_codes")) {
      config.budgets.random_codes = b["random_codes"].get<std::size_t>();
    }
    if (b.contains("random_prefix_codes")) {
      config.budgets.random_prefix_codes =
          b["random_prefix_codes"].get<std::size_t>();
    }
    if (b.contains("map_enumeration_limit")) {
      config.budgets.map_enumeration_limit =
          b["map_enumeration_limit"].get<double>();
    }
  }
  if (j.contains("instances")) {
    std::size_t index = 0;
    for (const auto& inst : j["instances"]) {
      const std::string tag = origin + ": instances[" + std::to_string(index) + "]";
      ExplicitInstanceConfig e{
          .name = inst.contains("name") ? inst["name"].get<std::string>()
                                        : "instance-" + std::to_string(index),
          .source = FinitePmf(
              symbol_list(field(inst, "source", tag), "alphabet", tag),
              number_list(field(field(inst, "source", tag), "probs", tag),
                          "'probs'", tag)),
          .spec = distortion_from_json_text(
              field(inst, "distortion", tag).dump(), tag),
          .grid = grid_from_json(inst, tag)};
      config.instances.push_back(std::move(e));
      ++index;
    }
  }
  if (j.contains("families")) {
    std::size_t index = 0;
    for (const auto& fam : j["families"]) {
      const std::string tag = origin + ": families[" + std::to_string(index) + "]";
      RandomFamilyConfig f;
      f.name = fam.contains("name") ? fam["name"].get<std::string>()
                                    : "family-" + std::to_string(index);
      f.count = field(fam, "count", tag).get<std::size_t>();
      if (fam.contains("max_source")) f.max_source = fam["max_source"].get<std::size_t>();
      if (fam.contains("max_repro")) f.max_repro = fam["max_repro"].get<std::size_t>();
      if (fam.contains("dyadic_grid")) f.dyadic_grid = fam["dyadic_grid"].get<unsigned>();
      f.grid = grid_from_json(fam, tag);
      config.families.push_back(std::move(f));
      ++index;
    }
  }
  return config;
}

SuiteConfig load_suite_config(const std::string& path) {
  return suite_config_from_json_text(read_text_file(path), path);
}

std::string report_to_json_line(const BoundReport& report) {
  json j;
  j["claim"] = report.claim;
  j["instance"] = report.instance;
  j["lhs"] = format_real(report.lhs);
  j["rhs"] = format_real(report.rhs);
  j["slack"] = format_real(report.slack);
  j["verdict"] = report.verdict;
  return j.dump();
}

std::string suite_report_jsonl(const SuiteResult& result) {
  std::string out;
  for (const auto& r : result.reports) out += report_to_json_line(r) + "\n";
  json summary;
  summary["summary"] = {{"passed", result.passed},
                        {"failed", result.failed},
                        {"all_pass", result.all_pass()}};
  out += summary.dump() + "\n";
  return out;
}

}  // namespace vlsc
