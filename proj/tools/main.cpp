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

// Command-line front end: loads instances from JSON files, evaluates the
// covering-based minimum Renyi output entropy over parameter grids, builds
// the three code variants, sweeps blocklengths against the Gaussian
// approximation, and drives the bound-verification suite.
//
// Exit status: 0 success, 1 failed verdicts, 2 configuration/input errors.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "vlsc/blocklength.hpp"
#include "vlsc/bounds.hpp"
#include "vlsc/json_io.hpp"

namespace {

using namespace vlsc;

// Grid values arrive either as plain numbers (repeatable) or as "a:b:step"
// ranges, inclusive of the endpoint up to a step-sized slack.
std::vector<double> expand_grid(const std::vector<std::string>& raw,
                                const char* flag) {
  std::vector<double> out;
  for (const std::string& item : raw) {
    const auto c1 = item.find(':');
    if (c1 == std::string::npos) {
      try {
        out.push_back(std::stod(item));
      } catch (...) {
        throw invalid_argument(std::string(flag) + ": cannot parse '" + item + "'");
      }
      continue;
    }
    const auto c2 = item.find(':', c1 + 1);
    if (c2 == std::string::npos) {
      throw invalid_argument(std::string(flag) + ": range '" + item +
                             "' must be a:b:step");
    }
    double a, b, step;
    try {
      a = std::stod(item.substr(0, c1));
      b = std::stod(item.substr(c1 + 1, c2 - c1 - 1));
      step = std::stod(item.substr(c2 + 1));
    } catch (...) {
      throw invalid_argument(std::string(flag) + ": cannot parse '" + item + "'");
    }
    if (!(step > 0.0) || b < a) {
      throw invalid_argument(std::string(flag) + ": bad range '" + item + "'");
    }
    for (double v = a; v <= b + 1e-12 * std::max(1.0, step); v += step) {
      out.push_back(v);
    }
  }
  if (out.empty()) throw invalid_argument(std::string(flag) + ": grid is empty");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    write_text_file(out_path, text);
  }
}

struct CommonArgs {
  std::string source_path;
  std::string distortion_path;
  std::vector<std::string> level_raw{"0"};
  std::vector<std::string> epsilon_raw{"0"};
  std::vector<std::string> t_raw{"1"};
  std::string out_path;
  std::string format = "csv";
};

void add_instance_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--source", args.source_path, "source pmf JSON file")
      ->required();
  cmd->add_option("--distortion", args.distortion_path,
                  "distortion matrix JSON file")
      ->required();
}

int cmd_gquantity(const CommonArgs& args) {
  const FinitePmf source = load_pmf(args.source_path);
  const DistortionSpec spec = load_distortion(args.distortion_path);
  std::vector<std::tuple<double, double, double, double, std::optional<double>>>
      rows;
  for (double level : expand_grid(args.level_raw, "--D")) {
    for (double epsilon : expand_grid(args.epsilon_raw, "--epsilon")) {
      for (double t : expand_grid(args.t_raw, "--t")) {
        const double alpha = t == 0.0 ? 1.0 : 1.0 / (1.0 + t);
        rows.emplace_back(level, epsilon, t, alpha,
                          g_quantity(source, spec, level, epsilon, alpha));
      }
    }
  }
  emit(gquantity_csv(rows), args.out_path);
  return 0;
}

int cmd_build_code(const CommonArgs& args, const std::string& variant) {
  const FinitePmf source = load_pmf(args.source_path);
  const DistortionSpec spec = load_distortion(args.distortion_path);
  const double level = expand_grid(args.level_raw, "--D").front();
  const double epsilon = expand_grid(args.epsilon_raw, "--epsilon").front();
  const CoveringPlan plan = greedy_cover(source, spec, level, epsilon);
  Code code;
  if (variant == "stochastic") {
    code = build_stochastic_code(plan, source.size());
  } else if (variant == "det") {
    code = build_deterministic_code(plan, source.size());
  } else if (variant == "prefix") {
    code = build_prefix_code(plan, source.size());
  } else {
    throw invalid_argument("--variant must be stochastic, det or prefix");
  }
  if (!args.out_path.empty()) {
    write_text_file(args.out_path, code_to_json_text(code, source, spec));
  }
  std::string table = "t,excess,cgf,mean_length,max_length\n";
  for (double t : expand_grid(args.t_raw, "--t")) {
    if (!(t > 0.0)) continue;
    const CodeMetrics m = code_metrics(code, source, spec, level, t);
    table += format_real(t) + "," + format_real(m.excess_probability) + "," +
             format_real(m.cgf) + "," + format_real(m.mean_length) + "," +
             std::to_string(m.max_length) + "\n";
  }
  std::fputs(table.c_str(), stdout);
  return 0;
}

int cmd_rd(const CommonArgs& args) {
  const FinitePmf source = load_pmf(args.source_path);
  const DistortionSpec spec = load_distortion(args.distortion_path);
  std::vector<RdSolution> rows;
  for (double level : expand_grid(args.level_raw, "--D")) {
    rows.push_back(rd_at_distortion(source, spec, level));
  }
  if (args.format == "json" && rows.size() == 1) {
    emit(rd_solution_to_json_text(rows.front()), args.out_path);
  } else {
    emit(rd_sweep_csv(rows), args.out_path);
  }
  return 0;
}

int cmd_sweep(const CommonArgs& args, const std::vector<std::string>& n_raw,
              std::size_t budget, std::size_t workers) {
  const FinitePmf source = load_pmf(args.source_path);
  const DistortionSpec spec = load_distortion(args.distortion_path);
  const double level = expand_grid(args.level_raw, "--D").front();
  const double epsilon = expand_grid(args.epsilon_raw, "--epsilon").front();
  const double t = expand_grid(args.t_raw, "--t").front();
  std::vector<std::size_t> ns;
  for (double v : expand_grid(n_raw, "--n")) {
    if (v < 1.0) throw invalid_argument("--n: blocklengths must be >= 1");
    ns.push_back(static_cast<std::size_t>(v + 0.5));
  }
  const std::vector<AsymptoticRow> rows =
      asymptotic_table(source, spec, level, epsilon, ns, budget, workers);
  std::vector<RateBounds> bounds(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].skipped) continue;
    bounds[i] = blocklength_rate_bounds(
        build_product(source, spec, rows[i].n, budget), level, epsilon, t);
  }
  emit(sweep_csv(rows, bounds, t, epsilon, level), args.out_path);
  return 0;
}

int cmd_verify(const std::string& config_path, bool negative_controls,
               const std::string& out_path,
               std::optional<std::size_t> workers,
               std::optional<std::uint64_t> seed_flag) {
  SuiteConfig config =
      config_path.empty() ? default_suite_config() : load_suite_config(config_path);
  if (seed_flag) {
    config.seed = *seed_flag;
    config.seed_set = true;
  }
  if (workers) config.workers = *workers;
  config.negative_controls = config.negative_controls || negative_controls;
  const SuiteResult result = run_suite(config);
  emit(suite_report_jsonl(result), out_path);
  if (!result.all_pass()) {
    for (const auto& r : result.reports) {
      if (!r.verdict) {
        std::fprintf(stderr, "failed: %s [%s]\n", r.claim.c_str(),
                     r.instance.c_str());
      }
    }
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variable-length lossy source coding toolkit"};
  app.require_subcommand(1);

  CommonArgs gq_args, bc_args, rd_args, sweep_args;
  std::string variant = "stochastic";
  std::vector<std::string> n_raw{"1:8:1"};
  std::size_t budget = kDefaultProductBudget;
  std::size_t workers = 1;
  std::string config_path, verify_out;
  bool negative_controls = false;
  std::uint64_t seed_value = 0;

  CLI::App* gq = app.add_subcommand(
      "gquantity", "minimum output Renyi entropy over a (D, epsilon, t) grid");
  add_instance_flags(gq, gq_args);
  gq->add_option("--D", gq_args.level_raw, "distortion level grid");
  gq->add_option("--epsilon", gq_args.epsilon_raw, "excess budget grid");
  gq->add_option("--t", gq_args.t_raw, "cgf parameter grid (0 = mean-length limit)");
  gq->add_option("--out", gq_args.out_path, "output file (default stdout)");

  CLI::App* bc = app.add_subcommand("build-code",
                                    "construct a code and print its metrics");
  add_instance_flags(bc, bc_args);
  bc->add_option("--D", bc_args.level_raw, "distortion level");
  bc->add_option("--epsilon", bc_args.epsilon_raw, "excess budget");
  bc->add_option("--t", bc_args.t_raw, "cgf parameter grid");
  bc->add_option("--variant", variant, "stochastic | det | prefix");
  bc->add_option("--out", bc_args.out_path, "code export JSON file");

  CLI::App* rd = app.add_subcommand(
      "rd", "rate-distortion curve with slope, tilted information and dispersion");
  add_instance_flags(rd, rd_args);
  rd->add_option("--D", rd_args.level_raw, "distortion grid");
  rd->add_option("--format", rd_args.format, "csv | json");
  rd->add_option("--out", rd_args.out_path, "output file (default stdout)");

  CLI::App* sw = app.add_subcommand(
      "sweep", "blocklength sweep against the Gaussian approximation");
  add_instance_flags(sw, sweep_args);
  sw->add_option("--D", sweep_args.level_raw, "distortion level");
  sw->add_option("--epsilon", sweep_args.epsilon_raw, "excess budget");
  sw->add_option("--t", sweep_args.t_raw, "cgf parameter for the two-sided bounds");
  sw->add_option("--n", n_raw, "blocklength grid");
  sw->add_option("--budget", budget, "max materialized distortion entries");
  sw->add_option("--workers", workers, "parallel rows");
  sw->add_option("--out", sweep_args.out_path, "output CSV file");

  CLI::App* vf = app.add_subcommand("verify", "run the bound-verification suite");
  vf->add_option("--config", config_path, "suite config JSON (default built-in)");
  vf->add_flag("--negative-control", negative_controls,
               "run the tampered-artifact controls (expected to fail)");
  vf->add_option("--out", verify_out, "report JSONL file (default stdout)");
  CLI::Option* workers_opt = vf->add_option("--workers", workers, "parallel checks");
  CLI::Option* seed_opt = vf->add_option("--seed", seed_value, "root random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gq->parsed()) return cmd_gquantity(gq_args);
    if (bc->parsed()) return cmd_build_code(bc_args, variant);
    if (rd->parsed()) return cmd_rd(rd_args);
    if (sw->parsed()) return cmd_sweep(sweep_args, n_raw, budget, workers);
    if (vf->parsed()) {
      std::optional<std::uint64_t> seed;
      if (seed_opt->count() > 0) seed = seed_value;
      std::optional<std::size_t> worker_override;
      if (workers_opt->count() > 0) worker_override = workers;
      return cmd_verify(config_path, negative_controls, verify_out,
                        worker_override, seed);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
