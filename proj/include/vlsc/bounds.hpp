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

#ifndef VLSC_BOUNDS_HPP
#define VLSC_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vlsc/code.hpp"
#include "vlsc/covering.hpp"
#include "vlsc/rate_distortion.hpp"
#include "vlsc/sampling.hpp"

namespace vlsc {

// One verified inequality: verdict <=> lhs <= rhs + tolerance, with the
// orientation fixed per claim; slack = rhs - lhs. Equality claims are stated
// as |difference| <= tolerance with rhs = 0.
struct BoundReport {
  std::string claim;
  std::string instance;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool verdict = false;
};

struct CheckResult {
  std::vector<BoundReport> reports;
  bool ok() const;
  const BoundReport& worst() const;
};

BoundReport make_report(std::string claim, std::string instance, double lhs,
                        double rhs, double tolerance);

// Achievability of the covering construction: the stochastic code's excess
// equals epsilon exactly when k* >= 2 (gamma when k* = 1, which is then at
// most epsilon), and its cgf at parameter t never exceeds the minimum output
// Renyi entropy of order 1/(1+t).
CheckResult check_achievability(const FinitePmf& source,
                                const DistortionSpec& spec, double level,
                                double epsilon, double t,
                                const std::string& instance_tag);

// Converse for an injective-decoder code meeting the (level, epsilon) excess
// constraint: cgf >= G - log2 log2(1 + min(|X|, |Y|)). Also verifies the two
// ingredients separately: the used-codeword sum bound
// sum 2^-len <= log2(1 + min(|X|, |Y|)) and the Holder step
// cgf >= H_{1/(1+t)}(output) - log2(sum 2^-len).
CheckResult check_converse(const Code& code, const FinitePmf& source,
                           const DistortionSpec& spec, double level,
                           double epsilon, double t,
                           const std::string& instance_tag);

// Per-index chain for the constructed code: 2^(t len_i) <= i^t and
// i^t <= [sum_j (P(y_j)/P(y_i))^(1/(1+t))]^t for every center i.
CheckResult check_index_chain(const CoveringPlan& plan, double t,
                              const std::string& instance_tag);

// Majorization optimality of the induced output distribution: it majorizes
// the output marginal of every feasible deterministic map (exhaustive, when
// |Y|^|X| fits the limit), of `kernel_budget` random feasible kernels, and of
// the constructed code itself; consequently no sampled output entropy drops
// below G. The claim is a theorem exactly on instances where
// induced_minimality_certified holds; run_suite applies it there. On other
// instances the check reports what it finds, which may legitimately be a
// counterexample.
CheckResult check_majorization(const FinitePmf& source,
                               const DistortionSpec& spec,
                               const CoveringPlan& plan,
                               std::size_t kernel_budget, std::uint64_t seed,
                               double map_enumeration_limit,
                               const std::string& instance_tag);

// Deterministic-code achievability: excess <= epsilon and cgf bounded by G
// plus the penalty term
// (eps - gamma) * beta^(-t/(1+t)) * log2(e) / (t * 2^((t/(1+t)) G)).
CheckResult check_deterministic_penalty(const FinitePmf& source,
                                        const DistortionSpec& spec,
                                        const CoveringPlan& plan, double t,
                                        const std::string& instance_tag);
double deterministic_penalty(const CoveringPlan& plan, double t);

// Prefix-code sandwich: the constructed prefix code is prefix-free with
// Kraft sum <= 1 and G <= cgf <= G + floor(log2 k*) + 1; additionally,
// `random_codes` random feasible prefix codes all satisfy the prefix
// converse cgf >= G.
CheckResult check_prefix_sandwich(const FinitePmf& source,
                                  const DistortionSpec& spec, double level,
                                  double epsilon, double t,
                                  std::size_t random_codes, std::uint64_t seed,
                                  const std::string& instance_tag);

// cgf limit checks: at t = 1e-6 the cgf sits within 1e-4 of the mean length,
// at t = 64 within 0.05 of the maximum length.
CheckResult check_cgf_limits(const Code& code, const FinitePmf& source,
                             const DistortionSpec& spec, double level,
                             const std::string& instance_tag);

// Zero-excess converse floor (tilted Renyi entropy based).
CheckResult check_tilted_converse(const FinitePmf& source,
                                  const DistortionSpec& spec, double level,
                                  double t, const Code& code,
                                  const std::string& instance_tag);

// --- negative controls -----------------------------------------------------
// Deliberate corruptions; each makes exactly the matching check fail.

Code tamper_lengthen_codeword(Code code, std::size_t center, std::size_t new_length);
Code tamper_collapse_lengths(Code code);
Code tamper_branch_probability(Code code);
Code tamper_break_prefix(Code code);
CoveringPlan tamper_flatten_tail(CoveringPlan plan);
CoveringPlan tamper_inflate_beta(CoveringPlan plan, double beta);
Code tamper_starve_max_length(Code code);

// --- suite ------------------------------------------------------------------

struct GridConfig {
  std::vector<double> level;    // distortion levels D
  std::vector<double> epsilon;  // excess budgets
  std::vector<double> t;        // cgf parameters
};

struct ExplicitInstanceConfig {
  std::string name;
  FinitePmf source;
  DistortionSpec spec;
  GridConfig grid;
};

struct RandomFamilyConfig {
  std::string name;
  std::size_t count = 0;
  std::size_t max_source = 4;
  std::size_t max_repro = 4;
  unsigned dyadic_grid = 8;  // 0 = continuous masses
  GridConfig grid;
};

struct SuiteBudgets {
  std::size_t random_kernels = 200;
  std::size_t random_codes = 50;
  std::size_t random_prefix_codes = 20;
  double map_enumeration_limit = 100000.0;
};

struct SuiteConfig {
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::size_t workers = 1;
  std::vector<std::string> checks;  // empty = all
  std::vector<ExplicitInstanceConfig> instances;
  std::vector<RandomFamilyConfig> families;
  SuiteBudgets budgets;
  bool negative_controls = false;
};

// The built-in configuration used when no file is given: the three-symbol
// demonstration instance plus a small random family.
SuiteConfig default_suite_config();

struct SuiteResult {
  std::vector<BoundReport> reports;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool all_pass() const { return failed == 0; }
};

// Runs every configured check over every configured instance/grid point.
// Infeasible grid points are skipped. Throws invalid_argument for config
// errors (e.g. a randomized check without a seed).
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace vlsc

#endif  // VLSC_BOUNDS_HPP
