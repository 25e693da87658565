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

// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// The randomized instance family is pinned here: alphabet sizes 2..5,
// source masses on the 1/8 lattice (so every covering cell and every beta
// carries at least 1/8 of mass, keeping the t = 64 cgf limit check within
// its 0.05 budget: the deficit is |log2(mass at max length)| / 64 <= 3/64),
// distortion entries uniform in [0, 1] with a zero-cost matching half the
// time, epsilon on the same 1/8 lattice, and a fixed t grid.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vlsc/blocklength.hpp"
#include "vlsc/bounds.hpp"
#include "vlsc/json_io.hpp"

using namespace vlsc;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2026u;
const std::vector<double> kTGrid = {0.1, 0.5, 1.0, 2.0, 8.0};

struct FamilyEntry {
  Instance instance;
  double level = 0.0;
  double epsilon = 0.0;
  CoveringPlan plan;
  Code stochastic;
  Code deterministic;
  Code prefix;
  std::map<double, double> g_by_t;
};

std::vector<FamilyEntry>& family() {
  static std::vector<FamilyEntry> entries;
  return entries;
}

struct Line {
  int id = 0;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

Line run(int id, const std::function<std::string()>& body) {
  Line line;
  line.id = id;
  const auto start = std::chrono::steady_clock::now();
  try {
    line.detail = body();
    line.pass = true;
  } catch (const std::exception& e) {
    line.detail = e.what();
    line.pass = false;
  }
  line.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return line;
}

[[noreturn]] void fail(const std::string& message) {
  throw std::runtime_error(message);
}

void require(bool condition, const std::string& message) {
  if (!condition) fail(message);
}

void require_runtime(double seconds, double budget, const char* what) {
  if (seconds > budget) {
    fail(std::string(what) + " exceeded its runtime budget: " +
         format_real(seconds) + " s > " + format_real(budget) + " s");
  }
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// --- criterion 1: stochastic achievability over the random family ----------

std::string criterion1() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng = seeded_rng(kSeed, "family");
  const std::vector<double> level_grid = {0.05, 0.2, 0.45, 0.8};
  const std::vector<double> epsilon_grid = {0.0, 0.125, 0.25, 0.375};

  std::size_t exact_eps = 0, single_cell = 0, cgf_points = 0;
  while (family().size() < 520) {
    Instance inst = random_instance(rng, 5, 5, 8);
    // Grid points are visited in a shuffled order per instance; a feasible
    // point whose covering splits its last cell (k* >= 2) is preferred, so
    // the family concentrates on the regime where the excess meets epsilon
    // with equality. Single-cell plans still occur and are asserted sharply.
    std::vector<std::pair<double, double>> combos;
    for (double level : level_grid) {
      for (double epsilon : epsilon_grid) combos.emplace_back(level, epsilon);
    }
    std::shuffle(combos.begin(), combos.end(), rng);
    std::optional<std::pair<double, double>> fallback;
    std::optional<std::pair<double, double>> chosen;
    for (const auto& combo : combos) {
      if (!feasibility(inst.source, inst.spec, combo.first, combo.second)) continue;
      if (!fallback) fallback = combo;
      if (greedy_cover(inst.source, inst.spec, combo.first, combo.second).k_star >=
          2) {
        chosen = combo;
        break;
      }
    }
    if (!chosen) chosen = fallback;
    if (!chosen) continue;
    const auto [level, epsilon] = *chosen;
    FamilyEntry entry{.instance = inst,
                      .level = level,
                      .epsilon = epsilon,
                      .plan = greedy_cover(inst.source, inst.spec, level, epsilon),
                      .stochastic = {},
                      .deterministic = {},
                      .prefix = {},
                      .g_by_t = {}};
    entry.stochastic = build_stochastic_code(entry.plan, inst.source.size());
    entry.deterministic = build_deterministic_code(entry.plan, inst.source.size());
    entry.prefix = build_prefix_code(entry.plan, inst.source.size());
    for (double t : kTGrid) {
      const auto g =
          g_quantity(inst.source, inst.spec, level, epsilon, 1.0 / (1.0 + t));
      require(g.has_value(), "criterion 1: feasible point lost its G value");
      entry.g_by_t[t] = *g;
    }
    family().push_back(std::move(entry));
  }

  for (const FamilyEntry& e : family()) {
    const CodeMetrics m =
        code_metrics(e.stochastic, e.instance.source, e.instance.spec, e.level, 1.0);
    if (e.plan.k_star >= 2) {
      require(std::fabs(m.excess_probability - e.epsilon) <= 1e-10,
              "criterion 1: excess != epsilon on a split-cell plan");
      ++exact_eps;
    } else {
      // Single-cell plans place both branches inside the ball: the excess is
      // exactly the unencoded tail gamma <= epsilon.
      require(std::fabs(m.excess_probability - e.plan.gamma_mass) <= 1e-10,
              "criterion 1: excess != gamma on a single-cell plan");
      require(m.excess_probability <= e.epsilon + 1e-12,
              "criterion 1: excess above epsilon");
      ++single_cell;
    }
    for (double t : kTGrid) {
      const CodeMetrics mt =
          code_metrics(e.stochastic, e.instance.source, e.instance.spec, e.level, t);
      require(mt.cgf <= e.g_by_t.at(t) + 1e-9,
              "criterion 1: cgf above G at t=" + format_real(t));
      ++cgf_points;
    }
  }
  const double elapsed = seconds_since(start);
  require_runtime(elapsed, 30.0, "criterion 1");
  return std::to_string(family().size()) + " instances (excess=eps: " +
         std::to_string(exact_eps) + ", single-cell excess=gamma<=eps: " +
         std::to_string(single_cell) + "), " + std::to_string(cgf_points) +
         " cgf<=G points";
}

// --- criterion 2: converse, exhaustive plus random ---------------------------

std::string criterion2() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng = seeded_rng(kSeed, "converse");
  std::size_t exhaustive_checked = 0, random_checked = 0;

  auto converse_holds = [](const FinitePmf& source, const DistortionSpec& spec,
                           double level, const Code& code, double t) {
    const CodeMetrics m = code_metrics(code, source, spec, level, t);
    // Sharpest budget the code itself satisfies. Codes that always miss are
    // outside the scope of any epsilon < 1 constraint.
    const double epsilon = m.excess_probability;
    if (epsilon >= 1.0 - 1e-12) return true;
    const auto g = g_quantity(source, spec, level, epsilon, 1.0 / (1.0 + t));
    if (!g) fail("criterion 2: G infeasible at the code's own excess");
    const double floor =
        *g - std::log2(std::log2(
                 1.0 + double(std::min(spec.source_size(), spec.repro_size()))));
    return m.cgf >= floor - 1e-9;
  };

  // Exhaustive: |X| = 3, |Y| = 2, codeword indices up to 7.
  for (int i = 0; i < 24; ++i) {
    const FinitePmf source = random_pmf(rng, 3, 8);
    const DistortionSpec spec = random_distortion(rng, 3, 2, i % 2 == 0);
    const std::vector<Code> codes = enumerate_injective_codes(spec, 7);
    for (double level : {0.3, 0.6}) {
      for (const Code& code : codes) {
        for (double t : {0.5, 1.0, 2.0}) {
          require(converse_holds(source, spec, level, code, t),
                  "criterion 2: exhaustive converse violation");
          ++exhaustive_checked;
        }
      }
    }
  }

  // Random codes on larger instances.
  const std::size_t kRandomCodes = 100000;
  std::size_t produced = 0;
  while (produced < kRandomCodes) {
    const Instance inst = random_instance(rng, 5, 5, 8);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    const double level = ud(rng);
    const double epsilon = 0.125 * double(1 + produced % 3);
    if (!feasibility(inst.source, inst.spec, level, epsilon)) continue;
    for (int j = 0; j < 1000 && produced < kRandomCodes; ++j, ++produced) {
      const Code code = random_injective_code(rng, inst.source, inst.spec, level,
                                              epsilon, 15, true);
      const double t = kTGrid[produced % kTGrid.size()];
      require(converse_holds(inst.source, inst.spec, level, code, t),
              "criterion 2: random converse violation");
      ++random_checked;
    }
  }
  const double elapsed = seconds_since(start);
  require_runtime(elapsed, 60.0, "criterion 2");
  return std::to_string(exhaustive_checked) + " exhaustive + " +
         std::to_string(random_checked) + " random codes, zero violations";
}

// --- criterion 3: G-optimality oracle ----------------------------------------

std::string criterion3() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng = seeded_rng(kSeed, "g-oracle");
  const std::vector<double> alpha_grid = {1.0 / 1.1, 1.0 / 1.5, 0.5, 1.0 / 3.0,
                                          1.0 / 9.0, 1.0, 2.0};
  std::size_t maps_checked = 0, kernels_checked = 0, instances = 0;

  // The optimality of the induced distribution is a theorem exactly on the
  // certified structure class (pairwise-disjoint balls, or a binary
  // reproduction alphabet); outside it the greedy coverage can be beaten
  // (see the covering tests for the pinned counterexample). The oracle
  // family therefore draws from that class: binary-output instances at a
  // random level, and wider instances at the level where each source symbol
  // is covered by exactly its zero-cost match.
  while (instances < 30) {
    const bool binary_output = instances % 2 == 0;
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    Instance inst = binary_output
                        ? Instance{random_pmf(rng, 2 + instances % 4, 8),
                                   random_distortion(rng, 2 + instances % 4, 2,
                                                     instances % 3 == 0)}
                        : Instance{random_pmf(rng, 2 + instances % 4, 8),
                                   random_distortion(rng, 2 + instances % 4, 3,
                                                     true)};
    const double level = binary_output ? ud(rng) : 0.0;
    const double map_count = std::pow(double(inst.spec.repro_size()),
                                      double(inst.spec.source_size()));
    if (map_count > 243.0) continue;
    if (!induced_minimality_certified(inst.spec, level)) continue;
    const double epsilon = 0.125 * double(instances % 4);
    if (!feasibility(inst.source, inst.spec, level, epsilon)) continue;
    ++instances;

    const CoveringPlan plan = greedy_cover(inst.source, inst.spec, level, epsilon);
    const FinitePmf induced = induced_output_distribution(plan);
    const Weights induced_w(induced.probs().begin(), induced.probs().end());

    // The constructed kernel attains the minimum.
    const Code constructed = build_stochastic_code(plan, inst.source.size());
    const std::vector<double> own =
        code_output_marginal(constructed, inst.source, inst.spec.repro_size());
    for (double alpha : alpha_grid) {
      require(std::fabs(renyi_entropy(normalize(own), alpha) -
                        renyi_entropy(induced, alpha)) <= 1e-9,
              "criterion 3: constructed marginal does not attain G");
    }

    // Exhaustive deterministic maps.
    const std::size_t nx = inst.spec.source_size();
    const std::size_t ny = inst.spec.repro_size();
    std::vector<std::size_t> phi(nx, 0);
    while (true) {
      double excess = 0.0;
      for (std::size_t x = 0; x < nx; ++x) {
        if (!within_level(inst.spec.at(x, phi[x]), level)) {
          excess += inst.source.prob(x);
        }
      }
      if (excess <= epsilon + tol::kThreshold) {
        std::vector<double> marginal(ny, 0.0);
        for (std::size_t x = 0; x < nx; ++x) marginal[phi[x]] += inst.source.prob(x);
        require(majorizes(induced_w, marginal),
                "criterion 3: induced distribution fails to majorize a map");
        for (double alpha : alpha_grid) {
          require(renyi_entropy(normalize(marginal), alpha) >=
                      renyi_entropy(induced, alpha) - 1e-9,
                  "criterion 3: deterministic map beats G");
        }
        ++maps_checked;
      }
      std::size_t pos = 0;
      while (pos < nx && ++phi[pos] == ny) {
        phi[pos] = 0;
        ++pos;
      }
      if (pos == nx) break;
    }

    // Random feasible kernels.
    for (int k = 0; k < 400; ++k) {
      const auto kernel =
          random_feasible_kernel(rng, inst.source, inst.spec, level, epsilon);
      const auto marginal = kernel_output_marginal(inst.source, kernel);
      require(majorizes(induced_w, marginal),
              "criterion 3: induced distribution fails to majorize a kernel");
      for (double alpha : {0.5, 1.0, 2.0}) {
        require(renyi_entropy(normalize(marginal), alpha) >=
                    renyi_entropy(induced, alpha) - 1e-9,
                "criterion 3: random kernel beats G");
      }
      ++kernels_checked;
    }
  }
  const double elapsed = seconds_since(start);
  require_runtime(elapsed, 60.0, "criterion 3");
  require(kernels_checked >= 10000, "criterion 3: kernel budget not met");
  return std::to_string(instances) + " certified-structure instances, " +
         std::to_string(maps_checked) + " feasible maps, " +
         std::to_string(kernels_checked) + " random kernels";
}

// --- criterion 4: per-index chain ---------------------------------------------

std::string criterion4() {
  std::size_t points = 0;
  for (const FamilyEntry& e : family()) {
    for (double t : kTGrid) {
      const CheckResult r = check_index_chain(e.plan, t, "family");
      require(r.ok(), "criterion 4: index chain violated (slack " +
                          format_real(r.worst().slack) + ")");
      points += e.plan.k_star;
    }
  }
  return std::to_string(points) + " (i, t) points, slack >= -1e-12";
}

// --- criterion 5: deterministic codes ------------------------------------------

std::string criterion5() {
  // (a) the penalty bound on the whole family.
  std::size_t bound_points = 0;
  for (const FamilyEntry& e : family()) {
    for (double t : kTGrid) {
      const CodeMetrics m = code_metrics(e.deterministic, e.instance.source,
                                         e.instance.spec, e.level, t);
      require(m.excess_probability <= e.epsilon + 1e-12,
              "criterion 5: deterministic excess above epsilon");
      require(m.cgf <= e.g_by_t.at(t) + deterministic_penalty(e.plan, t) + 1e-9,
              "criterion 5: deterministic cgf above the penalty bound");
      ++bound_points;
    }
  }

  // (b) the per-symbol penalty vanishes monotonically on the product
  // benchmark: binary p = 0.2 source, level 0, epsilon 0.85, t = 1 (a
  // single-cell covering at every blocklength 2..8, so the penalty decays
  // like the shrinking cell overshoot divided by n).
  const FinitePmf base({"0", "1"}, {0.8, 0.2});
  const DistortionSpec hamming = hamming_spec({"0", "1"});
  const double epsilon = 0.85, t = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  std::vector<double> per_symbol;
  for (std::size_t n = 2; n <= 8; ++n) {
    const ProductInstance inst = build_product(base, hamming, n);
    const CoveringPlan plan =
        greedy_cover(inst.expanded_source, inst.expanded_spec, 0.0, epsilon);
    const Code det = build_deterministic_code(plan, inst.expanded_source.size());
    const CodeMetrics m =
        code_metrics(det, inst.expanded_source, inst.expanded_spec, 0.0, t);
    const auto g = g_quantity(inst.expanded_source, inst.expanded_spec, 0.0,
                              epsilon, 0.5);
    require(g.has_value(), "criterion 5: product benchmark infeasible");
    require(m.cgf <= *g + deterministic_penalty(plan, t) + 1e-9,
            "criterion 5: product deterministic bound violated");
    const double per = deterministic_penalty(plan, t) / double(n);
    require(per < prev, "criterion 5: per-symbol penalty not decreasing at n=" +
                            std::to_string(n));
    prev = per;
    per_symbol.push_back(per);
  }
  return std::to_string(bound_points) + " bound points; benchmark penalty/n " +
         format_real(per_symbol.front()) + " -> " + format_real(per_symbol.back());
}

// --- criterion 6: prefix codes ---------------------------------------------------

std::string criterion6() {
  std::mt19937_64 rng = seeded_rng(kSeed, "prefix-random");
  std::size_t sandwich_points = 0, random_codes = 0, g_floor_codes = 0;
  for (const FamilyEntry& e : family()) {
    require(e.prefix.prefix_free(), "criterion 6: constructed code not prefix-free");
    require(kraft_sum(e.prefix.codewords) <= 1.0,
            "criterion 6: Kraft sum above one");
    const double width = double(codeword_length(e.plan.k_star)) + 1.0;
    for (double t : kTGrid) {
      const CodeMetrics m = code_metrics(e.prefix, e.instance.source,
                                         e.instance.spec, e.level, t);
      require(m.cgf >= e.g_by_t.at(t) - 1e-9, "criterion 6: prefix cgf below G");
      require(m.cgf <= e.g_by_t.at(t) + width + 1e-9,
              "criterion 6: prefix cgf above G + floor(log2 k*) + 1");
      ++sandwich_points;
    }
    // Prefix converse for random feasible prefix codes: every code obeys
    // the Kraft-Holder floor against its own decoded-output entropy, and on
    // certified-structure instances that entropy dominates G, so the G-floor
    // is asserted there too.
    const bool certified =
        induced_minimality_certified(e.instance.spec, e.level);
    for (int i = 0; i < 200; ++i) {
      const Code code = random_prefix_code(rng, e.instance.source,
                                           e.instance.spec, e.level, e.epsilon);
      require(code.prefix_free(), "criterion 6: random code not prefix-free");
      const double t = kTGrid[i % kTGrid.size()];
      const CodeMetrics m =
          code_metrics(code, e.instance.source, e.instance.spec, e.level, t);
      const std::vector<double> marginal = code_output_marginal(
          code, e.instance.source, e.instance.spec.repro_size());
      require(m.cgf >= renyi_entropy(marginal, 1.0 / (1.0 + t)) - 1e-9,
              "criterion 6: prefix Kraft-Holder floor violated");
      if (certified) {
        const auto g = g_quantity(e.instance.source, e.instance.spec, e.level,
                                  std::min(m.excess_probability, e.epsilon),
                                  1.0 / (1.0 + t));
        require(g.has_value(),
                "criterion 6: G infeasible for a random prefix code");
        require(m.cgf >= *g - 1e-9, "criterion 6: prefix converse violated");
        ++g_floor_codes;
      }
      ++random_codes;
    }
  }
  return std::to_string(sandwich_points) + " sandwich points, " +
         std::to_string(random_codes) + " random prefix codes (" +
         std::to_string(g_floor_codes) + " also against the G floor)";
}

// --- criterion 7: rate-distortion oracle -----------------------------------------

std::string criterion7() {
  const FinitePmf source({"0", "1"}, {0.8, 0.2});
  const DistortionSpec spec = hamming_spec({"0", "1"});
  auto h = [](double p) {
    return -(p * std::log2(p) + (1 - p) * std::log2(1 - p));
  };
  for (double level : {0.05, 0.10, 0.15}) {
    const RdSolution sol = rd_at_distortion(source, spec, level);
    require(std::fabs(sol.rate - (h(0.2) - h(level))) <= 1e-6,
            "criterion 7: rate mismatch at D=" + format_real(level));
    require(std::fabs(sol.lambda_star - std::log2((1 - level) / level)) <= 1e-5,
            "criterion 7: slope mismatch at D=" + format_real(level));
    require(std::fabs(sol.dispersion - 0.16 * std::pow(std::log2(4.0), 2)) <= 1e-6,
            "criterion 7: dispersion mismatch at D=" + format_real(level));
  }
  return "R, lambda*, V match the closed forms at D in {0.05, 0.10, 0.15}";
}

// --- criterion 8: blocklength trend ------------------------------------------------

std::string criterion8() {
  const auto start = std::chrono::steady_clock::now();
  const FinitePmf base({"0", "1"}, {0.8, 0.2});
  const DistortionSpec hamming = hamming_spec({"0", "1"});
  const double level = 0.1, epsilon = 0.5;

  std::vector<std::size_t> ns;
  for (std::size_t n = 2; n <= 12; ++n) ns.push_back(n);
  const std::vector<AsymptoticRow> rows =
      asymptotic_table(base, hamming, level, epsilon, ns, kDefaultProductBudget, 2);

  // (a) the two-sided bounds are ordered at every n.
  for (std::size_t n : ns) {
    const ProductInstance inst = build_product(base, hamming, n);
    const RateBounds b = blocklength_rate_bounds(inst, level, epsilon, 0.0);
    require(b.lower && b.upper && *b.lower <= *b.upper,
            "criterion 8a: bounds out of order at n=" + std::to_string(n));
  }

  // (b) the scaled gap never blows past ten times its n = 2 value.
  require(rows.front().scaled_gap.has_value(), "criterion 8b: missing base gap");
  const double budget = 10.0 * *rows.front().scaled_gap;
  double worst = 0.0;
  for (const AsymptoticRow& row : rows) {
    require(!row.skipped && row.scaled_gap.has_value(),
            "criterion 8b: missExpected row at n=" + std::to_string(row.n));
    worst = std::max(worst, *row.scaled_gap);
    require(*row.scaled_gap <= budget,
            "criterion 8b: scaled gap blow-up at n=" + std::to_string(row.n));
  }

  // (c) the kernel-rate / covering / quantizer sandwich wherever the
  // quantizer brute force fits (|Y^n|^(|X^n|) <= 1e7 holds only for n <= 2).
  for (std::size_t n : {std::size_t{2}}) {
    const ProductInstance inst = build_product(base, hamming, n);
    const double total_level = level * double(n);
    const auto g = normalized_g(inst, level, epsilon, 0.0);
    const auto r =
        r_d_epsilon(inst.expanded_source, inst.expanded_spec, total_level, epsilon);
    const auto hq = h_d_epsilon_bruteforce(inst.expanded_source,
                                           inst.expanded_spec, total_level, epsilon);
    require(g && r && hq, "criterion 8c: sandwich sides missing");
    require(*r / double(n) <= *g + 1e-7, "criterion 8c: kernel rate above G");
    require(*g <= *hq / double(n) + 1e-9, "criterion 8c: G above quantizer entropy");
  }
  const double elapsed = seconds_since(start);
  require_runtime(elapsed, 300.0, "criterion 8");
  return "n=2..12: bounds ordered, max scaled gap " + format_real(worst) +
         " <= 10 x " + format_real(*rows.front().scaled_gap) + ", sandwich at n=2";
}

// --- criterion 9: cgf limits --------------------------------------------------------

std::string criterion9() {
  std::size_t codes = 0;
  for (const FamilyEntry& e : family()) {
    for (const Code* code : {&e.stochastic, &e.deterministic, &e.prefix}) {
      const CodeMetrics small =
          code_metrics(*code, e.instance.source, e.instance.spec, e.level, 1e-6);
      require(std::fabs(small.cgf - small.mean_length) <= 1e-4,
              "criterion 9: cgf(1e-6) away from the mean length");
      const CodeMetrics large =
          code_metrics(*code, e.instance.source, e.instance.spec, e.level, 64.0);
      require(std::fabs(large.cgf - double(large.max_length)) <= 0.05,
              "criterion 9: cgf(64) away from the max length");
      ++codes;
    }
  }
  return std::to_string(codes) + " codes within both limit tolerances";
}

// --- criterion 10: zero-excess converse ----------------------------------------------

std::string criterion10() {
  const FinitePmf source({"0", "1"}, {0.8, 0.2});
  const DistortionSpec spec = hamming_spec({"0", "1"});
  std::size_t points = 0;
  for (double level : {0.05, 0.10, 0.15}) {
    const CoveringPlan plan = greedy_cover(source, spec, level, 0.0);
    for (const Code& code : {build_stochastic_code(plan, 2),
                             build_deterministic_code(plan, 2),
                             build_prefix_code(plan, 2)}) {
      for (double t : {0.5, 1.0, 2.0}) {
        const TiltedConverseReport r =
            tilted_entropy_converse(source, spec, level, t, code);
        require(r.holds, "criterion 10: zero-excess floor violated");
        ++points;
      }
    }
  }
  return std::to_string(points) + " (code, t) points above the tilted floor";
}

// --- criterion 11: negative controls ---------------------------------------------------

std::string criterion11() {
  SuiteConfig config = default_suite_config();
  config.negative_controls = true;
  const SuiteResult result = run_suite(config);
  const std::vector<std::string> expected = {
      "achievability-cgf",  "converse-floor",   "index-chain-right",
      "majorization-optimality", "achievability-excess",
      "deterministic-penalty",   "prefix-free",  "cgf-max-limit"};
  for (const std::string& claim : expected) {
    bool flagged = false;
    for (const BoundReport& r : result.reports) {
      if (!r.verdict && r.claim == "negative-control:" + claim) flagged = true;
    }
    require(flagged, "criterion 11: tamper not flagged for " + claim);
  }
  return std::to_string(expected.size()) + " tampered artifacts all flagged";
}

}  // namespace

int main() {
  std::vector<Line> lines;
  lines.push_back(run(1, criterion1));
  lines.push_back(run(2, criterion2));
  lines.push_back(run(3, criterion3));
  lines.push_back(run(4, criterion4));
  lines.push_back(run(5, criterion5));
  lines.push_back(run(6, criterion6));
  lines.push_back(run(7, criterion7));
  lines.push_back(run(8, criterion8));
  lines.push_back(run(9, criterion9));
  lines.push_back(run(10, criterion10));
  lines.push_back(run(11, criterion11));

  bool all_pass = true;
  for (const Line& line : lines) {
    all_pass = all_pass && line.pass;
    std::printf("criterion %2d %s (%6.2f s) - %s\n", line.id,
                line.pass ? "PASS" : "FAIL", line.seconds, line.detail.c_str());
  }
  std::printf("acceptance: %s\n", all_pass ? "ALL PASS" : "FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
