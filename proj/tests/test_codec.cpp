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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <set>

#include "doctest.h"
#include "vlsc/bounds.hpp"
#include "vlsc/code.hpp"
#include "vlsc/sampling.hpp"

using namespace vlsc;

namespace {

const FinitePmf kRunningSource({"a", "b", "c"}, {0.5, 0.3, 0.2});
const DistortionSpec kRunningSpec = hamming_spec({"a", "b", "c"});

CoveringPlan running_plan() {
  return greedy_cover(kRunningSource, kRunningSpec, 0.0, 0.25);
}

}  // namespace

TEST_CASE("codeword enumeration") {
  CHECK(nth_codeword(1) == "");
  CHECK(nth_codeword(2) == "0");
  CHECK(nth_codeword(3) == "1");
  CHECK(nth_codeword(4) == "00");
  CHECK(nth_codeword(5) == "01");
  CHECK(nth_codeword(8) == "000");
  for (std::uint64_t i = 1; i <= 1024; ++i) {
    CHECK(nth_codeword(i).size() ==
          static_cast<std::size_t>(std::floor(std::log2(double(i)))));
  }
  CHECK_THROWS_AS(nth_codeword(0), invalid_argument);
  // Distinctness across the first block.
  std::set<BinaryString> seen;
  for (std::uint64_t i = 1; i <= 255; ++i) CHECK(seen.insert(nth_codeword(i)).second);
}

TEST_CASE("stochastic code construction") {
  const CoveringPlan plan = running_plan();
  const Code code = build_stochastic_code(plan, 3);
  CHECK(code.variant == CodeVariant::kStochastic);
  CHECK(code.codewords == std::vector<BinaryString>{"", "0"});
  // Symbol b sits in the second cell and splits 5/6 vs 1/6.
  REQUIRE(code.encoder[1].size() == 2);
  CHECK(code.encoder[1][0].prob == doctest::Approx(0.25 / 0.3));
  CHECK(code.encoder[1][1].prob == doctest::Approx(1.0 - 0.25 / 0.3));
  // Symbol c is uncovered and emits the first codeword.
  REQUIRE(code.encoder[2].size() == 1);
  CHECK(code.encoder[2][0].center == 0);

  // Round trip: every emitted codeword decodes to its plan center.
  CHECK(code.decode("") == std::size_t{0});
  CHECK(code.decode("0") == std::size_t{1});
  CHECK_FALSE(code.decode("111").has_value());
  CHECK(code.decoder_injective());
}

TEST_CASE("single-cell plans collapse to the empty codeword") {
  const CoveringPlan plan = greedy_cover(kRunningSource, kRunningSpec, 1.0, 0.25);
  REQUIRE(plan.k_star == 1);
  const Code code = build_stochastic_code(plan, 3);
  for (const auto& branches : code.encoder) {
    REQUIRE(branches.size() == 1);
    CHECK(code.codewords[branches[0].center] == "");
  }
}

TEST_CASE("code metrics on the running example") {
  const Code code = build_stochastic_code(running_plan(), 3);
  const CodeMetrics m = code_metrics(code, kRunningSource, kRunningSpec, 0.0, 1.0);
  CHECK(m.excess_probability == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(m.cgf == doctest::Approx(0.32192809488736235).epsilon(1e-12));
  CHECK(m.mean_length == doctest::Approx(0.25));
  CHECK(m.max_length == 1);

  const CodeMetrics tiny = code_metrics(code, kRunningSource, kRunningSpec, 0.0, 1e-6);
  CHECK(std::fabs(tiny.cgf - 0.25) <= 1e-4);
  const CodeMetrics big = code_metrics(code, kRunningSource, kRunningSpec, 0.0, 64.0);
  CHECK(big.cgf == doctest::Approx(0.96875).epsilon(1e-12));
  CHECK(std::fabs(big.cgf - 1.0) <= 0.05);

  CHECK_THROWS_AS(code_metrics(code, kRunningSource, kRunningSpec, 0.0, 0.0),
                  invalid_argument);
  CHECK_THROWS_AS(code_metrics(code, kRunningSource, kRunningSpec, 0.0, -1.0),
                  invalid_argument);
}

TEST_CASE("constant code has zero cgf at every t") {
  const CoveringPlan plan = greedy_cover(kRunningSource, kRunningSpec, 1.0, 0.25);
  const Code code = build_stochastic_code(plan, 3);
  for (double t : {0.1, 1.0, 8.0, 64.0}) {
    CHECK(code_metrics(code, kRunningSource, kRunningSpec, 1.0, t).cgf ==
          doctest::Approx(0.0));
  }
}

TEST_CASE("deterministic code excess equals gamma") {
  const CoveringPlan plan = running_plan();
  const Code code = build_deterministic_code(plan, 3);
  CHECK(code.variant == CodeVariant::kDeterministic);
  for (const auto& branches : code.encoder) {
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].prob == doctest::Approx(1.0));
  }
  const CodeMetrics m = code_metrics(code, kRunningSource, kRunningSpec, 0.0, 1.0);
  CHECK(m.excess_probability == doctest::Approx(plan.gamma_mass).epsilon(1e-12));
  CHECK(m.excess_probability <= plan.epsilon + 1e-12);
  CHECK(m.cgf == doctest::Approx(0.37851162325372983).epsilon(1e-12));
  // The penalty-adjusted achievability bound.
  CHECK(m.cgf <= 1.0055812339288297 + 1e-9);
}

TEST_CASE("prefix code construction") {
  const CoveringPlan plan = running_plan();
  const Code code = build_prefix_code(plan, 3);
  CHECK(code.variant == CodeVariant::kPrefix);
  REQUIRE(code.codewords.size() == 2);
  // k* = 2 forces common length 2.
  CHECK(code.codewords[0].size() == 2);
  CHECK(code.codewords[1].size() == 2);
  CHECK(code.prefix_free());
  CHECK(kraft_sum(code.codewords) <= 1.0);
  // The non-prefix codeword stays a prefix of the padded one.
  CHECK(code.codewords[0].substr(0, 0) == nth_codeword(1));
  CHECK(code.codewords[1].substr(0, 1) == nth_codeword(2));

  const CoveringPlan one = greedy_cover(kRunningSource, kRunningSpec, 1.0, 0.25);
  const Code single = build_prefix_code(one, 3);
  REQUIRE(single.codewords.size() == 1);
  CHECK(single.codewords[0].size() == 1);

  const CodeMetrics m = code_metrics(code, kRunningSource, kRunningSpec, 0.0, 1.0);
  CHECK(m.cgf == doctest::Approx(2.0));  // fixed-length two-bit codewords
  CHECK(m.excess_probability == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("prefix structure over randomized plans") {
  std::mt19937_64 rng = seeded_rng(46, "prefix-structure");
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  int built = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = random_instance(rng, 5, 5);
    const double level = ud(rng);
    const double epsilon = ud(rng) * 0.5;
    if (!feasibility(inst.source, inst.spec, level, epsilon)) continue;
    ++built;
    const CoveringPlan plan = greedy_cover(inst.source, inst.spec, level, epsilon);
    const Code code = build_prefix_code(plan, inst.source.size());
    CHECK(code.prefix_free());
    CHECK(kraft_sum(code.codewords) <= 1.0);
    const std::size_t want = codeword_length(plan.k_star) + 1;
    for (std::size_t i = 0; i < code.codewords.size(); ++i) {
      CHECK(code.codewords[i].size() == want);
      const BinaryString base = nth_codeword(i + 1);
      CHECK(code.codewords[i].substr(0, base.size()) == base);
    }
    // Anything the encoder can emit decodes back to the plan's center.
    for (std::size_t x = 0; x < inst.source.size(); ++x) {
      for (const CodeBranch& b : code.encoder[x]) {
        CHECK(code.decode(code.codewords[b.center]) ==
              plan.center_indices[b.center]);
      }
    }
  }
  CHECK(built > 60);
}

TEST_CASE("cgf is non-decreasing in t") {
  std::mt19937_64 rng = seeded_rng(47, "cgf-monotone");
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = random_instance(rng, 5, 5);
    const double level = ud(rng);
    const double epsilon = ud(rng) * 0.5;
    if (!feasibility(inst.source, inst.spec, level, epsilon)) continue;
    const CoveringPlan plan = greedy_cover(inst.source, inst.spec, level, epsilon);
    const Code code = build_stochastic_code(plan, inst.source.size());
    double prev = -1.0;
    for (double t : {1e-4, 0.1, 0.5, 1.0, 2.0, 8.0, 32.0}) {
      const CodeMetrics m = code_metrics(code, inst.source, inst.spec, level, t);
      CHECK(m.cgf >= prev - 1e-10);
      CHECK(m.cgf >= m.mean_length - 1e-9);
      CHECK(double(m.max_length) >= m.mean_length - 1e-12);
      prev = m.cgf;
    }
  }
}

TEST_CASE("index chain holds for constructed plans") {
  std::mt19937_64 rng = seeded_rng(48, "index-chain");
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = random_instance(rng, 5, 5);
    const double level = ud(rng);
    const double epsilon = ud(rng) * 0.5;
    if (!feasibility(inst.source, inst.spec, level, epsilon)) continue;
    const CoveringPlan plan = greedy_cover(inst.source, inst.spec, level, epsilon);
    for (double t : {0.1, 0.5, 1.0, 2.0, 8.0}) {
      CHECK(check_index_chain(plan, t, "test").ok());
    }
  }
  // Spot numbers for the running example at t = 1, i = 2.
  const FinitePmf out = induced_output_distribution(running_plan());
  const double rhs = std::sqrt(out.prob(0) / out.prob(1)) + 1.0;
  CHECK(rhs == doctest::Approx(std::sqrt(3.0) + 1.0));
  CHECK(2.0 <= rhs);
}

TEST_CASE("sampled encodings agree with branch probabilities") {
  const Code code = build_stochastic_code(running_plan(), 3);
  std::mt19937_64 rng = seeded_rng(49, "sampler");
  int hits = 0;
  const int draws = 200000;
  for (int i = 0; i < draws; ++i) {
    if (sample_encoding(code, 1, rng) == "0") ++hits;
  }
  // 5/6 within five sigma.
  const double p = 5.0 / 6.0;
  const double sigma = std::sqrt(p * (1 - p) / draws);
  CHECK(std::fabs(double(hits) / draws - p) < 5 * sigma);
}
