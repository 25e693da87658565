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

#ifndef VLSC_SAMPLING_HPP
#define VLSC_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "vlsc/code.hpp"
#include "vlsc/distortion.hpp"
#include "vlsc/pmf.hpp"

namespace vlsc {

struct Instance {
  FinitePmf source;
  DistortionSpec spec;
};

// Derives a child generator from a root seed and a salt string; every
// randomized check owns one, so reports are reproducible regardless of
// execution order.
std::mt19937_64 seeded_rng(std::uint64_t root_seed, const std::string& salt);

// Random pmf over `size` symbols named a, b, c, ... When `dyadic_grid` is
// positive, the masses are multiples of 1/grid (each at least 1/grid), which
// keeps every covering-cell mass bounded away from zero; otherwise a uniform
// stick-breaking draw is used.
FinitePmf random_pmf(std::mt19937_64& rng, std::size_t size,
                     unsigned dyadic_grid = 0);

// Random distortion matrix with entries uniform in [0, 1]. When
// `zero_matching` is set, each source symbol additionally gets one random
// zero-distortion reproduction, so low levels stay feasible.
DistortionSpec random_distortion(std::mt19937_64& rng, std::size_t source_size,
                                 std::size_t repro_size, bool zero_matching);

Instance random_instance(std::mt19937_64& rng, std::size_t max_source,
                         std::size_t max_repro, unsigned dyadic_grid = 0);

// Excess probability P[d(X, Y) > level] of a conditional kernel.
double kernel_excess(const FinitePmf& source, const DistortionSpec& spec,
                     const std::vector<std::vector<double>>& kernel,
                     double level);

std::vector<double> kernel_output_marginal(
    const FinitePmf& source, const std::vector<std::vector<double>>& kernel);

// Random kernel meeting the excess constraint: a free random kernel is mixed
// toward the minimum-distortion deterministic kernel just enough to satisfy
// the budget, with a random surplus so boundary and interior cases both
// occur. Requires feasibility.
std::vector<std::vector<double>> random_feasible_kernel(
    std::mt19937_64& rng, const FinitePmf& source, const DistortionSpec& spec,
    double level, double epsilon);

// Random variable-length code with an injective decoder and excess <= eps:
// distinct codeword indices in 1..max_index, distinct reproduction symbols,
// and per-symbol encoder branches (optionally stochastic, at most two) that
// are repaired toward covering centers whenever the excess budget overflows.
// Requires feasibility.
Code random_injective_code(std::mt19937_64& rng, const FinitePmf& source,
                           const DistortionSpec& spec, double level,
                           double epsilon, std::uint64_t max_index,
                           bool allow_stochastic);

// Same, but codewords form a random prefix-free set (lengths drawn first and
// fixed up to satisfy the Kraft inequality, then assigned canonically).
Code random_prefix_code(std::mt19937_64& rng, const FinitePmf& source,
                        const DistortionSpec& spec, double level,
                        double epsilon);

// Every deterministic-encoder injective-decoder code on the instance with
// codeword indices at most max_index: all codeword subsets of size up to
// min(|X|, |Y|), all injective decoder assignments, all onto encoder maps.
// Intended for exhaustive converse checks on tiny instances.
std::vector<Code> enumerate_injective_codes(const DistortionSpec& spec,
                                            std::uint64_t max_index);

}  // namespace vlsc

#endif  // VLSC_SAMPLING_HPP
