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

#ifndef VLSC_BLOCKLENGTH_HPP
#define VLSC_BLOCKLENGTH_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "vlsc/distortion.hpp"
#include "vlsc/pmf.hpp"
#include "vlsc/rate_distortion.hpp"

namespace vlsc {

// Default cap on |X|^n * |Y|^n materialized distortion entries.
inline constexpr std::size_t kDefaultProductBudget = std::size_t{1} << 24;

// Blocklength-n product of a memoryless source: tuple symbols, product
// probabilities, per-letter additive distortion. Materialized densely.
struct ProductInstance {
  std::size_t n = 1;
  FinitePmf base_source;
  DistortionSpec base_spec;
  FinitePmf expanded_source;
  DistortionSpec expanded_spec;
};

// Throws budget_error when |X|^n * |Y|^n exceeds the budget.
ProductInstance build_product(const FinitePmf& base_source,
                              const DistortionSpec& base_spec, std::size_t n,
                              std::size_t budget = kDefaultProductBudget);

// (1/n) times the minimum output Renyi entropy of order 1/(1+t) on the
// product instance, with the excess constraint at total distortion n * D.
// t = 0 is accepted and means the Shannon (mean-length) limit. Returns
// nullopt when infeasible.
std::optional<double> normalized_g(const ProductInstance& inst, double level,
                                   double epsilon, double t);

// Two-sided bounds on the smallest normalized cgf at blocklength n: the
// upper bound is normalized_g, the lower bound subtracts
// (1/n) log2 log2(1 + min(|X|^n, |Y|^n)).
struct RateBounds {
  std::optional<double> lower;
  std::optional<double> upper;
};
RateBounds blocklength_rate_bounds(const ProductInstance& inst, double level,
                                   double epsilon, double t);

// One row of the finite-blocklength vs Gaussian-approximation comparison at
// t = 0. scaled_gap = gap * n / log2(n) supports a no-blow-up check of the
// O(log n / n) remainder without asserting an unknown constant; it is
// undefined at n = 1.
struct AsymptoticRow {
  std::size_t n = 0;
  bool skipped = false;  // budget exceeded
  std::optional<double> g_normalized;
  double gaussian = 0.0;
  std::optional<double> gap;
  std::optional<double> scaled_gap;
};

std::vector<AsymptoticRow> asymptotic_table(
    const FinitePmf& base_source, const DistortionSpec& base_spec, double level,
    double epsilon, const std::vector<std::size_t>& blocklengths,
    std::size_t budget = kDefaultProductBudget, std::size_t workers = 1);

}  // namespace vlsc

#endif  // VLSC_BLOCKLENGTH_HPP
