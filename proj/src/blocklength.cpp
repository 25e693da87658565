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

#include "vlsc/blocklength.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace vlsc {

namespace {

// Checked |alphabet|^n; throws budget_error past the cap.
std::size_t checked_power(std::size_t base, std::size_t n, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (v > cap / base) {
      throw budget_error("build_product: alphabet size " + std::to_string(base) +
                         "^" + std::to_string(n) + " exceeds the budget");
    }
    v *= base;
  }
  return v;
}

std::vector<Symbol> expand_alphabet(const std::vector<Symbol>& base,
                                    std::size_t n) {
  std::vector<Symbol> out{Symbol{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Symbol> next;
    next.reserve(out.size() * base.size());
    for (const auto& prefix : out) {
      for (const auto& s : base) next.push_back(prefix + s);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

ProductInstance build_product(const FinitePmf& base_source,
                              const DistortionSpec& base_spec, std::size_t n,
                              std::size_t budget) {
  base_spec.validate();
  if (n == 0) throw invalid_argument("build_product: n must be >= 1");
  if (base_source.size() != base_spec.source_size()) {
    throw invalid_argument("build_product: source pmf does not match distortion rows");
  }
  const std::size_t nx = base_spec.source_size();
  const std::size_t ny = base_spec.repro_size();
  const std::size_t ex = checked_power(nx, n, budget);
  const std::size_t ey = checked_power(ny, n, budget);
  if (ex > budget / ey) {
    throw budget_error("build_product: " + std::to_string(ex) + " x " +
                       std::to_string(ey) + " distortion entries exceed the budget");
  }

  // Probabilities and the distortion matrix grow one letter at a time:
  // prob(xs) = prob(x_prefix) * p(x_last), d(xs, ys) = d(prefix) + d(last).
  std::vector<double> probs{1.0};
  std::vector<std::vector<double>> d{{0.0}};
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<double> next_probs;
    next_probs.reserve(probs.size() * nx);
    for (double p : probs) {
      for (std::size_t x = 0; x < nx; ++x) next_probs.push_back(p * base_source.prob(x));
    }
    probs = std::move(next_probs);

    std::vector<std::vector<double>> next_d;
    next_d.reserve(d.size() * nx);
    for (std::size_t rx = 0; rx < d.size(); ++rx) {
      for (std::size_t x = 0; x < nx; ++x) {
        std::vector<double> row;
        row.reserve(d[rx].size() * ny);
        for (double base_val : d[rx]) {
          for (std::size_t y = 0; y < ny; ++y) {
            row.push_back(base_val + base_spec.at(x, y));
          }
        }
        next_d.push_back(std::move(row));
      }
    }
    d = std::move(next_d);
  }

  ProductInstance inst{.n = n,
                       .base_source = base_source,
                       .base_spec = base_spec,
                       .expanded_source =
                           FinitePmf(expand_alphabet(base_source.alphabet(), n),
                                     std::move(probs)),
                       .expanded_spec = {}};
  inst.expanded_spec.source_alphabet = inst.expanded_source.alphabet();
  inst.expanded_spec.repro_alphabet = expand_alphabet(base_spec.repro_alphabet, n);
  inst.expanded_spec.d = std::move(d);
  return inst;
}

std::optional<double> normalized_g(const ProductInstance& inst, double level,
                                   double epsilon, double t) {
  if (t < 0.0) throw invalid_argument("normalized_g: t must be >= 0");
  const double alpha = t == 0.0 ? 1.0 : 1.0 / (1.0 + t);
  const double total_level = static_cast<double>(inst.n) * level;
  auto g = g_quantity(inst.expanded_source, inst.expanded_spec, total_level,
                      epsilon, alpha);
  if (!g) return std::nullopt;
  return *g / static_cast<double>(inst.n);
}

RateBounds blocklength_rate_bounds(const ProductInstance& inst, double level,
                                   double epsilon, double t) {
  RateBounds bounds;
  bounds.upper = normalized_g(inst, level, epsilon, t);
  if (bounds.upper) {
    const double m = static_cast<double>(
        std::min(inst.expanded_spec.source_size(), inst.expanded_spec.repro_size()));
    bounds.lower = *bounds.upper -
                   std::log2(std::log2(1.0 + m)) / static_cast<double>(inst.n);
  }
  return bounds;
}

std::vector<AsymptoticRow> asymptotic_table(
    const FinitePmf& base_source, const DistortionSpec& base_spec, double level,
    double epsilon, const std::vector<std::size_t>& blocklengths,
    std::size_t budget, std::size_t workers) {
  const RdSolution rd = rd_at_distortion(base_source, base_spec, level);

  auto compute_row = [&](std::size_t n) {
    AsymptoticRow row;
    row.n = n;
    row.gaussian = gaussian_approx(rd, n, epsilon).value;
    try {
      ProductInstance inst = build_product(base_source, base_spec, n, budget);
      row.g_normalized = normalized_g(inst, level, epsilon, 0.0);
    } catch (const budget_error&) {
      row.skipped = true;
      return row;
    }
    if (row.g_normalized) {
      row.gap = std::fabs(*row.g_normalized - row.gaussian);
      if (n > 1) {
        row.scaled_gap = *row.gap * static_cast<double>(n) /
                         std::log2(static_cast<double>(n));
      }
    }
    return row;
  };

  std::vector<AsymptoticRow> rows(blocklengths.size());
  if (workers <= 1 || blocklengths.size() <= 1) {
    for (std::size_t i = 0; i < blocklengths.size(); ++i) {
      rows[i] = compute_row(blocklengths[i]);
    }
    return rows;
  }
  // Rows are independent; results land by index so output order does not
  // depend on scheduling. Batched so at most `workers` products are
  // materialized at once.
  for (std::size_t start = 0; start < blocklengths.size(); start += workers) {
    const std::size_t end = std::min(start + workers, blocklengths.size());
    std::vector<std::future<AsymptoticRow>> futures;
    futures.reserve(end - start);
    for (std::size_t i = start; i < end; ++i) {
      futures.push_back(std::async(std::launch::async, compute_row, blocklengths[i]));
    }
    for (std::size_t i = start; i < end; ++i) rows[i] = futures[i - start].get();
  }
  return rows;
}

}  // namespace vlsc
