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

#include "vlsc/covering.hpp"

#include <algorithm>
#include <cmath>

namespace vlsc {

CoveringPlan greedy_cover(const FinitePmf& source, const DistortionSpec& spec,
                          double level, double epsilon) {
  spec.validate();
  if (source.size() != spec.source_size()) {
    throw invalid_argument("greedy_cover: source pmf does not match distortion rows");
  }
  if (epsilon < 0.0 || epsilon >= 1.0) {
    throw invalid_argument("greedy_cover: epsilon must lie in [0, 1)");
  }
  const double uncovered = uncovered_mass(source, spec, level);
  if (uncovered > epsilon + tol::kThreshold) {
    throw infeasible_error(
        "greedy_cover: uncovered mass " + format_real(uncovered) +
            " exceeds epsilon " + format_real(epsilon),
        uncovered);
  }

  const std::size_t nx = spec.source_size();
  const std::size_t ny = spec.repro_size();

  // Ball membership and per-center residual masses. Residuals shrink as
  // symbols get covered, so each center's count is maintained incrementally.
  std::vector<std::vector<std::size_t>> balls(ny);
  // Centers containing each source symbol, for the residual updates.
  std::vector<std::vector<std::size_t>> containing(nx);
  std::vector<double> residual(ny, 0.0);
  for (std::size_t y = 0; y < ny; ++y) {
    balls[y] = distortion_ball(spec, y, level);
    for (std::size_t x : balls[y]) {
      containing[x].push_back(y);
      residual[y] += source.prob(x);
    }
  }

  CoveringPlan plan;
  plan.distortion_level = level;
  plan.epsilon = epsilon;

  std::vector<char> covered(nx, 0);
  const double target = 1.0 - epsilon;
  double cumulative = 0.0;
  // Feasibility guarantees the loop reaches the target; the threshold slack
  // absorbs the difference between summing masses cell-by-cell and the
  // uncovered-mass computation above. At least one center is always
  // selected (k* >= 1), even when epsilon sits next to 1.
  while (plan.cells.empty() || cumulative < target - tol::kThreshold) {
    std::size_t best = 0;
    double best_mass = -1.0;
    for (std::size_t y = 0; y < ny; ++y) {
      if (residual[y] > best_mass) {  // strict > keeps the lowest-index tie
        best_mass = residual[y];
        best = y;
      }
    }
    if (!(best_mass > 0.0)) {
      throw infeasible_error(
          "greedy_cover: residual mass exhausted before reaching 1 - epsilon",
          1.0 - cumulative);
    }
    std::vector<std::size_t> cell;
    for (std::size_t x : balls[best]) {
      if (covered[x]) continue;
      covered[x] = 1;
      cell.push_back(x);
      for (std::size_t y : containing[x]) residual[y] -= source.prob(x);
    }
    plan.center_indices.push_back(best);
    plan.centers.push_back(spec.repro_alphabet[best]);
    plan.cells.push_back(std::move(cell));
    plan.cell_probs.push_back(best_mass);
    cumulative += best_mass;
  }

  plan.k_star = plan.cells.size();
  plan.alpha_mass = cumulative - plan.cell_probs.back();
  plan.beta_mass = (1.0 - epsilon) - plan.alpha_mass;
  // Clamp against float drift at the stopping boundary.
  plan.beta_mass = std::min(plan.beta_mass, plan.cell_probs.back());
  plan.beta_mass = std::max(plan.beta_mass, 0.0);
  plan.gamma_mass = std::max(0.0, 1.0 - cumulative);
  return plan;
}

FinitePmf induced_output_distribution(const CoveringPlan& plan) {
  if (plan.k_star == 0) {
    throw invalid_argument("induced_output_distribution: empty plan");
  }
  std::vector<double> probs(plan.k_star, 0.0);
  if (plan.k_star == 1) {
    probs[0] = 1.0;
  } else {
    probs[0] = plan.cell_probs[0] + (plan.cell_probs[plan.k_star - 1] - plan.beta_mass) +
               plan.gamma_mass;
    for (std::size_t i = 1; i + 1 < plan.k_star; ++i) probs[i] = plan.cell_probs[i];
    probs[plan.k_star - 1] = plan.beta_mass;
    // Remove residual float drift so the pmf invariant holds exactly.
    double total = 0.0;
    for (double p : probs) total += p;
    probs[0] += 1.0 - total;
  }
  return FinitePmf(plan.centers, probs);
}

std::optional<double> g_quantity(const FinitePmf& source,
                                 const DistortionSpec& spec, double level,
                                 double epsilon, double alpha) {
  if (!(alpha > 0.0)) {
    throw invalid_argument("g_quantity: order must be positive");
  }
  if (!feasibility(source, spec, level, epsilon)) return std::nullopt;
  const CoveringPlan plan = greedy_cover(source, spec, level, epsilon);
  const FinitePmf out = induced_output_distribution(plan);
  return renyi_entropy(out, alpha);
}

}  // namespace vlsc
