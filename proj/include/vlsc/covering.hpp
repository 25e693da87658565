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

#ifndef VLSC_COVERING_HPP
#define VLSC_COVERING_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "vlsc/distortion.hpp"
#include "vlsc/pmf.hpp"

namespace vlsc {

// Result of the greedy distortion-ball covering.
//
// Centers are selected by repeatedly taking the reproduction symbol whose
// ball covers the largest residual probability mass (ties broken toward the
// lowest reproduction-alphabet index). Cell i is the ball of center i minus
// everything covered earlier, so cells are pairwise disjoint and their masses
// are non-increasing. Selection stops at the first k with cumulative cell
// mass >= 1 - epsilon.
struct CoveringPlan {
  std::vector<std::size_t> center_indices;       // into the repro alphabet
  std::vector<Symbol> centers;                   // same, as symbols
  std::vector<std::vector<std::size_t>> cells;   // disjoint source subsets
  std::vector<double> cell_probs;                // non-increasing
  std::size_t k_star = 0;
  double alpha_mass = 0.0;  // cumulative mass of cells 1..k*-1
  double beta_mass = 0.0;   // (1 - epsilon) - alpha_mass, in (0, cell k*]
  double gamma_mass = 0.0;  // 1 - cumulative mass of cells 1..k*, in [0, eps]
  double distortion_level = 0.0;
  double epsilon = 0.0;
};

// Runs the greedy covering. Throws infeasible_error (carrying the uncovered
// mass) when uncovered_mass(source, spec, level) > epsilon.
CoveringPlan greedy_cover(const FinitePmf& source, const DistortionSpec& spec,
                          double level, double epsilon);

// Output distribution of the code built on the plan: the first center
// absorbs the stray mass (its own cell, the unencoded tail, and the slack of
// the last cell), interior centers keep their cell mass, and the last center
// carries beta. Entries are non-increasing and sum to one. For k* = 1 this
// degenerates to a point mass.
FinitePmf induced_output_distribution(const CoveringPlan& plan);

// Renyi entropy (order alpha) of the greedy covering's induced output
// distribution. Whenever induced_minimality_certified holds for the
// instance, this equals the minimum of H_alpha(Y) over all reproduction
// kernels meeting the (level, epsilon) excess constraint: the induced
// distribution then majorizes every feasible output marginal. On general
// overlapping-ball instances the greedy prefix coverage can be beaten and
// the value is an upper bound on that minimum (the covering tests pin a
// four-symbol counterexample). Returns std::nullopt when the instance is
// infeasible (the minimum over an empty set, i.e. +infinity). alpha = 1 is
// accepted and means the Shannon limit.
std::optional<double> g_quantity(const FinitePmf& source,
                                 const DistortionSpec& spec, double level,
                                 double epsilon, double alpha);

}  // namespace vlsc

#endif  // VLSC_COVERING_HPP
