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

#ifndef VLSC_DISTORTION_HPP
#define VLSC_DISTORTION_HPP

#include <cstddef>
#include <vector>

#include "vlsc/common.hpp"
#include "vlsc/pmf.hpp"

namespace vlsc {

// Distortion matrix d(x, y) >= 0 over source x reproduction alphabets.
struct DistortionSpec {
  std::vector<Symbol> source_alphabet;
  std::vector<Symbol> repro_alphabet;
  std::vector<std::vector<double>> d;  // d[x][y]

  // Checks shape, finiteness and non-negativity; throws invalid_argument.
  void validate() const;
  double at(std::size_t x, std::size_t y) const { return d[x][y]; }
  std::size_t source_size() const { return source_alphabet.size(); }
  std::size_t repro_size() const { return repro_alphabet.size(); }
  std::size_t source_index(const Symbol& s) const;
  std::size_t repro_index(const Symbol& s) const;
};

// Builds a Hamming instance over the given alphabet (d = 0 on the diagonal,
// 1 off it). Convenience for tests and benchmarks.
DistortionSpec hamming_spec(const std::vector<Symbol>& alphabet);

// True iff d(x, y) is within the level D (threshold slack tol::kThreshold,
// shared with the excess-probability accounting).
inline bool within_level(double dxy, double level) {
  return dxy <= level + tol::kThreshold;
}

// The distortion ball around y: source indices x with d(x, y) <= D.
std::vector<std::size_t> distortion_ball(const DistortionSpec& spec,
                                         std::size_t y_index, double level);
std::vector<std::size_t> distortion_ball(const DistortionSpec& spec,
                                         const Symbol& y, double level);

// Probability mass of source symbols that no reproduction symbol covers at
// level D. Any code's excess-distortion probability is at least this.
double uncovered_mass(const FinitePmf& source, const DistortionSpec& spec,
                      double level);

// True iff some code can meet excess-distortion probability <= epsilon at
// level D, i.e. uncovered_mass <= epsilon.
bool feasibility(const FinitePmf& source, const DistortionSpec& spec,
                 double level, double epsilon);

// True iff no source symbol lies inside two distortion balls at the level,
// i.e. distinct reproduction symbols cover disjoint source sets.
bool balls_pairwise_disjoint(const DistortionSpec& spec, double level);

// Structural certificate for the greedy covering's optimality claims: with
// pairwise-disjoint balls the greedy prefix coverage is the best j-symbol
// coverage for every j, and with a binary reproduction alphabet only j = 1
// (best single ball) and j = 2 (everything coverable) occur. Either way the
// induced output distribution majorizes every feasible output marginal. On
// instances outside this class the greedy value is only an upper bound on
// the kernel minimum; see the covering tests for a counterexample.
bool induced_minimality_certified(const DistortionSpec& spec, double level);

// Smallest achievable expected distortion, E[min_y d(X, y)].
double min_expected_distortion(const FinitePmf& source,
                               const DistortionSpec& spec);

// Expected distortion of the best constant reproduction, min_y E[d(X, y)].
// The rate-distortion function is zero at and above this level.
double max_useful_distortion(const FinitePmf& source,
                             const DistortionSpec& spec);

}  // namespace vlsc

#endif  // VLSC_DISTORTION_HPP
