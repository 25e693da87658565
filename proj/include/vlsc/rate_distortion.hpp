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

#ifndef VLSC_RATE_DISTORTION_HPP
#define VLSC_RATE_DISTORTION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "vlsc/code.hpp"
#include "vlsc/distortion.hpp"
#include "vlsc/pmf.hpp"

namespace vlsc {

// One point of the rate-distortion curve obtained by alternating
// minimization at a fixed Lagrange slope (bits per unit distortion).
struct RdPoint {
  double slope = 0.0;
  double rate = 0.0;        // bits
  double distortion = 0.0;  // achieved E[d]
  std::vector<std::vector<double>> kernel;  // P(y|x)
  std::vector<double> output_marginal;      // P(y)
  bool converged = false;
  std::size_t iterations = 0;
};

// Alternating minimization for min I(X;Y) + slope * E[d]. Iterates until
// successive rate values differ by less than 1e-12 or 100000 rounds; the
// converged flag records which. slope = 0 returns the exact zero-rate corner
// (rate 0 at the best constant reproduction).
RdPoint rd_fixed_slope(const FinitePmf& source, const DistortionSpec& spec,
                       double slope);

// The slope-parameterized curve evaluated at a target distortion, plus the
// quantities derived from the optimal output distribution.
struct RdSolution {
  double distortion = 0.0;
  double rate = 0.0;  // R(D), bits
  std::vector<std::vector<double>> kernel;
  FinitePmf output_marginal;
  double lambda_star = 0.0;             // -R'(D), from the converged slope
  std::vector<double> tilted_info;      // per source symbol, bits
  double dispersion = 0.0;              // Var of tilted_info, bits^2
};

// Bisection over the slope until the achieved distortion is within 1e-9 of
// D. D must lie strictly inside (min achievable, zero-rate) distortion;
// otherwise a domain_error is thrown.
RdSolution rd_at_distortion(const FinitePmf& source, const DistortionSpec& spec,
                            double distortion);

// Tilted Renyi entropy of order alpha derived from the per-symbol tilted
// information; orders within 1e-9 of 1 return the rate itself.
double d_tilted_renyi_entropy(const RdSolution& rd, const FinitePmf& source,
                              double alpha);

// Minimum mutual information over kernels with excess probability
// P[d(X,Y) > level] <= epsilon. Computed by replacing d with the indicator
// distortion 1{d > level}, under which the excess constraint is an ordinary
// average-distortion constraint at level epsilon. Returns nullopt when the
// instance is infeasible.
std::optional<double> r_d_epsilon(const FinitePmf& source,
                                  const DistortionSpec& spec, double level,
                                  double epsilon);

// Minimum output Shannon entropy over deterministic quantizers meeting the
// excess constraint, by exhaustive search over all |Y|^|X| maps. Throws
// size_error when that count exceeds 10^7. Returns nullopt when no map is
// feasible.
std::optional<double> h_d_epsilon_bruteforce(const FinitePmf& source,
                                             const DistortionSpec& spec,
                                             double level, double epsilon);

// Inverse of the complementary Gaussian cdf Q(z) = P[N(0,1) > z], accurate to
// 1e-10. epsilon = 0 maps to +infinity (callers drop the dispersion term);
// epsilon outside [0, 1) is rejected.
double q_inv(double epsilon);

struct GaussianApprox {
  std::size_t n = 0;
  double epsilon = 0.0;
  double value = 0.0;  // bits per symbol
};

// Second-order approximation of the smallest normalized mean codeword
// length: (1 - eps) R(D) - sqrt(V(D) / (2 pi n)) exp(-q_inv(eps)^2 / 2). The
// unresolved O(log n / n) remainder is not included. epsilon = 0 degenerates
// to R(D).
GaussianApprox gaussian_approx(const RdSolution& rd, std::size_t n,
                               double epsilon);

// Converse floor for codes with zero excess-distortion probability: the cgf
// at parameter t must be at least the tilted Renyi entropy of order
// 1/(1+t) minus log2 log2(1 + min(|X|, |Y|)). Throws invalid_argument when
// the code has positive excess at the level.
struct TiltedConverseReport {
  double cgf = 0.0;
  double floor = 0.0;
  bool holds = false;
};
TiltedConverseReport tilted_entropy_converse(const FinitePmf& source,
                                             const DistortionSpec& spec,
                                             double level, double t,
                                             const Code& code);

}  // namespace vlsc

#endif  // VLSC_RATE_DISTORTION_HPP
