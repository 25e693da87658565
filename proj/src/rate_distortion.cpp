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

#include "vlsc/rate_distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vlsc {

namespace {

constexpr double kRateTol = 1e-12;
constexpr std::size_t kMaxIterations = 100000;
constexpr double kDistortionTol = 1e-9;

struct BlahutState {
  std::vector<double> q;                     // output marginal
  std::vector<std::vector<double>> kernel;   // P(y|x)
  double rate = 0.0;
  double distortion = 0.0;
};

// One family of alternating-minimization rounds. The per-x weights are
// shifted by min_y d(x, y) so that exp2 never underflows to an all-zero row
// even at very large slopes; the shift cancels out of the kernel update.
BlahutState run_blahut(const FinitePmf& source, const DistortionSpec& spec,
                       double slope, bool* converged, std::size_t* iterations) {
  const std::size_t nx = spec.source_size();
  const std::size_t ny = spec.repro_size();
  std::vector<double> dmin(nx, 0.0);
  for (std::size_t x = 0; x < nx; ++x) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < ny; ++y) best = std::min(best, spec.at(x, y));
    dmin[x] = best;
  }
  std::vector<std::vector<double>> w(nx, std::vector<double>(ny));
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      w[x][y] = std::exp2(-slope * (spec.at(x, y) - dmin[x]));
    }
  }

  BlahutState st;
  st.q.assign(ny, 1.0 / static_cast<double>(ny));
  st.kernel.assign(nx, std::vector<double>(ny, 0.0));
  double prev_rate = std::numeric_limits<double>::infinity();
  *converged = false;
  std::size_t it = 0;
  for (; it < kMaxIterations; ++it) {
    std::vector<double> next_q(ny, 0.0);
    double rate = 0.0;
    double distortion = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
      const double px = source.prob(x);
      double c = 0.0;
      for (std::size_t y = 0; y < ny; ++y) c += st.q[y] * w[x][y];
      for (std::size_t y = 0; y < ny; ++y) {
        const double p = c > 0.0 ? st.q[y] * w[x][y] / c : 0.0;
        st.kernel[x][y] = p;
        next_q[y] += px * p;
      }
    }
    for (std::size_t x = 0; x < nx; ++x) {
      const double px = source.prob(x);
      if (px == 0.0) continue;
      for (std::size_t y = 0; y < ny; ++y) {
        const double p = st.kernel[x][y];
        if (p > 0.0 && next_q[y] > 0.0) {
          rate += px * p * std::log2(p / next_q[y]);
          distortion += px * p * spec.at(x, y);
        }
      }
    }
    st.q = std::move(next_q);
    st.rate = std::max(rate, 0.0);
    st.distortion = distortion;
    if (std::fabs(st.rate - prev_rate) < kRateTol) {
      *converged = true;
      ++it;
      break;
    }
    prev_rate = st.rate;
  }
  *iterations = it;
  return st;
}

}  // namespace

RdPoint rd_fixed_slope(const FinitePmf& source, const DistortionSpec& spec,
                       double slope) {
  spec.validate();
  if (source.size() != spec.source_size()) {
    throw invalid_argument("rd_fixed_slope: source pmf does not match distortion rows");
  }
  if (slope < 0.0) throw invalid_argument("rd_fixed_slope: slope must be >= 0");

  RdPoint point;
  point.slope = slope;
  const std::size_t nx = spec.source_size();
  const std::size_t ny = spec.repro_size();

  if (slope == 0.0) {
    // Zero-rate corner: any output-independent kernel is optimal, so pick
    // the constant reproduction with the smallest expected distortion.
    std::size_t best_y = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < ny; ++y) {
      double e = 0.0;
      for (std::size_t x = 0; x < nx; ++x) e += source.prob(x) * spec.at(x, y);
      if (e < best) {
        best = e;
        best_y = y;
      }
    }
    point.rate = 0.0;
    point.distortion = best;
    point.kernel.assign(nx, std::vector<double>(ny, 0.0));
    for (std::size_t x = 0; x < nx; ++x) point.kernel[x][best_y] = 1.0;
    point.output_marginal.assign(ny, 0.0);
    point.output_marginal[best_y] = 1.0;
    point.converged = true;
    point.iterations = 0;
    return point;
  }

  bool converged = false;
  std::size_t iterations = 0;
  BlahutState st = run_blahut(source, spec, slope, &converged, &iterations);
  point.rate = st.rate;
  point.distortion = st.distortion;
  point.kernel = std::move(st.kernel);
  point.output_marginal = std::move(st.q);
  // Near support-change slopes the alternating minimization slows to
  // sublinear; the point is still returned with converged = false so
  // callers can decide (the slope searches below only trust converged
  // probes for their final answer).
  point.converged = converged;
  point.iterations = iterations;
  return point;
}

namespace {

// Bisection over the slope to hit a target achieved distortion. Probes
// steer the bracket either way, but only converged probes may become the
// answer.
RdPoint solve_at_distortion(const FinitePmf& source, const DistortionSpec& spec,
                            double target) {
  double lo = 0.0;  // distortion(lo) >= target
  double hi = 1.0;
  RdPoint hi_point = rd_fixed_slope(source, spec, hi);
  std::size_t guard = 0;
  while (hi_point.distortion > target && guard++ < 64) {
    hi *= 2.0;
    hi_point = rd_fixed_slope(source, spec, hi);
  }
  if (hi_point.distortion > target) {
    throw convergence_error("rd_at_distortion: could not bracket the slope");
  }
  RdPoint best;
  bool have_best = false;
  if (hi_point.converged) {
    best = hi_point;
    have_best = true;
  }
  for (std::size_t it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    RdPoint p = rd_fixed_slope(source, spec, mid);
    if (p.converged &&
        (!have_best ||
         std::fabs(p.distortion - target) < std::fabs(best.distortion - target))) {
      best = p;
      have_best = true;
    }
    if (p.distortion > target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (have_best && std::fabs(best.distortion - target) <= kDistortionTol &&
        hi - lo <= 1e-9 * std::max(1.0, hi)) {
      break;
    }
  }
  if (!have_best || std::fabs(best.distortion - target) > kDistortionTol) {
    throw convergence_error(
        "rd_at_distortion: no converged point within tolerance of the target");
  }
  return best;
}

}  // namespace

RdSolution rd_at_distortion(const FinitePmf& source, const DistortionSpec& spec,
                            double distortion) {
  spec.validate();
  const double d_lo = min_expected_distortion(source, spec);
  const double d_hi = max_useful_distortion(source, spec);
  if (!(distortion > d_lo + tol::kThreshold) ||
      !(distortion < d_hi - tol::kThreshold)) {
    throw domain_error("rd_at_distortion: distortion " + format_real(distortion) +
                       " outside (" + format_real(d_lo) + ", " +
                       format_real(d_hi) + ")");
  }
  RdPoint point = solve_at_distortion(source, spec, distortion);

  RdSolution sol{.distortion = distortion,
                 .rate = point.rate,
                 .kernel = point.kernel,
                 .output_marginal =
                     FinitePmf(spec.repro_alphabet, normalize(point.output_marginal)),
                 .lambda_star = point.slope,
                 .tilted_info = {},
                 .dispersion = 0.0};

  // Per-symbol tilted information from the optimal output distribution:
  // -log2 E_q[2^(lambda (D - d(x, Y)))], evaluated with a per-x shift for
  // stability at large slopes.
  const std::size_t nx = spec.source_size();
  const std::size_t ny = spec.repro_size();
  sol.tilted_info.assign(nx, 0.0);
  for (std::size_t x = 0; x < nx; ++x) {
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < ny; ++y) dmin = std::min(dmin, spec.at(x, y));
    double c = 0.0;
    for (std::size_t y = 0; y < ny; ++y) {
      const double q = sol.output_marginal.prob(y);
      if (q > 0.0) {
        c += q * std::exp2(-sol.lambda_star * (spec.at(x, y) - dmin));
      }
    }
    sol.tilted_info[x] =
        -sol.lambda_star * distortion - (std::log2(c) - sol.lambda_star * dmin);
  }
  double mean = 0.0;
  for (std::size_t x = 0; x < nx; ++x) mean += source.prob(x) * sol.tilted_info[x];
  double var = 0.0;
  for (std::size_t x = 0; x < nx; ++x) {
    const double delta = sol.tilted_info[x] - mean;
    var += source.prob(x) * delta * delta;
  }
  sol.dispersion = var;
  return sol;
}

double d_tilted_renyi_entropy(const RdSolution& rd, const FinitePmf& source,
                              double alpha) {
  if (!(alpha > 0.0)) {
    throw invalid_argument("d_tilted_renyi_entropy: order must be positive");
  }
  if (std::fabs(alpha - 1.0) < 1e-9) return rd.rate;
  if (rd.tilted_info.size() != source.size()) {
    throw invalid_argument("d_tilted_renyi_entropy: source size mismatch");
  }
  const double s = 1.0 - alpha;
  double shift = -std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < source.size(); ++x) {
    if (source.prob(x) > 0.0) shift = std::max(shift, s * rd.tilted_info[x]);
  }
  double sum = 0.0;
  for (std::size_t x = 0; x < source.size(); ++x) {
    if (source.prob(x) > 0.0) {
      sum += source.prob(x) * std::exp2(s * rd.tilted_info[x] - shift);
    }
  }
  return (shift + std::log2(sum)) / s;
}

namespace {

DistortionSpec indicator_spec(const DistortionSpec& spec, double level) {
  DistortionSpec ind = spec;
  for (auto& row : ind.d) {
    for (double& v : row) v = within_level(v, level) ? 0.0 : 1.0;
  }
  return ind;
}

// min I(X;Y) over kernels supported on pairs with d' = 0 wherever the source
// symbol has any such pair: the infinite-slope limit of the curve.
double support_constrained_rate(const FinitePmf& source,
                                const DistortionSpec& ind) {
  const std::size_t nx = ind.source_size();
  const std::size_t ny = ind.repro_size();
  std::vector<std::vector<char>> allowed(nx, std::vector<char>(ny, 0));
  for (std::size_t x = 0; x < nx; ++x) {
    bool any = false;
    for (std::size_t y = 0; y < ny; ++y) {
      if (ind.at(x, y) == 0.0) {
        allowed[x][y] = 1;
        any = true;
      }
    }
    if (!any) {
      // Unavoidably distorted symbols may map anywhere.
      for (std::size_t y = 0; y < ny; ++y) allowed[x][y] = 1;
    }
  }
  std::vector<double> q(ny, 1.0 / static_cast<double>(ny));
  double prev_rate = std::numeric_limits<double>::infinity();
  double rate = 0.0;
  for (std::size_t it = 0; it < kMaxIterations; ++it) {
    std::vector<double> next_q(ny, 0.0);
    rate = 0.0;
    std::vector<std::vector<double>> kernel(nx, std::vector<double>(ny, 0.0));
    for (std::size_t x = 0; x < nx; ++x) {
      double c = 0.0;
      for (std::size_t y = 0; y < ny; ++y) {
        if (allowed[x][y]) c += q[y];
      }
      for (std::size_t y = 0; y < ny; ++y) {
        const double p = (allowed[x][y] && c > 0.0) ? q[y] / c : 0.0;
        kernel[x][y] = p;
        next_q[y] += source.prob(x) * p;
      }
    }
    for (std::size_t x = 0; x < nx; ++x) {
      const double px = source.prob(x);
      if (px == 0.0) continue;
      for (std::size_t y = 0; y < ny; ++y) {
        if (kernel[x][y] > 0.0 && next_q[y] > 0.0) {
          rate += px * kernel[x][y] * std::log2(kernel[x][y] / next_q[y]);
        }
      }
    }
    q = std::move(next_q);
    rate = std::max(rate, 0.0);
    if (std::fabs(rate - prev_rate) < kRateTol) break;
    prev_rate = rate;
  }
  return rate;
}

}  // namespace

std::optional<double> r_d_epsilon(const FinitePmf& source,
                                  const DistortionSpec& spec, double level,
                                  double epsilon) {
  spec.validate();
  if (epsilon < 0.0 || epsilon >= 1.0) {
    throw invalid_argument("r_d_epsilon: epsilon must lie in [0, 1)");
  }
  const DistortionSpec ind = indicator_spec(spec, level);
  const double floor_excess = min_expected_distortion(source, ind);
  if (floor_excess > epsilon + tol::kThreshold) return std::nullopt;
  const double zero_rate_excess = max_useful_distortion(source, ind);
  if (epsilon >= zero_rate_excess - tol::kThreshold) return 0.0;
  if (epsilon <= floor_excess + tol::kThreshold) {
    return support_constrained_rate(source, ind);
  }
  // Bisection over the slope for achieved excess = epsilon; the rate is a
  // continuous function of the achieved point, so the closest bracketing
  // point within tolerance is returned.
  double lo = 0.0, hi = 1.0;
  RdPoint hi_point = rd_fixed_slope(source, ind, hi);
  std::size_t guard = 0;
  while (hi_point.distortion > epsilon && guard++ < 64) {
    hi *= 2.0;
    hi_point = rd_fixed_slope(source, ind, hi);
  }
  if (hi_point.distortion > epsilon) {
    // Slope growth exhausted: fall back to the support-constrained limit.
    return support_constrained_rate(source, ind);
  }
  RdPoint best;
  bool have_best = hi_point.converged;
  if (have_best) best = hi_point;
  for (std::size_t it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    RdPoint p = rd_fixed_slope(source, ind, mid);
    if (p.converged &&
        (!have_best || std::fabs(p.distortion - epsilon) <
                           std::fabs(best.distortion - epsilon))) {
      best = p;
      have_best = true;
    }
    if (p.distortion > epsilon) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (have_best && std::fabs(best.distortion - epsilon) <= kDistortionTol) break;
  }
  if (!have_best) return support_constrained_rate(source, ind);
  return best.rate;
}

std::optional<double> h_d_epsilon_bruteforce(const FinitePmf& source,
                                             const DistortionSpec& spec,
                                             double level, double epsilon) {
  spec.validate();
  const std::size_t nx = spec.source_size();
  const std::size_t ny = spec.repro_size();
  const double count = std::pow(static_cast<double>(ny), static_cast<double>(nx));
  if (count > 1e7) {
    throw size_error(
        "h_d_epsilon_bruteforce: |Y|^|X| = " + format_real(count) +
        " exceeds the exhaustive range; use the covering-based bound instead");
  }
  std::vector<std::size_t> assignment(nx, 0);
  std::optional<double> best;
  std::vector<double> marginal(ny, 0.0);
  while (true) {
    double excess = 0.0;
    std::fill(marginal.begin(), marginal.end(), 0.0);
    for (std::size_t x = 0; x < nx; ++x) {
      const std::size_t y = assignment[x];
      marginal[y] += source.prob(x);
      if (!within_level(spec.at(x, y), level)) excess += source.prob(x);
    }
    if (excess <= epsilon + tol::kThreshold) {
      const double h = shannon_entropy(marginal);
      if (!best || h < *best) best = h;
    }
    // Next assignment in mixed radix.
    std::size_t pos = 0;
    while (pos < nx && ++assignment[pos] == ny) {
      assignment[pos] = 0;
      ++pos;
    }
    if (pos == nx) break;
  }
  return best;
}

double q_inv(double epsilon) {
  if (epsilon < 0.0 || epsilon >= 1.0) {
    throw invalid_argument("q_inv: epsilon must lie in [0, 1)");
  }
  if (epsilon == 0.0) return std::numeric_limits<double>::infinity();
  const auto q = [](double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); };
  // Q is strictly decreasing; bracket then bisect. 40 doublings cover any
  // representable tail probability.
  double lo = -1.0, hi = 1.0;
  while (q(lo) < epsilon) lo *= 2.0;
  while (q(hi) > epsilon) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (q(mid) > epsilon) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-13) break;
  }
  return 0.5 * (lo + hi);
}

GaussianApprox gaussian_approx(const RdSolution& rd, std::size_t n,
                               double epsilon) {
  if (n == 0) throw invalid_argument("gaussian_approx: n must be >= 1");
  if (epsilon < 0.0 || epsilon >= 1.0) {
    throw invalid_argument("gaussian_approx: epsilon must lie in [0, 1)");
  }
  GaussianApprox g{.n = n, .epsilon = epsilon, .value = 0.0};
  if (epsilon == 0.0) {
    // The dispersion term carries exp(-q_inv(0)^2 / 2) = 0.
    g.value = rd.rate;
    return g;
  }
  const double z = q_inv(epsilon);
  const double pi = std::acos(-1.0);
  g.value = (1.0 - epsilon) * rd.rate -
            std::sqrt(rd.dispersion / (2.0 * pi * static_cast<double>(n))) *
                std::exp(-0.5 * z * z);
  return g;
}

TiltedConverseReport tilted_entropy_converse(const FinitePmf& source,
                                             const DistortionSpec& spec,
                                             double level, double t,
                                             const Code& code) {
  if (!(t > 0.0)) throw invalid_argument("tilted_entropy_converse: t must be positive");
  const CodeMetrics m = code_metrics(code, source, spec, level, t);
  if (m.excess_probability > 1e-12) {
    throw invalid_argument(
        "tilted_entropy_converse: code has positive excess probability " +
        format_real(m.excess_probability));
  }
  const RdSolution rd = rd_at_distortion(source, spec, level);
  const double alpha = 1.0 / (1.0 + t);
  const double h = d_tilted_renyi_entropy(rd, source, alpha);
  const double cardinality =
      static_cast<double>(std::min(spec.source_size(), spec.repro_size()));
  TiltedConverseReport report;
  report.cgf = m.cgf;
  report.floor = h - std::log2(std::log2(1.0 + cardinality));
  report.holds = report.cgf >= report.floor - tol::kInequality;
  return report;
}

}  // namespace vlsc
