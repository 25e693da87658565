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

#include "vlsc/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>

namespace vlsc {

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

FinitePmf::FinitePmf(std::vector<Symbol> alphabet, std::vector<double> probs)
    : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {
  if (alphabet_.size() != probs_.size()) {
    throw invalid_argument("pmf: alphabet and probs must have equal length");
  }
  if (alphabet_.empty()) {
    throw invalid_argument("pmf: alphabet must be non-empty");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw invalid_argument("pmf: probabilities must be finite and >= 0");
    }
    total += p;
  }
  if (std::fabs(total - 1.0) > tol::kNormalization) {
    throw invalid_argument("pmf: probabilities sum to " + format_real(total) +
                           ", expected 1");
  }
  index_.reserve(alphabet_.size());
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (!index_.emplace(alphabet_[i], i).second) {
      throw invalid_argument("pmf: duplicate symbol '" + alphabet_[i] + "'");
    }
  }
}

std::size_t FinitePmf::index_of(const Symbol& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) {
    throw invalid_argument("pmf: unknown symbol '" + s + "'");
  }
  return it->second;
}

double shannon_entropy(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double shannon_entropy(const FinitePmf& p) { return shannon_entropy(p.probs()); }

double renyi_entropy(const std::vector<double>& probs, double alpha) {
  if (!(alpha > 0.0)) {
    throw invalid_argument("renyi_entropy: order must be positive");
  }
  if (std::fabs(alpha - 1.0) < 1e-9) return shannon_entropy(probs);
  double s = 0.0;
  for (double p : probs) {
    if (p > 0.0) s += std::pow(p, alpha);
  }
  return std::log2(s) / (1.0 - alpha);
}

double renyi_entropy(const FinitePmf& p, double alpha) {
  return renyi_entropy(p.probs(), alpha);
}

namespace {

// Sorted-descending copy, zero-padded to n entries.
std::vector<double> sorted_padded(const Weights& w, std::size_t n) {
  for (double v : w) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw invalid_argument("majorizes: weights must be finite and >= 0");
    }
  }
  std::vector<double> s(w.begin(), w.end());
  s.resize(n, 0.0);
  std::sort(s.begin(), s.end(), std::greater<double>());
  return s;
}

}  // namespace

bool majorizes(const Weights& p, const Weights& q) {
  const std::size_t n = std::max(p.size(), q.size());
  if (n == 0) throw invalid_argument("majorizes: empty weights");
  std::vector<double> ps = sorted_padded(p, n);
  std::vector<double> qs = sorted_padded(q, n);
  const double tp = std::accumulate(ps.begin(), ps.end(), 0.0);
  const double tq = std::accumulate(qs.begin(), qs.end(), 0.0);
  if (std::fabs(tp - tq) > tol::kEquality) {
    throw invalid_argument("majorizes: totals differ (" + format_real(tp) +
                           " vs " + format_real(tq) + ")");
  }
  double cp = 0.0, cq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cp += ps[i];
    cq += qs[i];
    if (cp < cq - tol::kPrefix) return false;
  }
  return true;
}

std::vector<double> normalize(const Weights& w) {
  double total = 0.0;
  for (double v : w) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw invalid_argument("normalize: weights must be finite and >= 0");
    }
    total += v;
  }
  if (!(total > 0.0)) throw invalid_argument("normalize: total mass is zero");
  std::vector<double> out(w.begin(), w.end());
  for (double& v : out) v /= total;
  return out;
}

SchurWitness schur_concavity_witness(const Weights& p, const Weights& q,
                                     double alpha) {
  if (!majorizes(p, q)) {
    throw invalid_argument("schur_concavity_witness: p does not majorize q");
  }
  SchurWitness w;
  w.lhs = renyi_entropy(normalize(p), alpha);
  w.rhs = renyi_entropy(normalize(q), alpha);
  w.holds = w.lhs <= w.rhs + tol::kEquality;
  return w;
}

}  // namespace vlsc
