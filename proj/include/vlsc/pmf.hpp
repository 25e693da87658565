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

#ifndef VLSC_PMF_HPP
#define VLSC_PMF_HPP

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "vlsc/common.hpp"

namespace vlsc {

// Probability mass function over a finite, ordered alphabet.
// Invariants: entries >= 0, sum within tol::kNormalization of 1, symbols
// distinct. Immutable after construction.
class FinitePmf {
 public:
  FinitePmf(std::vector<Symbol> alphabet, std::vector<double> probs);

  const std::vector<Symbol>& alphabet() const { return alphabet_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double prob(std::size_t i) const { return probs_[i]; }
  const Symbol& symbol(std::size_t i) const { return alphabet_[i]; }
  // Throws invalid_argument for unknown symbols.
  std::size_t index_of(const Symbol& s) const;

 private:
  std::vector<Symbol> alphabet_;
  std::vector<double> probs_;
  std::unordered_map<Symbol, std::size_t> index_;
};

// Non-negative, not necessarily normalized masses.
using Weights = std::vector<double>;

// Shannon entropy in bits, with 0 log 0 = 0.
double shannon_entropy(const FinitePmf& p);
double shannon_entropy(const std::vector<double>& probs);

// Renyi entropy of order alpha in bits. alpha <= 0 is rejected; orders within
// 1e-9 of 1 dispatch to the Shannon limit. Zero-probability entries are
// dropped (0^alpha = 0 for alpha > 0).
double renyi_entropy(const FinitePmf& p, double alpha);
double renyi_entropy(const std::vector<double>& probs, double alpha);

// True iff p majorizes q: after sorting both in non-increasing order and
// zero-padding to equal length, every prefix sum of p dominates the one of q.
// Totals must agree within tol::kEquality, otherwise the comparison is
// rejected with invalid_argument.
bool majorizes(const Weights& p, const Weights& q);

// Evaluates both sides of the Schur-concavity ordering for a majorizing pair:
// normalizing p and q, H_alpha(p) must not exceed H_alpha(q). Precondition:
// majorizes(p, q).
struct SchurWitness {
  double lhs;  // H_alpha(normalized p)
  double rhs;  // H_alpha(normalized q)
  bool holds;  // lhs <= rhs + tol::kEquality
};
SchurWitness schur_concavity_witness(const Weights& p, const Weights& q,
                                     double alpha);

// Scales non-negative weights to a distribution (the total must be positive).
std::vector<double> normalize(const Weights& w);

}  // namespace vlsc

#endif  // VLSC_PMF_HPP
