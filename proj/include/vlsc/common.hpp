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

#ifndef VLSC_COMMON_HPP
#define VLSC_COMMON_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace vlsc {

using Symbol = std::string;

// Centralized numeric tolerances. All probability mass is stored in doubles,
// so every comparison carries an explicit budget.
namespace tol {
// A pmf must sum to 1 within this.
inline constexpr double kNormalization = 1e-12;
// Equality of derived quantities (masses, entropies).
inline constexpr double kEquality = 1e-10;
// Slack for inequality checks that accumulate float error over big sums.
inline constexpr double kInequality = 1e-9;
// Distortion threshold comparisons d <= D use this absolute slack so that
// per-letter sums of rational distortions stay inside their ball.
inline constexpr double kThreshold = 1e-12;
// Prefix-sum comparisons in the majorization order.
inline constexpr double kPrefix = 1e-12;
}  // namespace tol

class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when no code can meet the excess-distortion constraint; carries the
// probability mass of source symbols that no reproduction symbol covers.
class infeasible_error : public std::runtime_error {
 public:
  infeasible_error(const std::string& what, double uncovered)
      : std::runtime_error(what), uncovered_mass_(uncovered) {}
  double uncovered_mass() const { return uncovered_mass_; }

 private:
  double uncovered_mass_;
};

class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class size_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Formats a double with 12 significant digits; the sentinel text for missing
// (infinite) values is the literal "inf". Used by every CSV/JSON emitter so
// outputs are byte-stable.
std::string format_real(double v);

}  // namespace vlsc

#endif  // VLSC_COMMON_HPP
