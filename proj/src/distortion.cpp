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

#include "vlsc/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vlsc {

void DistortionSpec::validate() const {
  if (source_alphabet.empty() || repro_alphabet.empty()) {
    throw invalid_argument("distortion: alphabets must be non-empty");
  }
  if (d.size() != source_alphabet.size()) {
    throw invalid_argument("distortion: matrix must have one row per source symbol");
  }
  for (const auto& row : d) {
    if (row.size() != repro_alphabet.size()) {
      throw invalid_argument(
          "distortion: matrix must have one column per reproduction symbol");
    }
    for (double v : row) {
      if (!std::isfinite(v) || v < 0.0) {
        throw invalid_argument("distortion: entries must be finite and >= 0");
      }
    }
  }
}

namespace {
std::size_t index_in(const std::vector<Symbol>& alphabet, const Symbol& s,
                     const char* kind) {
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i] == s) return i;
  }
  throw invalid_argument(std::string("distortion: unknown ") + kind +
                         " symbol '" + s + "'");
}
}  // namespace

std::size_t DistortionSpec::source_index(const Symbol& s) const {
  return index_in(source_alphabet, s, "source");
}

std::size_t DistortionSpec::repro_index(const Symbol& s) const {
  return index_in(repro_alphabet, s, "reproduction");
}

DistortionSpec hamming_spec(const std::vector<Symbol>& alphabet) {
  DistortionSpec spec;
  spec.source_alphabet = alphabet;
  spec.repro_alphabet = alphabet;
  spec.d.assign(alphabet.size(), std::vector<double>(alphabet.size(), 1.0));
  for (std::size_t i = 0; i < alphabet.size(); ++i) spec.d[i][i] = 0.0;
  return spec;
}

std::vector<std::size_t> distortion_ball(const DistortionSpec& spec,
                                         std::size_t y_index, double level) {
  if (y_index >= spec.repro_size()) {
    throw invalid_argument("distortion_ball: reproduction index out of range");
  }
  if (level < 0.0) {
    throw invalid_argument("distortion_ball: level must be >= 0");
  }
  std::vector<std::size_t> ball;
  for (std::size_t x = 0; x < spec.source_size(); ++x) {
    if (within_level(spec.at(x, y_index), level)) ball.push_back(x);
  }
  return ball;
}

std::vector<std::size_t> distortion_ball(const DistortionSpec& spec,
                                         const Symbol& y, double level) {
  return distortion_ball(spec, spec.repro_index(y), level);
}

double uncovered_mass(const FinitePmf& source, const DistortionSpec& spec,
                      double level) {
  double mass = 0.0;
  for (std::size_t x = 0; x < spec.source_size(); ++x) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < spec.repro_size(); ++y) {
      best = std::min(best, spec.at(x, y));
    }
    if (!within_level(best, level)) mass += source.prob(x);
  }
  return mass;
}

bool feasibility(const FinitePmf& source, const DistortionSpec& spec,
                 double level, double epsilon) {
  return uncovered_mass(source, spec, level) <= epsilon + tol::kThreshold;
}

bool balls_pairwise_disjoint(const DistortionSpec& spec, double level) {
  for (std::size_t x = 0; x < spec.source_size(); ++x) {
    std::size_t hits = 0;
    for (std::size_t y = 0; y < spec.repro_size(); ++y) {
      if (within_level(spec.at(x, y), level)) ++hits;
    }
    if (hits > 1) return false;
  }
  return true;
}

bool induced_minimality_certified(const DistortionSpec& spec, double level) {
  return spec.repro_size() <= 2 || balls_pairwise_disjoint(spec, level);
}

double min_expected_distortion(const FinitePmf& source,
                               const DistortionSpec& spec) {
  double total = 0.0;
  for (std::size_t x = 0; x < spec.source_size(); ++x) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < spec.repro_size(); ++y) {
      best = std::min(best, spec.at(x, y));
    }
    total += source.prob(x) * best;
  }
  return total;
}

double max_useful_distortion(const FinitePmf& source,
                             const DistortionSpec& spec) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t y = 0; y < spec.repro_size(); ++y) {
    double expected = 0.0;
    for (std::size_t x = 0; x < spec.source_size(); ++x) {
      expected += source.prob(x) * spec.at(x, y);
    }
    best = std::min(best, expected);
  }
  return best;
}

}  // namespace vlsc
