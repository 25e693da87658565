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

#include "vlsc/code.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace vlsc {

const char* to_string(CodeVariant v) {
  switch (v) {
    case CodeVariant::kStochastic: return "stochastic";
    case CodeVariant::kDeterministic: return "deterministic";
    case CodeVariant::kPrefix: return "prefix";
  }
  return "unknown";
}

std::optional<std::size_t> Code::decode(const BinaryString& w) const {
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    if (codewords[i] == w) return center_repro[i];
  }
  return std::nullopt;
}

bool Code::decoder_injective() const {
  std::unordered_set<BinaryString> seen;
  for (const auto& w : codewords) {
    if (!seen.insert(w).second) return false;
  }
  return true;
}

bool Code::prefix_free() const {
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    for (std::size_t j = 0; j < codewords.size(); ++j) {
      if (i != j && is_proper_prefix(codewords[i], codewords[j])) return false;
    }
  }
  return decoder_injective();
}

namespace {

void check_plan_fits(const CoveringPlan& plan, std::size_t source_size) {
  for (const auto& cell : plan.cells) {
    for (std::size_t x : cell) {
      if (x >= source_size) {
        throw invalid_argument("build code: plan cell index out of range");
      }
    }
  }
}

// Shared assembly: codewords are chosen by the caller, branching follows the
// covering partition.
Code assemble(const CoveringPlan& plan, std::size_t source_size,
              std::vector<BinaryString> codewords, CodeVariant variant,
              bool deterministic_last_cell) {
  check_plan_fits(plan, source_size);
  Code code;
  code.variant = variant;
  code.center_repro = plan.center_indices;
  code.codewords = std::move(codewords);
  code.encoder.assign(source_size, {});
  for (std::size_t x = 0; x < source_size; ++x) {
    code.encoder[x] = {CodeBranch{0, 1.0}};  // uncovered symbols
  }
  const std::size_t k = plan.k_star;
  for (std::size_t i = 0; i < k; ++i) {
    const bool last = (i + 1 == k);
    for (std::size_t x : plan.cells[i]) {
      if (!last || deterministic_last_cell) {
        code.encoder[x] = {CodeBranch{i, 1.0}};
      } else {
        double p = plan.cell_probs[i] > 0.0
                       ? std::clamp(plan.beta_mass / plan.cell_probs[i], 0.0, 1.0)
                       : 1.0;
        if (i == 0 || p >= 1.0) {
          // Both branches land on the same codeword when k* = 1, and the
          // fallback branch vanishes when beta fills the whole cell.
          code.encoder[x] = {CodeBranch{i, 1.0}};
        } else {
          code.encoder[x] = {CodeBranch{i, p}, CodeBranch{0, 1.0 - p}};
        }
      }
    }
  }
  return code;
}

}  // namespace

Code build_stochastic_code(const CoveringPlan& plan, std::size_t source_size) {
  std::vector<BinaryString> words(plan.k_star);
  for (std::size_t i = 0; i < plan.k_star; ++i) words[i] = nth_codeword(i + 1);
  return assemble(plan, source_size, std::move(words), CodeVariant::kStochastic,
                  /*deterministic_last_cell=*/false);
}

Code build_deterministic_code(const CoveringPlan& plan, std::size_t source_size) {
  std::vector<BinaryString> words(plan.k_star);
  for (std::size_t i = 0; i < plan.k_star; ++i) words[i] = nth_codeword(i + 1);
  return assemble(plan, source_size, std::move(words), CodeVariant::kDeterministic,
                  /*deterministic_last_cell=*/true);
}

Code build_prefix_code(const CoveringPlan& plan, std::size_t source_size) {
  const std::size_t target_len = codeword_length(plan.k_star) + 1;
  std::vector<BinaryString> words(plan.k_star);
  for (std::size_t i = 0; i < plan.k_star; ++i) {
    BinaryString w = nth_codeword(i + 1);
    // Pad with '1' then zeros: the final '1' sits at a length-determined
    // position, so codewords of different base lengths cannot collide, and
    // equal-length bases already differ.
    w.push_back('1');
    w.resize(target_len, '0');
    words[i] = std::move(w);
  }
  return assemble(plan, source_size, std::move(words), CodeVariant::kPrefix,
                  /*deterministic_last_cell=*/false);
}

CodeMetrics code_metrics(const Code& code, const FinitePmf& source,
                         const DistortionSpec& spec, double level, double t) {
  if (!(t > 0.0)) throw invalid_argument("code_metrics: t must be positive");
  if (code.encoder.size() != source.size()) {
    throw invalid_argument("code_metrics: encoder does not match source size");
  }
  CodeMetrics m;
  m.t = t;
  std::size_t max_len = 0;
  for (std::size_t x = 0; x < source.size(); ++x) {
    for (const CodeBranch& b : code.encoder[x]) {
      if (source.prob(x) * b.prob > 0.0) {
        max_len = std::max(max_len, code.codewords[b.center].size());
      }
    }
  }
  double shifted_sum = 0.0;  // E[2^(t (len - max_len))], in [0, 1]
  for (std::size_t x = 0; x < source.size(); ++x) {
    const double px = source.prob(x);
    if (px == 0.0) continue;
    for (const CodeBranch& b : code.encoder[x]) {
      const double w = px * b.prob;
      if (w == 0.0) continue;
      const std::size_t len = code.codewords[b.center].size();
      const std::size_t y = code.center_repro[b.center];
      if (!within_level(spec.at(x, y), level)) m.excess_probability += w;
      m.mean_length += w * static_cast<double>(len);
      shifted_sum += w * std::exp2(t * (static_cast<double>(len) -
                                        static_cast<double>(max_len)));
    }
  }
  m.max_length = max_len;
  m.cgf = static_cast<double>(max_len) + std::log2(shifted_sum) / t;
  return m;
}

std::vector<double> code_output_marginal(const Code& code,
                                         const FinitePmf& source,
                                         std::size_t repro_size) {
  std::vector<double> marginal(repro_size, 0.0);
  for (std::size_t x = 0; x < source.size(); ++x) {
    for (const CodeBranch& b : code.encoder[x]) {
      marginal[code.center_repro[b.center]] += source.prob(x) * b.prob;
    }
  }
  return marginal;
}

const BinaryString& sample_encoding(const Code& code, std::size_t x,
                                    std::mt19937_64& rng) {
  const auto& branches = code.encoder.at(x);
  if (branches.size() == 1) return code.codewords[branches[0].center];
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double r = u(rng);
  for (const CodeBranch& b : branches) {
    if (r < b.prob) return code.codewords[b.center];
    r -= b.prob;
  }
  return code.codewords[branches.back().center];
}

}  // namespace vlsc
