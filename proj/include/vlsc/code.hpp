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

#ifndef VLSC_CODE_HPP
#define VLSC_CODE_HPP

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "vlsc/codeword.hpp"
#include "vlsc/covering.hpp"
#include "vlsc/distortion.hpp"
#include "vlsc/pmf.hpp"

namespace vlsc {

enum class CodeVariant { kStochastic, kDeterministic, kPrefix };

// One weighted encoder branch: the source symbol is mapped to
// codewords[center] with the given probability.
struct CodeBranch {
  std::size_t center;
  double prob;
};

// A variable-length code: an (optionally stochastic) encoder from source
// symbols to binary strings, and an injective decoder from the used
// codewords to reproduction symbols. The encoder is represented symbolically
// (at most two weighted branches per source symbol) so that all performance
// metrics are exact expectations rather than Monte Carlo estimates.
struct Code {
  CodeVariant variant = CodeVariant::kStochastic;
  std::vector<std::size_t> center_repro;       // repro index per center
  std::vector<BinaryString> codewords;         // codeword per center
  std::vector<std::vector<CodeBranch>> encoder;  // per source index

  std::size_t center_count() const { return codewords.size(); }
  // Reproduction index of the given codeword, or nullopt for strings the
  // encoder never emits (the decoder is deliberately undefined there).
  std::optional<std::size_t> decode(const BinaryString& w) const;
  // True iff all used codewords are distinct.
  bool decoder_injective() const;
  bool prefix_free() const;
};

const char* to_string(CodeVariant v);

// x in cell i < k* emits codeword i; x in the last cell emits codeword k*
// with probability beta / P[cell k*] and falls back to the first codeword
// otherwise; everything uncovered emits the first codeword. Excess equals
// epsilon exactly when k* >= 2 and gamma otherwise.
Code build_stochastic_code(const CoveringPlan& plan, std::size_t source_size);

// Same partition, but every branch is deterministic: x in cell i emits
// codeword i. Excess equals gamma <= epsilon.
Code build_deterministic_code(const CoveringPlan& plan, std::size_t source_size);

// Prefix-free variant: codeword i is the non-prefix codeword_i extended by a
// '1' and zero padding to the common length floor(log2 k*) + 1. Branching is
// identical to the stochastic variant.
Code build_prefix_code(const CoveringPlan& plan, std::size_t source_size);

struct CodeMetrics {
  double excess_probability = 0.0;
  double cgf = 0.0;  // (1/t) log2 E[2^(t len)], bits
  double mean_length = 0.0;
  std::size_t max_length = 0;
  double t = 0.0;
};

// Exact metrics from the weighted (source symbol, branch) enumeration.
// Requires t > 0. The excess test uses the same threshold slack as the
// covering (within_level), and the cgf is evaluated in shifted form so large
// t do not overflow.
CodeMetrics code_metrics(const Code& code, const FinitePmf& source,
                         const DistortionSpec& spec, double level, double t);

// Output distribution decode(f(X)) over reproduction indices (length
// |repro|); entries for unused symbols are zero.
std::vector<double> code_output_marginal(const Code& code,
                                         const FinitePmf& source,
                                         std::size_t repro_size);

// Realizes one encoder draw for symbol x. The only randomized path in this
// module; everything metric-related is exact.
const BinaryString& sample_encoding(const Code& code, std::size_t x,
                                    std::mt19937_64& rng);

}  // namespace vlsc

#endif  // VLSC_CODE_HPP
