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

#include "vlsc/codeword.hpp"

#include <bit>
#include <cmath>

#include "vlsc/common.hpp"

namespace vlsc {

std::size_t codeword_length(std::uint64_t i) {
  if (i == 0) throw invalid_argument("codeword index must be >= 1");
  return static_cast<std::size_t>(std::bit_width(i) - 1);
}

BinaryString nth_codeword(std::uint64_t i) {
  const std::size_t len = codeword_length(i);
  const std::uint64_t offset = i - (std::uint64_t{1} << len);
  BinaryString s(len, '0');
  for (std::size_t b = 0; b < len; ++b) {
    if ((offset >> (len - 1 - b)) & 1u) s[b] = '1';
  }
  return s;
}

bool is_proper_prefix(const BinaryString& a, const BinaryString& b) {
  return a.size() < b.size() && b.compare(0, a.size(), a) == 0;
}

double kraft_sum(const std::vector<BinaryString>& codewords) {
  double s = 0.0;
  for (const auto& w : codewords) s += std::ldexp(1.0, -static_cast<int>(w.size()));
  return s;
}

}  // namespace vlsc
