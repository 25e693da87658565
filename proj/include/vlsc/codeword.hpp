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

#ifndef VLSC_CODEWORD_HPP
#define VLSC_CODEWORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace vlsc {

// Finite binary strings are held as std::string over {'0','1'}; the empty
// string is a valid codeword.
using BinaryString = std::string;

// The i-th binary string (1-based) in length order: "", "0", "1", "00", "01",
// "10", "11", "000", ... Within a length the strings appear in increasing
// binary value, which fixes the tie-break. length(nth_codeword(i)) is
// floor(log2 i).
BinaryString nth_codeword(std::uint64_t i);

// floor(log2 i) without touching floats.
std::size_t codeword_length(std::uint64_t i);

// True iff a is a proper prefix of b.
bool is_proper_prefix(const BinaryString& a, const BinaryString& b);

// sum of 2^-len over the given codewords.
double kraft_sum(const std::vector<BinaryString>& codewords);

}  // namespace vlsc

#endif  // VLSC_CODEWORD_HPP
