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

#ifndef VLSC_JSON_IO_HPP
#define VLSC_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "vlsc/blocklength.hpp"
#include "vlsc/bounds.hpp"
#include "vlsc/code.hpp"
#include "vlsc/distortion.hpp"
#include "vlsc/pmf.hpp"
#include "vlsc/rate_distortion.hpp"

namespace vlsc {

// File schemas:
//   pmf:        {"alphabet": ["a", ...], "probs": [0.5, ...]}
//   distortion: {"source_alphabet": [...], "repro_alphabet": [...],
//                "d": [[...], ...]}
//   code:       {"variant": ..., "encoder": [{"symbol", "branches":
//                [{"codeword", "prob"}]}], "decoder": [{"codeword",
//                "symbol"}]}
// Codewords are ASCII 0/1 strings; the empty codeword is "".
// Schema violations raise invalid_argument naming the offending field.

FinitePmf load_pmf(const std::string& path);
FinitePmf pmf_from_json_text(const std::string& text, const std::string& origin);
std::string pmf_to_json_text(const FinitePmf& pmf);

DistortionSpec load_distortion(const std::string& path);
DistortionSpec distortion_from_json_text(const std::string& text,
                                         const std::string& origin);
std::string distortion_to_json_text(const DistortionSpec& spec);

std::string code_to_json_text(const Code& code, const FinitePmf& source,
                              const DistortionSpec& spec);

std::string rd_solution_to_json_text(const RdSolution& solution);

// CSV emitters (12 significant digits, literal "inf" for missing values).
std::string gquantity_csv(
    const std::vector<std::tuple<double, double, double, double,
                                 std::optional<double>>>& rows);
std::string rd_sweep_csv(const std::vector<RdSolution>& rows);
std::string sweep_csv(const std::vector<AsymptoticRow>& rows,
                      const std::vector<RateBounds>& bounds, double t,
                      double epsilon, double level);

// Suite config / report wiring.
SuiteConfig suite_config_from_json_text(const std::string& text,
                                        const std::string& origin);
SuiteConfig load_suite_config(const std::string& path);
std::string report_to_json_line(const BoundReport& report);
std::string suite_report_jsonl(const SuiteResult& result);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace vlsc

#endif  // VLSC_JSON_IO_HPP
