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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "vlsc/json_io.hpp"

using namespace vlsc;

TEST_CASE("pmf json round trip and diagnostics") {
  const FinitePmf pmf = pmf_from_json_text(
      R"({"alphabet": ["a", "b"], "probs": [0.25, 0.75]})", "inline");
  CHECK(pmf.size() == 2);
  CHECK(pmf.prob(1) == doctest::Approx(0.75));
  const FinitePmf again = pmf_from_json_text(pmf_to_json_text(pmf), "roundtrip");
  CHECK(again.probs() == pmf.probs());

  CHECK_THROWS_WITH_AS(
      pmf_from_json_text(R"({"probs": [1.0]})", "x"),
      doctest::Contains("missing field 'alphabet'"), invalid_argument);
  CHECK_THROWS_WITH_AS(
      pmf_from_json_text(R"({"alphabet": ["a"], "probs": ["q"]})", "x"),
      doctest::Contains("'probs'"), invalid_argument);
  CHECK_THROWS_AS(pmf_from_json_text("{", "x"), invalid_argument);
}

TEST_CASE("distortion json round trip and diagnostics") {
  const std::string text = R"({
    "source_alphabet": ["a", "b"],
    "repro_alphabet": ["A"],
    "d": [[0.0], [1.0]]
  })";
  const DistortionSpec spec = distortion_from_json_text(text, "inline");
  CHECK(spec.at(1, 0) == doctest::Approx(1.0));
  const DistortionSpec again =
      distortion_from_json_text(distortion_to_json_text(spec), "roundtrip");
  CHECK(again.d == spec.d);

  CHECK_THROWS_WITH_AS(
      distortion_from_json_text(
          R"({"source_alphabet": ["a"], "repro_alphabet": ["A"], "d": [[-1.0]]})",
          "x"),
      doctest::Contains(">= 0"), invalid_argument);
}

TEST_CASE("code export schema") {
  const FinitePmf source({"a", "b", "c"}, {0.5, 0.3, 0.2});
  const DistortionSpec spec = hamming_spec({"a", "b", "c"});
  const CoveringPlan plan = greedy_cover(source, spec, 0.0, 0.25);
  const Code code = build_stochastic_code(plan, 3);
  const std::string text = code_to_json_text(code, source, spec);
  CHECK(text.find("\"variant\": \"stochastic\"") != std::string::npos);
  CHECK(text.find("\"codeword\": \"\"") != std::string::npos);  // empty string
  CHECK(text.find("\"decoder\"") != std::string::npos);
  // Emission is deterministic.
  CHECK(text == code_to_json_text(code, source, spec));
}

TEST_CASE("csv emitters use 12 significant digits and the inf literal") {
  CHECK(format_real(0.3219280948873623) == "0.321928094887");
  CHECK(format_real(2.0) == "2");
  const std::string csv = gquantity_csv(
      {{0.0, 0.25, 1.0, 0.5, 0.8999686269529916},
       {0.0, 0.0, 1.0, 0.5, std::nullopt}});
  CHECK(csv == "D,epsilon,t,alpha,G\n"
               "0,0.25,1,0.5,0.899968626953\n"
               "0,0,1,0.5,inf\n");
}

TEST_CASE("suite config parsing") {
  const std::string text = R"({
    "seed": 7,
    "checks": ["achievability"],
    "budgets": {"random_codes": 3},
    "instances": [{
      "name": "demo",
      "source": {"alphabet": ["a", "b"], "probs": [0.6, 0.4]},
      "distortion": {"source_alphabet": ["a", "b"],
                     "repro_alphabet": ["a", "b"],
                     "d": [[0.0, 1.0], [1.0, 0.0]]},
      "D": [0.0], "epsilon": [0.25], "t": [1.0]
    }],
    "families": [{
      "name": "rand", "count": 2, "max_source": 3, "max_repro": 3,
      "D": [0.2], "epsilon": [0.1], "t": [0.5]
    }]
  })";
  const SuiteConfig config = suite_config_from_json_text(text, "inline");
  CHECK(config.seed == 7);
  CHECK(config.seed_set);
  CHECK(config.budgets.random_codes == 3);
  REQUIRE(config.instances.size() == 1);
  CHECK(config.instances[0].name == "demo");
  REQUIRE(config.families.size() == 1);
  CHECK(config.families[0].count == 2);
  const SuiteResult result = run_suite(config);
  CHECK(result.all_pass());

  CHECK_THROWS_WITH_AS(
      suite_config_from_json_text(R"({"instances": [{"D": [0]}]})", "cfg"),
      doctest::Contains("instances[0]"), invalid_argument);
  CHECK_THROWS_WITH_AS(
      suite_config_from_json_text(
          R"({"seed": 1, "instances": [{
            "source": {"alphabet": ["a"], "probs": [1.0]},
            "distortion": {"source_alphabet": ["a"], "repro_alphabet": ["a"],
                           "d": [[0.0]]},
            "D": [], "epsilon": [0.1], "t": [1.0]}]})",
          "cfg"),
      doctest::Contains("non-empty"), invalid_argument);
}

TEST_CASE("report lines are stable json") {
  const BoundReport r = make_report("demo-claim", "demo-instance", 1.0, 2.0, 0.0);
  const std::string line = report_to_json_line(r);
  CHECK(line.find("\"claim\":\"demo-claim\"") != std::string::npos);
  CHECK(line.find("\"verdict\":true") != std::string::npos);
  CHECK(line == report_to_json_line(r));
}
