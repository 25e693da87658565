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
#include <cmath>
#include <random>

#include "doctest.h"
#include "vlsc/pmf.hpp"

using namespace vlsc;

namespace {

FinitePmf make(std::vector<double> probs) {
  std::vector<Symbol> alphabet;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    alphabet.push_back(Symbol(1, static_cast<char>('a' + i)));
  }
  return FinitePmf(alphabet, std::move(probs));
}

FinitePmf random_simplex(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.001, 1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (double& v : p) total += (v = u(rng));
  for (double& v : p) v /= total;
  return make(p);
}

}  // namespace

TEST_CASE("pmf invariants are enforced") {
  CHECK_THROWS_AS(make({0.5, 0.6}), invalid_argument);
  CHECK_THROWS_AS(make({-0.1, 1.1}), invalid_argument);
  CHECK_THROWS_AS(FinitePmf({"a", "a"}, {0.5, 0.5}), invalid_argument);
  const FinitePmf p = make({0.5, 0.5});
  CHECK(p.index_of("b") == 1);
  CHECK_THROWS_AS(p.index_of("z"), invalid_argument);
}

TEST_CASE("shannon entropy") {
  CHECK(shannon_entropy(make({0.25, 0.25, 0.25, 0.25})) == doctest::Approx(2.0));
  CHECK(shannon_entropy(make({1.0, 0.0, 0.0})) == doctest::Approx(0.0));
  CHECK(shannon_entropy(make({0.5, 0.25, 0.25})) == doctest::Approx(1.5));
}

TEST_CASE("renyi entropy values") {
  const FinitePmf p = make({0.5, 0.25, 0.25});
  CHECK(renyi_entropy(p, 0.5) == doctest::Approx(1.5431066063272239).epsilon(1e-10));
  for (double alpha : {0.25, 0.5, 2.0, 4.0}) {
    CHECK(renyi_entropy(make({0.2, 0.2, 0.2, 0.2, 0.2}), alpha) ==
          doctest::Approx(std::log2(5.0)).epsilon(1e-12));
    CHECK(renyi_entropy(make({1.0, 0.0}), alpha) == doctest::Approx(0.0));
  }
  CHECK_THROWS_AS(renyi_entropy(p, 0.0), invalid_argument);
  CHECK_THROWS_AS(renyi_entropy(p, -2.0), invalid_argument);
  // Orders inside the guard dispatch to the Shannon value.
  CHECK(renyi_entropy(p, 1.0) == doctest::Approx(1.5));
  CHECK(renyi_entropy(p, 1.0 + 1e-10) == doctest::Approx(1.5));
}

TEST_CASE("renyi entropy is non-increasing in the order and continuous at 1") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const FinitePmf p = random_simplex(rng, 2 + trial % 5);
    double prev = renyi_entropy(p, 0.1);
    for (double alpha : {0.25, 0.5, 0.9, 1.2, 2.0, 4.0, 16.0}) {
      const double h = renyi_entropy(p, alpha);
      CHECK(h <= prev + 1e-10);
      prev = h;
    }
    const double hs = shannon_entropy(p);
    CHECK(std::fabs(renyi_entropy(p, 1.0 - 1e-6) - hs) <= 1e-4);
    CHECK(std::fabs(renyi_entropy(p, 1.0 + 1e-6) - hs) <= 1e-4);
  }
}

TEST_CASE("majorization examples") {
  CHECK(majorizes({1.0, 0.0}, {0.5, 0.5}));
  CHECK_FALSE(majorizes({0.5, 0.5}, {1.0, 0.0}));
  CHECK(majorizes({0.75, 0.25}, {0.5, 0.3, 0.2}));
  CHECK_THROWS_AS(majorizes({0.7, 0.2}, {0.5, 0.5}), invalid_argument);
}

TEST_CASE("majorization is reflexive, transitive, antisymmetric up to permutation") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const FinitePmf a = random_simplex(rng, n);
    CHECK(majorizes(a.probs(), a.probs()));

    // Robin Hood style transfers concentrate mass, producing a chain
    // a3 majorizes a2 majorizes a1.
    auto concentrate = [&](std::vector<double> v) {
      std::sort(v.begin(), v.end(), std::greater<double>());
      const double delta = u(rng) * v.back();
      v.front() += delta;
      v.back() -= delta;
      return v;
    };
    const std::vector<double> a2 = concentrate(a.probs());
    const std::vector<double> a3 = concentrate(a2);
    CHECK(majorizes(a2, a.probs()));
    CHECK(majorizes(a3, a2));
    CHECK(majorizes(a3, a.probs()));  // transitivity
    if (majorizes(a.probs(), a2)) {
      // Mutual majorization forces equal sorted vectors.
      std::vector<double> sa = a.probs(), sb = a2;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(sa[i] == doctest::Approx(sb[i]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("schur concavity witness") {
  const SchurWitness w1 = schur_concavity_witness({1.0, 0.0}, {0.5, 0.5}, 0.5);
  CHECK(w1.holds);
  CHECK(w1.lhs == doctest::Approx(0.0));
  CHECK(w1.rhs == doctest::Approx(1.0));
  const SchurWitness w2 =
      schur_concavity_witness({0.75, 0.25}, {0.6, 0.4}, 0.5);
  CHECK(w2.holds);
  const SchurWitness w3 = schur_concavity_witness({0.6, 0.4}, {0.6, 0.4}, 0.5);
  CHECK(w3.holds);
  CHECK(w3.lhs == doctest::Approx(w3.rhs));
  CHECK_THROWS_AS(schur_concavity_witness({0.5, 0.5}, {1.0, 0.0}, 0.5),
                  invalid_argument);
}

TEST_CASE("schur concavity over random majorizing pairs") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const FinitePmf q = random_simplex(rng, 2 + trial % 5);
    std::vector<double> p = q.probs();
    std::sort(p.begin(), p.end(), std::greater<double>());
    const double delta = u(rng) * p.back();
    p.front() += delta;
    p.back() -= delta;
    for (double alpha : {0.25, 0.5, 2.0, 4.0}) {
      CHECK(schur_concavity_witness(p, q.probs(), alpha).holds);
    }
  }
}
