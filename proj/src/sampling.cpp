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

#include "vlsc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "vlsc/covering.hpp"

namespace vlsc {

std::mt19937_64 seeded_rng(std::uint64_t root_seed, const std::string& salt) {
  // FNV-1a over the salt, folded into the root seed.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : salt) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::mt19937_64 rng(root_seed ^ h);
  rng.discard(7);
  return rng;
}

namespace {

std::vector<Symbol> letter_alphabet(std::size_t size, char first) {
  std::vector<Symbol> alphabet(size);
  for (std::size_t i = 0; i < size; ++i) {
    alphabet[i] = Symbol(1, static_cast<char>(first + static_cast<char>(i)));
  }
  return alphabet;
}

}  // namespace

FinitePmf random_pmf(std::mt19937_64& rng, std::size_t size,
                     unsigned dyadic_grid) {
  if (size == 0) throw invalid_argument("random_pmf: size must be >= 1");
  std::vector<double> probs(size);
  if (dyadic_grid > 0) {
    if (size > dyadic_grid) {
      throw invalid_argument("random_pmf: grid too coarse for the alphabet");
    }
    // Composition of `grid` units into `size` positive parts.
    std::vector<unsigned> cuts;
    std::vector<unsigned> pool(dyadic_grid - 1);
    std::iota(pool.begin(), pool.end(), 1u);
    std::shuffle(pool.begin(), pool.end(), rng);
    cuts.assign(pool.begin(), pool.begin() + (size - 1));
    cuts.push_back(0u);
    cuts.push_back(dyadic_grid);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i < size; ++i) {
      probs[i] = static_cast<double>(cuts[i + 1] - cuts[i]) /
                 static_cast<double>(dyadic_grid);
    }
  } else {
    std::uniform_real_distribution<double> u(0.01, 1.0);
    double total = 0.0;
    for (double& p : probs) total += (p = u(rng));
    for (double& p : probs) p /= total;
  }
  return FinitePmf(letter_alphabet(size, 'a'), probs);
}

DistortionSpec random_distortion(std::mt19937_64& rng, std::size_t source_size,
                                 std::size_t repro_size, bool zero_matching) {
  DistortionSpec spec;
  spec.source_alphabet = letter_alphabet(source_size, 'a');
  spec.repro_alphabet = letter_alphabet(repro_size, 'A');
  std::uniform_real_distribution<double> u(0.0, 1.0);
  spec.d.assign(source_size, std::vector<double>(repro_size, 0.0));
  for (auto& row : spec.d) {
    for (double& v : row) v = u(rng);
  }
  if (zero_matching) {
    std::uniform_int_distribution<std::size_t> pick(0, repro_size - 1);
    for (std::size_t x = 0; x < source_size; ++x) spec.d[x][pick(rng)] = 0.0;
  }
  return spec;
}

Instance random_instance(std::mt19937_64& rng, std::size_t max_source,
                         std::size_t max_repro, unsigned dyadic_grid) {
  std::uniform_int_distribution<std::size_t> sx(2, max_source);
  std::uniform_int_distribution<std::size_t> sy(2, max_repro);
  std::bernoulli_distribution matching(0.5);
  const std::size_t nx = sx(rng);
  const std::size_t ny = sy(rng);
  return Instance{random_pmf(rng, nx, dyadic_grid),
                  random_distortion(rng, nx, ny, matching(rng))};
}

double kernel_excess(const FinitePmf& source, const DistortionSpec& spec,
                     const std::vector<std::vector<double>>& kernel,
                     double level) {
  double excess = 0.0;
  for (std::size_t x = 0; x < source.size(); ++x) {
    for (std::size_t y = 0; y < spec.repro_size(); ++y) {
      if (!within_level(spec.at(x, y), level)) {
        excess += source.prob(x) * kernel[x][y];
      }
    }
  }
  return excess;
}

std::vector<double> kernel_output_marginal(
    const FinitePmf& source, const std::vector<std::vector<double>>& kernel) {
  if (kernel.empty()) throw invalid_argument("kernel_output_marginal: empty kernel");
  std::vector<double> marginal(kernel[0].size(), 0.0);
  for (std::size_t x = 0; x < source.size(); ++x) {
    for (std::size_t y = 0; y < marginal.size(); ++y) {
      marginal[y] += source.prob(x) * kernel[x][y];
    }
  }
  return marginal;
}

std::vector<std::vector<double>> random_feasible_kernel(
    std::mt19937_64& rng, const FinitePmf& source, const DistortionSpec& spec,
    double level, double epsilon) {
  const std::size_t nx = spec.source_size();
  const std::size_t ny = spec.repro_size();
  const double base_excess = uncovered_mass(source, spec, level);
  if (base_excess > epsilon + tol::kThreshold) {
    throw infeasible_error("random_feasible_kernel: instance infeasible", base_excess);
  }

  // Minimum-distortion deterministic kernel; its excess is exactly the
  // uncovered mass.
  std::vector<std::vector<double>> anchor(nx, std::vector<double>(ny, 0.0));
  for (std::size_t x = 0; x < nx; ++x) {
    std::size_t best = 0;
    for (std::size_t y = 1; y < ny; ++y) {
      if (spec.at(x, y) < spec.at(x, best)) best = y;
    }
    anchor[x][best] = 1.0;
  }

  std::vector<std::vector<double>> free(nx, std::vector<double>(ny, 0.0));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t x = 0; x < nx; ++x) {
    double total = 0.0;
    for (std::size_t y = 0; y < ny; ++y) total += (free[x][y] = u(rng) + 1e-9);
    for (std::size_t y = 0; y < ny; ++y) free[x][y] /= total;
  }

  const double free_excess = kernel_excess(source, spec, free, level);
  double theta = 1.0;
  if (free_excess > epsilon) {
    theta = (epsilon - base_excess) / (free_excess - base_excess);
    theta = std::max(0.0, theta * (1.0 - 1e-12));  // stay inside the budget
  }
  // Half the draws sit at the boundary, the rest strictly inside.
  if (u(rng) < 0.5) theta *= u(rng);
  std::vector<std::vector<double>> kernel(nx, std::vector<double>(ny, 0.0));
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      kernel[x][y] = theta * free[x][y] + (1.0 - theta) * anchor[x][y];
    }
  }
  return kernel;
}

namespace {

std::vector<std::uint64_t> sample_distinct(std::mt19937_64& rng,
                                           std::uint64_t lo, std::uint64_t hi,
                                           std::size_t count) {
  std::vector<std::uint64_t> pool(hi - lo + 1);
  std::iota(pool.begin(), pool.end(), lo);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  return pool;
}

// Shared scaffold for random codes: centers come from the greedy covering
// (guaranteeing excess gamma <= epsilon), then encoder branches get random
// perturbations that are kept only while the excess budget holds.
Code random_code_scaffold(std::mt19937_64& rng, const FinitePmf& source,
                          const DistortionSpec& spec, double level,
                          double epsilon, std::vector<BinaryString> codewords,
                          bool allow_stochastic) {
  const CoveringPlan plan = greedy_cover(source, spec, level, epsilon);
  const std::size_t m = codewords.size();
  if (m < plan.k_star) {
    throw invalid_argument("random code: fewer codewords than covering cells");
  }

  Code code;
  code.variant = allow_stochastic ? CodeVariant::kStochastic
                                  : CodeVariant::kDeterministic;
  code.codewords = std::move(codewords);
  // Centers: the k* covering centers plus random distinct extras.
  std::vector<char> used(spec.repro_size(), 0);
  code.center_repro = plan.center_indices;
  for (std::size_t y : plan.center_indices) used[y] = 1;
  std::vector<std::size_t> extras;
  for (std::size_t y = 0; y < spec.repro_size(); ++y) {
    if (!used[y]) extras.push_back(y);
  }
  std::shuffle(extras.begin(), extras.end(), rng);
  for (std::size_t i = plan.k_star; i < m; ++i) {
    code.center_repro.push_back(extras[i - plan.k_star]);
  }
  // Random pairing of codewords to centers.
  std::shuffle(code.codewords.begin(), code.codewords.end(), rng);

  code.encoder.assign(source.size(), {});
  for (std::size_t x = 0; x < source.size(); ++x) {
    code.encoder[x] = {CodeBranch{0, 1.0}};
  }
  for (std::size_t i = 0; i < plan.k_star; ++i) {
    for (std::size_t x : plan.cells[i]) code.encoder[x] = {CodeBranch{i, 1.0}};
  }

  auto excess_of = [&](const Code& c) {
    double excess = 0.0;
    for (std::size_t x = 0; x < source.size(); ++x) {
      for (const CodeBranch& b : c.encoder[x]) {
        if (!within_level(spec.at(x, c.center_repro[b.center]), level)) {
          excess += source.prob(x) * b.prob;
        }
      }
    }
    return excess;
  };

  std::uniform_int_distribution<std::size_t> pick_x(0, source.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_c(0, m - 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t attempts = 4 * source.size() + 4;
  for (std::size_t it = 0; it < attempts; ++it) {
    const std::size_t x = pick_x(rng);
    std::vector<CodeBranch> saved = code.encoder[x];
    if (allow_stochastic && u(rng) < 0.5) {
      const std::size_t c1 = pick_c(rng);
      std::size_t c2 = pick_c(rng);
      if (c2 == c1) c2 = (c2 + 1) % m;
      const double p = u(rng);
      code.encoder[x] = {CodeBranch{c1, p}, CodeBranch{c2, 1.0 - p}};
    } else {
      code.encoder[x] = {CodeBranch{pick_c(rng), 1.0}};
    }
    if (excess_of(code) > epsilon + tol::kThreshold) code.encoder[x] = saved;
  }
  return code;
}

}  // namespace

Code random_injective_code(std::mt19937_64& rng, const FinitePmf& source,
                           const DistortionSpec& spec, double level,
                           double epsilon, std::uint64_t max_index,
                           bool allow_stochastic) {
  const CoveringPlan plan = greedy_cover(source, spec, level, epsilon);
  const std::size_t cap =
      std::min<std::size_t>(std::min(spec.source_size(), spec.repro_size()),
                            static_cast<std::size_t>(max_index));
  if (cap < plan.k_star) {
    throw invalid_argument("random_injective_code: index budget below k*");
  }
  std::uniform_int_distribution<std::size_t> pick_m(plan.k_star, cap);
  const std::size_t m = pick_m(rng);
  std::vector<BinaryString> words;
  for (std::uint64_t i : sample_distinct(rng, 1, max_index, m)) {
    words.push_back(nth_codeword(i));
  }
  return random_code_scaffold(rng, source, spec, level, epsilon,
                              std::move(words), allow_stochastic);
}

Code random_prefix_code(std::mt19937_64& rng, const FinitePmf& source,
                        const DistortionSpec& spec, double level,
                        double epsilon) {
  const CoveringPlan plan = greedy_cover(source, spec, level, epsilon);
  const std::size_t cap = std::min(spec.source_size(), spec.repro_size());
  std::uniform_int_distribution<std::size_t> pick_m(plan.k_star, cap);
  const std::size_t m = pick_m(rng);

  // Random lengths, bumped until the Kraft inequality holds, then canonical
  // codeword assignment (sorted ascending, next code value shifted left on
  // every length increase).
  const std::size_t max_len = static_cast<std::size_t>(std::ceil(
                                   std::log2(static_cast<double>(m) + 1.0))) +
                               2;
  std::uniform_int_distribution<std::size_t> pick_len(0, max_len);
  std::vector<std::size_t> lengths(m);
  for (auto& l : lengths) l = pick_len(rng);
  auto kraft = [&]() {
    double s = 0.0;
    for (std::size_t l : lengths) s += std::ldexp(1.0, -static_cast<int>(l));
    return s;
  };
  while (kraft() > 1.0 + 1e-15) {
    auto it = std::min_element(lengths.begin(), lengths.end());
    ++*it;
  }
  std::sort(lengths.begin(), lengths.end());
  std::vector<BinaryString> words(m);
  std::uint64_t value = 0;
  std::size_t prev = lengths[0];
  for (std::size_t i = 0; i < m; ++i) {
    value <<= (lengths[i] - prev);
    prev = lengths[i];
    BinaryString w(lengths[i], '0');
    for (std::size_t b = 0; b < lengths[i]; ++b) {
      if ((value >> (lengths[i] - 1 - b)) & 1u) w[b] = '1';
    }
    words[i] = std::move(w);
    ++value;
  }
  Code code = random_code_scaffold(rng, source, spec, level, epsilon,
                                   std::move(words), /*allow_stochastic=*/true);
  code.variant = CodeVariant::kPrefix;
  return code;
}

std::vector<Code> enumerate_injective_codes(const DistortionSpec& spec,
                                            std::uint64_t max_index) {
  spec.validate();
  const std::size_t nx = spec.source_size();
  const std::size_t ny = spec.repro_size();
  const std::size_t max_m = std::min(nx, ny);

  std::vector<Code> codes;
  std::vector<std::uint64_t> subset;

  // Iterate subsets of codeword indices by size, then decoder injections,
  // then onto encoder maps.
  // Advances a mixed-radix counter; false once it wraps around.
  auto advance = [](std::vector<std::size_t>& digits, std::size_t radix) {
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == radix) {
      digits[pos] = 0;
      ++pos;
    }
    return pos < digits.size();
  };

  auto emit_for_subset = [&](const std::vector<std::uint64_t>& indices) {
    const std::size_t m = indices.size();
    // Ordered selections of m distinct reproduction symbols.
    std::vector<std::size_t> selection(m, 0);
    do {
      std::vector<char> taken(ny, 0);
      bool distinct = true;
      for (std::size_t y : selection) {
        if (taken[y]) {
          distinct = false;
          break;
        }
        taken[y] = 1;
      }
      if (!distinct) continue;
      // Onto encoder maps X -> [m].
      std::vector<std::size_t> phi(nx, 0);
      do {
        std::vector<char> hit(m, 0);
        for (std::size_t x : phi) hit[x] = 1;
        if (std::find(hit.begin(), hit.end(), 0) != hit.end()) continue;
        Code code;
        code.variant = CodeVariant::kDeterministic;
        for (std::size_t i = 0; i < m; ++i) {
          code.codewords.push_back(nth_codeword(indices[i]));
          code.center_repro.push_back(selection[i]);
        }
        code.encoder.assign(nx, {});
        for (std::size_t x = 0; x < nx; ++x) {
          code.encoder[x] = {CodeBranch{phi[x], 1.0}};
        }
        codes.push_back(std::move(code));
        if (codes.size() > 1000000) {
          throw size_error("enumerate_injective_codes: more than 1e6 codes");
        }
      } while (advance(phi, m));
    } while (advance(selection, ny));
  };

  // All subsets of {1..max_index} with size 1..max_m.
  std::vector<std::uint64_t> indices;
  for (std::uint64_t i = 1; i <= max_index; ++i) indices.push_back(i);
  std::vector<std::size_t> pick;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (!pick.empty() && pick.size() <= max_m) {
      std::vector<std::uint64_t> chosen;
      for (std::size_t idx : pick) chosen.push_back(indices[idx]);
      emit_for_subset(chosen);
    }
    if (pick.size() == max_m) return;
    for (std::size_t i = start; i < indices.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  return codes;
}

}  // namespace vlsc
