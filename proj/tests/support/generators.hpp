// Copyright 2026 The coevent Authors
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

// Seeded random inputs for property tests. Every generator takes the engine
// by reference so a test's whole input sequence follows from one seed.

#ifndef COEVENT_TESTS_SUPPORT_GENERATORS_HPP_
#define COEVENT_TESTS_SUPPORT_GENERATORS_HPP_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "coevent/labelled_universe.hpp"
#include "coevent/measures.hpp"
#include "coevent/rational.hpp"

namespace coevent::testing {

using Engine = std::mt19937_64;

inline std::size_t uniform_size(Engine& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline BoolMatrix random_relation(Engine& rng, std::size_t rows, std::size_t cols,
                                  double density = 0.5) {
  std::bernoulli_distribution cell(density);
  BoolMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, cell(rng));
  }
  return m;
}

// Integer weights in [0, 12] (or [1, 12]) normalized to sum exactly 1.
inline std::vector<Rational> random_masses(Engine& rng, std::size_t count,
                                           bool allow_zero = true) {
  std::uniform_int_distribution<int> weight(allow_zero ? 0 : 1, 12);
  std::vector<int> w(count);
  int total = 0;
  for (int& v : w) total += (v = weight(rng));
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  std::vector<Rational> out;
  for (int v : w) out.emplace_back(Rational(v) / total);
  return out;
}

inline std::vector<MassPoint> random_points(Engine& rng, std::size_t count,
                                            const std::string& prefix, bool allow_zero = true) {
  std::vector<MassPoint> points;
  auto masses = random_masses(rng, count, allow_zero);
  for (std::size_t i = 0; i < count; ++i) {
    points.push_back({prefix + std::to_string(i + 1), masses[i]});
  }
  return points;
}

inline ExtensionalCoEvent random_coevent(Engine& rng, std::size_t rows, std::size_t cols,
                                         double density = 0.5, bool allow_zero = true) {
  return ExtensionalCoEvent(random_points(rng, rows, "w", allow_zero),
                            random_points(rng, cols, "k", allow_zero),
                            random_relation(rng, rows, cols, density));
}

// A quotient structure with measures derived from random point masses.
struct Triple {
  ExtensionalCoEvent ext;
  QuotientStructure q;
  BelievabilityDist b;
  ProbabilityDist p;
};

inline Triple make_triple(ExtensionalCoEvent ext) {
  QuotientStructure q = derive_labelling(ext);
  BelievabilityDist b = BelievabilityDist::from_points(q, ext);
  ProbabilityDist p = ProbabilityDist::from_points(q, ext);
  return Triple{std::move(ext), std::move(q), std::move(b), std::move(p)};
}

// At most `max_rows` bra-points, hence at most that many labels.
inline Triple random_triple(Engine& rng, std::size_t max_rows, std::size_t max_cols) {
  const std::size_t rows = uniform_size(rng, 1, max_rows);
  const std::size_t cols = uniform_size(rng, 1, max_cols);
  const double density = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
  return make_triple(random_coevent(rng, rows, cols, density));
}

}  // namespace coevent::testing

#endif  // COEVENT_TESTS_SUPPORT_GENERATORS_HPP_
