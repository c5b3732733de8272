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

// Small named co~events shared by the tests. The JSON files under
// tests/fixtures describe the same data for the document and CLI tests.

#ifndef COEVENT_TESTS_SUPPORT_FIXTURES_HPP_
#define COEVENT_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "coevent/labelled_universe.hpp"
#include "coevent/rational.hpp"

namespace coevent::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(COEVENT_FIXTURE_DIR) + "/" + name;
}

inline Rational rat(const char* text) { return *parse_rational(text); }

inline BoolMatrix matrix(const std::vector<std::vector<int>>& cells) {
  BoolMatrix m(cells.size(), cells.empty() ? 0 : cells.front().size());
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) m.set(r, c, cells[r][c] != 0);
  }
  return m;
}

// The student-delicacies data: two students x1, x2 with believabilities
// 3/5 and 2/5; three ingredients with probabilities 1/5, 3/10, 1/2. Student
// x1 likes the first two ingredients, x2 the last two.
inline ExtensionalCoEvent delicacies() {
  return ExtensionalCoEvent({{"x1", rat("3/5")}, {"x2", rat("2/5")}},
                            {{"k1", rat("1/5")}, {"k2", rat("3/10")}, {"k3", rat("1/2")}},
                            matrix({{1, 1, 0}, {0, 1, 1}}));
}

// A relation filled with `fill` over uniform-ish point masses.
inline ExtensionalCoEvent constant_coevent(std::size_t rows, std::size_t cols, bool fill) {
  std::vector<MassPoint> bra, ket;
  for (std::size_t i = 0; i < rows; ++i) {
    bra.push_back({"w" + std::to_string(i + 1), Rational(1) / rows});
  }
  for (std::size_t k = 0; k < cols; ++k) {
    ket.push_back({"k" + std::to_string(k + 1), Rational(1) / cols});
  }
  return ExtensionalCoEvent(bra, ket, BoolMatrix(rows, cols, fill));
}

// Diagonal relation: every label has its own single-terrace ket-event.
inline ExtensionalCoEvent identity_coevent() {
  return ExtensionalCoEvent({{"a", rat("1/2")}, {"b", rat("1/4")}, {"c", rat("1/4")}},
                            {{"u", rat("1/5")}, {"v", rat("3/10")}, {"w", rat("1/2")}},
                            matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

// Has an empty row (an Omega-empty label), two identical rows, and a column
// outside every ket-event (an empty terrace).
inline ExtensionalCoEvent omega_empty_coevent() {
  return ExtensionalCoEvent(
      {{"a", rat("1/2")}, {"b", rat("1/5")}, {"c", rat("1/10")}, {"d", rat("1/5")}},
      {{"u", rat("1/10")}, {"v", rat("1/5")}, {"w", rat("3/10")}, {"z", rat("2/5")}},
      matrix({{1, 1, 0, 0}, {0, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}}));
}

}  // namespace coevent::testing

#endif  // COEVENT_TESTS_SUPPORT_FIXTURES_HPP_
