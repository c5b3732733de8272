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

// Reference implementations used only by tests. They take the slow, obvious
// route (power-set scans, point-level sums, vertex enumeration) and share no
// code with the library beyond its plain data types.

#ifndef COEVENT_TESTS_SUPPORT_ORACLES_HPP_
#define COEVENT_TESTS_SUPPORT_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "coevent/labelled_universe.hpp"
#include "coevent/lp_duality.hpp"
#include "coevent/rational.hpp"

namespace coevent::testing {

// ---------------------------------------------------------------------------
// Labelling by brute force

// A quotient structure with all orderings and names stripped: labels are
// (bra-class, ket-event) pairs and a terrace-label is the set of its members'
// bra-classes together with its terrace.
struct LabellingShape {
  std::set<std::pair<IndexSet, IndexSet>> labels;
  std::set<std::pair<std::set<IndexSet>, IndexSet>> terraces;
  IndexSet empty_terrace;

  bool operator==(const LabellingShape&) const = default;
};

// Groups identical rows, then scans every subset of the nonempty rows and
// keeps the subsets whose exact-membership ket set is nonempty.
inline LabellingShape brute_force_labelling(const BoolMatrix& rel) {
  std::map<std::vector<bool>, IndexSet> groups;
  for (std::size_t r = 0; r < rel.rows(); ++r) {
    std::vector<bool> row(rel.cols());
    for (std::size_t c = 0; c < rel.cols(); ++c) row[c] = rel.get(r, c);
    groups[row].push_back(r);
  }
  LabellingShape shape;
  std::vector<std::pair<std::vector<bool>, IndexSet>> nonempty;
  for (const auto& [row, bra] : groups) {
    IndexSet ket;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c]) ket.push_back(c);
    }
    shape.labels.insert({bra, ket});
    if (!ket.empty()) nonempty.emplace_back(row, bra);
  }
  const std::size_t n = nonempty.size();
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    IndexSet terrace;
    for (std::size_t c = 0; c < rel.cols(); ++c) {
      bool exact = true;
      for (std::size_t i = 0; i < n && exact; ++i) {
        exact = nonempty[i].first[c] == static_cast<bool>((subset >> i) & 1U);
      }
      if (exact) terrace.push_back(c);
    }
    if (subset == 0) {
      shape.empty_terrace = terrace;
    } else if (!terrace.empty()) {
      std::set<IndexSet> members;
      for (std::size_t i = 0; i < n; ++i) {
        if ((subset >> i) & 1U) members.insert(nonempty[i].second);
      }
      shape.terraces.insert({members, terrace});
    }
  }
  return shape;
}

inline LabellingShape shape_of(const QuotientStructure& q) {
  LabellingShape shape;
  for (const auto& l : q.labels()) shape.labels.insert({l.bra_class, l.ket_event});
  for (const auto& tl : q.terrace_labels()) {
    std::set<IndexSet> members;
    for (std::size_t x = 0; x < q.labels().size(); ++x) {
      if ((tl.members >> x) & 1U) members.insert(q.labels()[x].bra_class);
    }
    shape.terraces.insert({members, tl.terrace});
  }
  shape.empty_terrace = q.empty_terrace();
  return shape;
}

// ---------------------------------------------------------------------------
// Set arithmetic straight from the relation. A label is represented by the
// row of the first point of its bra-class.

inline IndexSet row_set(const BoolMatrix& rel, std::size_t row) {
  IndexSet s;
  for (std::size_t c = 0; c < rel.cols(); ++c) {
    if (rel.get(row, c)) s.push_back(c);
  }
  return s;
}

inline IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  for (std::size_t v : a) {
    for (std::size_t w : b) {
      if (v == w) out.push_back(v);
    }
  }
  return out;
}

inline IndexSet complement(const IndexSet& a, std::size_t universe) {
  IndexSet out;
  for (std::size_t v = 0; v < universe; ++v) {
    bool in = false;
    for (std::size_t w : a) in = in || w == v;
    if (!in) out.push_back(v);
  }
  return out;
}

inline IndexSet all_points(std::size_t n) {
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(i);
  return out;
}

// Intersection of |x> over x in X and of |x>^c over the other nonempty labels.
inline IndexSet oracle_terrace(const BoolMatrix& rel, const QuotientStructure& q,
                               LabelMask members) {
  IndexSet acc = all_points(rel.cols());
  for (std::size_t x = 0; x < q.labels().size(); ++x) {
    const IndexSet ket = row_set(rel, q.labels()[x].bra_class.front());
    if (ket.empty()) continue;
    acc = intersect(acc, ((members >> x) & 1U) ? ket : complement(ket, rel.cols()));
  }
  return acc;
}

inline IndexSet oracle_second_kind(const BoolMatrix& rel, const QuotientStructure& q,
                                   LabelMask members) {
  IndexSet acc = all_points(rel.cols());
  for (std::size_t x = 0; x < q.labels().size(); ++x) {
    if ((members >> x) & 1U) acc = intersect(acc, row_set(rel, q.labels()[x].bra_class.front()));
  }
  return acc;
}

// Bra-points whose row equals the row of some label in X.
inline IndexSet oracle_terraced_bra(const BoolMatrix& rel, const QuotientStructure& q,
                                    LabelMask members) {
  IndexSet out;
  for (std::size_t r = 0; r < rel.rows(); ++r) {
    for (std::size_t x = 0; x < q.labels().size(); ++x) {
      if (((members >> x) & 1U) && row_set(rel, r) == row_set(rel, q.labels()[x].bra_class.front())) {
        out.push_back(r);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Point-level measures

inline Rational point_mass(const std::vector<MassPoint>& pts, const IndexSet& set) {
  Rational s = 0;
  for (std::size_t i : set) s += pts[i].mass;
  return s;
}

// Phi(R) = sum over cells in R of the product of the point masses.
inline Rational point_certainty(const ExtensionalCoEvent& ext) {
  Rational s = 0;
  for (std::size_t i = 0; i < ext.bra_points().size(); ++i) {
    for (std::size_t k = 0; k < ext.ket_points().size(); ++k) {
      if (ext.relation().get(i, k)) s += ext.bra_points()[i].mass * ext.ket_points()[k].mass;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Linear algebra and LP vertex enumeration

// Solves the square system A z = rhs by Gauss-Jordan elimination with exact
// rationals. nullopt when A is singular.
inline std::optional<std::vector<Rational>> gauss_solve(std::vector<std::vector<Rational>> a,
                                                        std::vector<Rational> rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rational> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = rhs[i] / a[i][i];
  return z;
}

struct VertexOracleResult {
  bool feasible = false;
  Rational value;
  std::vector<std::vector<Rational>> optimal_vertices;
  std::size_t vertex_count = 0;
};

// Exhaustive vertex enumeration: every choice of n constraints (rows or
// nonnegativity bounds) taken as equalities, solved, and kept when feasible.
// Valid for LPs whose feasible region is bounded, which holds for any LP
// with a sum-to-one equality over nonnegative variables.
inline VertexOracleResult vertex_enumeration(const LinearProgram& lp) {
  const std::size_t n = lp.variable_count();
  struct Row {
    std::vector<Rational> a;
    RowKind kind;
    Rational rhs;
  };
  std::vector<Row> rows;
  for (const auto& r : lp.rows) rows.push_back({r.coefficients, r.kind, r.rhs});
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    rows.push_back({e, RowKind::kGreaterEqual, Rational(0)});
  }
  auto satisfied = [&](const std::vector<Rational>& z) {
    for (const auto& r : rows) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += r.a[j] * z[j];
      if (r.kind == RowKind::kLessEqual && lhs > r.rhs) return false;
      if (r.kind == RowKind::kGreaterEqual && lhs < r.rhs) return false;
      if (r.kind == RowKind::kEqual && lhs != r.rhs) return false;
    }
    return true;
  };

  VertexOracleResult result;
  std::set<std::vector<Rational>> seen;
  std::vector<std::size_t> pick(n);
  // Iterate over n-combinations of row indices in lexicographic order.
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  const std::size_t m = rows.size();
  if (n == 0 || n > m) return result;
  while (true) {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> rhs;
    for (std::size_t i : pick) {
      a.push_back(rows[i].a);
      rhs.push_back(rows[i].rhs);
    }
    if (auto z = gauss_solve(a, rhs); z && satisfied(*z) && seen.insert(*z).second) {
      Rational v = 0;
      for (std::size_t j = 0; j < n; ++j) v += lp.objective[j] * (*z)[j];
      const bool better = !result.feasible ||
                          (lp.sense == Sense::kMinimize ? v < result.value : v > result.value);
      if (better) {
        result.value = v;
        result.optimal_vertices.clear();
      }
      if (better || v == result.value) result.optimal_vertices.push_back(*z);
      result.feasible = true;
    }
    std::size_t k = n;
    while (k > 0 && pick[k - 1] == m - n + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t i = k; i < n; ++i) pick[i] = pick[i - 1] + 1;
  }
  result.vertex_count = seen.size();
  return result;
}

}  // namespace coevent::testing

#endif  // COEVENT_TESTS_SUPPORT_ORACLES_HPP_
