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

#include "coevent/lp_duality.hpp"

#include <algorithm>

#include "coevent/errors.hpp"

namespace coevent {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

RowKind flipped(RowKind kind) {
  switch (kind) {
    case RowKind::kLessEqual: return RowKind::kGreaterEqual;
    case RowKind::kGreaterEqual: return RowKind::kLessEqual;
    case RowKind::kEqual: return RowKind::kEqual;
  }
  return kind;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

// Solves M y = rhs for square M by Gauss-Jordan elimination. nullopt when M is
// singular.
std::optional<std::vector<Rational>> solve_square(Matrix m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& v : m[col]) v *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

// Equality form of an LP: rows with nonnegative right-hand sides, slack and
// surplus columns appended after the structural ones, artificial columns
// after those.
struct StandardForm {
  std::size_t structural = 0;
  std::size_t total_columns = 0;
  std::size_t first_artificial = 0;
  Matrix a;  // rows x total_columns
  std::vector<Rational> b;
  std::vector<int> row_sign;  // -1 where the source row was negated
  std::vector<std::string> column_names;
  std::vector<std::size_t> initial_basis;
};

StandardForm standardize(const LinearProgram& lp) {
  StandardForm sf;
  const std::size_t m = lp.rows.size();
  sf.structural = lp.variable_count();

  std::vector<RowKind> kinds;
  for (const auto& row : lp.rows) {
    const bool negate = row.rhs < 0;
    sf.row_sign.push_back(negate ? -1 : 1);
    kinds.push_back(negate ? flipped(row.kind) : row.kind);
  }

  std::size_t slacks = 0;
  std::size_t artificials = 0;
  for (auto kind : kinds) {
    if (kind != RowKind::kEqual) ++slacks;
    if (kind != RowKind::kLessEqual) ++artificials;
  }
  sf.first_artificial = sf.structural + slacks;
  sf.total_columns = sf.first_artificial + artificials;
  sf.a.assign(m, std::vector<Rational>(sf.total_columns));
  sf.column_names = lp.variable_keys;
  sf.initial_basis.assign(m, 0);

  std::size_t next_slack = sf.structural;
  std::size_t next_artificial = sf.first_artificial;
  std::vector<std::string> artificial_names;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational sign = sf.row_sign[i];
    for (std::size_t j = 0; j < sf.structural; ++j) {
      sf.a[i][j] = sign * lp.rows[i].coefficients[j];
    }
    sf.b.push_back(sign * lp.rows[i].rhs);
    switch (kinds[i]) {
      case RowKind::kLessEqual:
        sf.a[i][next_slack] = 1;
        sf.column_names.push_back("slack[" + lp.rows[i].name + "]");
        sf.initial_basis[i] = next_slack++;
        break;
      case RowKind::kGreaterEqual:
        sf.a[i][next_slack] = -1;
        sf.column_names.push_back("surplus[" + lp.rows[i].name + "]");
        ++next_slack;
        sf.a[i][next_artificial] = 1;
        artificial_names.push_back("artificial[" + lp.rows[i].name + "]");
        sf.initial_basis[i] = next_artificial++;
        break;
      case RowKind::kEqual:
        sf.a[i][next_artificial] = 1;
        artificial_names.push_back("artificial[" + lp.rows[i].name + "]");
        sf.initial_basis[i] = next_artificial++;
        break;
    }
  }
  for (auto& name : artificial_names) sf.column_names.push_back(std::move(name));
  return sf;
}

class Tableau {
 public:
  Tableau(const StandardForm& sf)
      : rows_(sf.a), rhs_(sf.b), basis_(sf.initial_basis), columns_(sf.total_columns) {}

  std::size_t row_count() const { return rows_.size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Rational& rhs(std::size_t r) const { return rhs_[r]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& v : rows_[r]) v *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j < columns_; ++j) {
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
    ++pivots_;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  std::size_t pivots() const { return pivots_; }

  enum class Outcome { kOptimal, kUnbounded };

  // Minimizes cost^T x over columns [0, allowed) with Bland's rule. On
  // kUnbounded, `entering` holds the column with no blocking row.
  Outcome minimize(const std::vector<Rational>& cost, std::size_t allowed,
                   std::size_t& entering) {
    while (true) {
      std::optional<std::size_t> e;
      for (std::size_t j = 0; j < allowed && !e; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
          if (rows_[i][j] != 0) reduced -= cost[basis_[i]] * rows_[i][j];
        }
        if (reduced < 0) e = j;
      }
      if (!e) return Outcome::kOptimal;

      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][*e] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][*e];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) {
        entering = *e;
        return Outcome::kUnbounded;
      }
      pivot(*leave, *e);
    }
  }

  bool is_basic(std::size_t c) const {
    return std::find(basis_.begin(), basis_.end(), c) != basis_.end();
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(columns_);
    for (std::size_t i = 0; i < rows_.size(); ++i) x[basis_[i]] = rhs_[i];
    return x;
  }

 private:
  Matrix rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::size_t columns_;
  std::size_t pivots_ = 0;
};

// Row multipliers y with B^T y = c_B over the tableau's remaining rows, mapped
// back to the source rows; removed rows get zero.
std::vector<Rational> basis_multipliers(const StandardForm& sf, const Tableau& t,
                                        const std::vector<std::size_t>& kept_rows,
                                        const std::vector<Rational>& cost) {
  const std::size_t m = kept_rows.size();
  Matrix bt(m, std::vector<Rational>(m));
  std::vector<Rational> cb(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t col = t.basis()[k];
    for (std::size_t i = 0; i < m; ++i) bt[k][i] = sf.a[kept_rows[i]][col];
    cb[k] = cost[col];
  }
  auto y = solve_square(std::move(bt), std::move(cb));
  if (!y) throw Error("internal: singular final basis");
  std::vector<Rational> out(sf.a.size());
  for (std::size_t i = 0; i < m; ++i) out[kept_rows[i]] = sf.row_sign[kept_rows[i]] * (*y)[i];
  return out;
}

std::vector<std::string> basis_names(const StandardForm& sf, const Tableau& t) {
  std::vector<std::string> names;
  for (auto c : t.basis()) names.push_back(sf.column_names[c]);
  return names;
}

std::string terrace_row_name(const TerraceLabel& tl) { return tl.id; }

}  // namespace

std::string to_string(Sense sense) {
  return sense == Sense::kMinimize ? "minimize" : "maximize";
}

std::string to_string(RowKind kind) {
  switch (kind) {
    case RowKind::kLessEqual: return "<=";
    case RowKind::kGreaterEqual: return ">=";
    case RowKind::kEqual: return "=";
  }
  return "=";
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kUnbounded: return "unbounded";
  }
  return "infeasible";
}

void LinearProgram::validate() const {
  if (objective.size() != variable_keys.size()) {
    throw ValidationError("objective", "length " + std::to_string(objective.size()) +
                                           " does not match " +
                                           std::to_string(variable_keys.size()) +
                                           " variables");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].coefficients.size() != variable_keys.size()) {
      throw ValidationError("rows[" + std::to_string(i) + "]",
                            "coefficient count does not match the variables");
    }
  }
}

std::vector<std::vector<Rational>> LinearProgram::inequality_matrix() const {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    if (row.kind != RowKind::kEqual) out.push_back(row.coefficients);
  }
  return out;
}

std::vector<const Constraint*> LinearProgram::equality_rows() const {
  std::vector<const Constraint*> out;
  for (const auto& row : rows) {
    if (row.kind == RowKind::kEqual) out.push_back(&row);
  }
  return out;
}

SimplexSolution solve(const LinearProgram& lp) {
  lp.validate();
  const StandardForm sf = standardize(lp);
  Tableau t(sf);
  SimplexSolution sol;

  // Phase 1: minimize the sum of artificials.
  std::vector<Rational> phase1(sf.total_columns);
  for (std::size_t j = sf.first_artificial; j < sf.total_columns; ++j) phase1[j] = 1;
  std::size_t entering = 0;
  t.minimize(phase1, sf.total_columns, entering);

  const auto x1 = t.solution();
  Rational infeasibility = 0;
  for (std::size_t j = sf.first_artificial; j < sf.total_columns; ++j) infeasibility += x1[j];

  std::vector<std::size_t> kept_rows(t.row_count());
  for (std::size_t i = 0; i < kept_rows.size(); ++i) kept_rows[i] = i;

  if (infeasibility > 0) {
    sol.status = SolveStatus::kInfeasible;
    sol.multipliers = basis_multipliers(sf, t, kept_rows, phase1);
    sol.basis = basis_names(sf, t);
    sol.pivots = t.pivots();
    return sol;
  }

  // Drive zero-level artificials out of the basis; rows where that is
  // impossible are linear combinations of the others.
  for (std::size_t i = 0; i < t.row_count();) {
    if (t.basis()[i] < sf.first_artificial) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < sf.first_artificial && !col; ++j) {
      if (t.at(i, j) != 0) col = j;
    }
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.drop_row(i);
      kept_rows.erase(kept_rows.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2 always minimizes; a maximization is solved on -c.
  std::vector<Rational> cost(sf.total_columns);
  for (std::size_t j = 0; j < sf.structural; ++j) {
    cost[j] = lp.sense == Sense::kMinimize ? lp.objective[j] : -lp.objective[j];
  }
  const auto outcome = t.minimize(cost, sf.first_artificial, entering);
  const auto x = t.solution();
  sol.point.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(sf.structural));
  sol.basis = basis_names(sf, t);
  sol.pivots = t.pivots();

  if (outcome == Tableau::Outcome::kUnbounded) {
    sol.status = SolveStatus::kUnbounded;
    std::vector<Rational> direction(sf.total_columns);
    direction[entering] = 1;
    for (std::size_t i = 0; i < t.row_count(); ++i) direction[t.basis()[i]] = -t.at(i, entering);
    sol.ray.assign(direction.begin(), direction.begin() + static_cast<std::ptrdiff_t>(sf.structural));
    return sol;
  }

  sol.status = SolveStatus::kOptimal;
  sol.value = dot(lp.objective, sol.point);
  sol.multipliers = basis_multipliers(sf, t, kept_rows, cost);
  if (lp.sense == Sense::kMaximize) {
    for (auto& y : sol.multipliers) y = -y;
  }
  return sol;
}

bool is_feasible(const LinearProgram& lp, const std::vector<Rational>& point) {
  if (point.size() != lp.variable_count()) return false;
  for (const auto& v : point) {
    if (v < 0) return false;
  }
  for (const auto& row : lp.rows) {
    const Rational lhs = dot(row.coefficients, point);
    switch (row.kind) {
      case RowKind::kLessEqual:
        if (lhs > row.rhs) return false;
        break;
      case RowKind::kGreaterEqual:
        if (lhs < row.rhs) return false;
        break;
      case RowKind::kEqual:
        if (lhs != row.rhs) return false;
        break;
    }
  }
  return true;
}

bool verify_optimality(const LinearProgram& lp, const SimplexSolution& sol) {
  if (sol.status != SolveStatus::kOptimal) return false;
  if (!is_feasible(lp, sol.point)) return false;
  if (sol.multipliers.size() != lp.rows.size()) return false;
  if (dot(lp.objective, sol.point) != sol.value) return false;

  // Minimize: y >= 0 on >= rows, y <= 0 on <= rows, c - A^T y >= 0.
  // Maximize: all signs reversed.
  const int s = lp.sense == Sense::kMinimize ? 1 : -1;
  Rational yb = 0;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const Rational& y = sol.multipliers[i];
    if (lp.rows[i].kind == RowKind::kGreaterEqual && s * y < 0) return false;
    if (lp.rows[i].kind == RowKind::kLessEqual && s * y > 0) return false;
    yb += y * lp.rows[i].rhs;
  }
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    Rational reduced = lp.objective[j];
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
      reduced -= sol.multipliers[i] * lp.rows[i].coefficients[j];
    }
    if (s * reduced < 0) return false;
  }
  return yb == sol.value;
}

bool verify_infeasibility(const LinearProgram& lp, const std::vector<Rational>& farkas) {
  if (farkas.size() != lp.rows.size()) return false;
  // For any x >= 0 meeting the rows, y^T A x >= y^T b > 0 while y^T A <= 0
  // forces y^T A x <= 0.
  Rational yb = 0;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (lp.rows[i].kind == RowKind::kLessEqual && farkas[i] > 0) return false;
    if (lp.rows[i].kind == RowKind::kGreaterEqual && farkas[i] < 0) return false;
    yb += farkas[i] * lp.rows[i].rhs;
  }
  if (yb <= 0) return false;
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    Rational ya = 0;
    for (std::size_t i = 0; i < lp.rows.size(); ++i) ya += farkas[i] * lp.rows[i].coefficients[j];
    if (ya > 0) return false;
  }
  return true;
}

bool verify_unboundedness(const LinearProgram& lp, const SimplexSolution& sol) {
  if (sol.status != SolveStatus::kUnbounded) return false;
  if (!is_feasible(lp, sol.point) || sol.ray.size() != lp.variable_count()) return false;
  for (const auto& d : sol.ray) {
    if (d < 0) return false;
  }
  for (const auto& row : lp.rows) {
    const Rational ad = dot(row.coefficients, sol.ray);
    if (row.kind == RowKind::kLessEqual && ad > 0) return false;
    if (row.kind == RowKind::kGreaterEqual && ad < 0) return false;
    if (row.kind == RowKind::kEqual && ad != 0) return false;
  }
  const Rational slope = dot(lp.objective, sol.ray);
  return lp.sense == Sense::kMinimize ? slope < 0 : slope > 0;
}

LinearProgram build_primal(const QuotientStructure& q, const LabelCoefficients& p_breve,
                           const TerraceCoefficients& b_target) {
  LinearProgram lp;
  lp.sense = Sense::kMinimize;
  for (const auto& label : q.labels()) {
    auto it = p_breve.find(label.id);
    if (it == p_breve.end()) {
      throw ValidationError("p_breve[" + label.id + "]", "missing coefficient");
    }
    lp.variable_keys.push_back("b[" + label.id + "]");
    lp.objective.push_back(it->second);
  }
  for (const auto& tl : q.terrace_labels()) {
    auto it = b_target.find(tl.id);
    if (it == b_target.end()) {
      throw ValidationError("b_target[" + tl.id + "]", "missing coefficient");
    }
    Constraint row{terrace_row_name(tl), {}, RowKind::kGreaterEqual, it->second};
    for (std::size_t x = 0; x < q.labels().size(); ++x) {
      row.coefficients.push_back(contains_label(tl.members, x) ? 1 : 0);
    }
    lp.rows.push_back(std::move(row));
  }
  lp.rows.push_back({"normalization", std::vector<Rational>(q.labels().size(), 1),
                     RowKind::kEqual, 1});
  return lp;
}

LinearProgram build_dual(const QuotientStructure& q, const TerraceCoefficients& b_target,
                         const LabelCoefficients& p_breve) {
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  for (const auto& tl : q.terrace_labels()) {
    auto it = b_target.find(tl.id);
    if (it == b_target.end()) {
      throw ValidationError("b_target[" + tl.id + "]", "missing coefficient");
    }
    lp.variable_keys.push_back("p[" + tl.id + "]");
    lp.objective.push_back(it->second);
  }
  for (std::size_t x = 0; x < q.labels().size(); ++x) {
    const auto& label = q.labels()[x];
    auto it = p_breve.find(label.id);
    if (it == p_breve.end()) {
      throw ValidationError("p_breve[" + label.id + "]", "missing coefficient");
    }
    Constraint row{label.id, {}, RowKind::kLessEqual, it->second};
    for (const auto& tl : q.terrace_labels()) {
      row.coefficients.push_back(contains_label(tl.members, x) ? 1 : 0);
    }
    lp.rows.push_back(std::move(row));
  }
  lp.rows.push_back({"normalization", std::vector<Rational>(q.terrace_labels().size(), 1),
                     RowKind::kEqual, 1});
  return lp;
}

LabelCoefficients derived_p_breve(const QuotientStructure& q, const ProbabilityDist& p) {
  LabelCoefficients out;
  for (std::size_t x = 0; x < q.labels().size(); ++x) {
    out[q.labels()[x].id] = probability_of_label(x, q, p);
  }
  return out;
}

TerraceCoefficients derived_b_target(const QuotientStructure& q, const BelievabilityDist& b) {
  TerraceCoefficients out;
  for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
    out[q.terrace_labels()[t].id] = believability_of_terrace(t, q, b);
  }
  return out;
}

LinearProgram lagrangian_dual(const LinearProgram& lp) {
  lp.validate();
  const bool minimize = lp.sense == Sense::kMinimize;
  LinearProgram dual;
  dual.sense = minimize ? Sense::kMaximize : Sense::kMinimize;

  // Each multiplier y_i becomes one or two nonnegative columns with a sign.
  struct Part {
    std::size_t row;
    int sign;
  };
  std::vector<Part> parts;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const auto kind = lp.rows[i].kind;
    const auto& name = lp.rows[i].name;
    // Minimize: y >= 0 on >=, y <= 0 on <=. Maximize: reversed.
    const bool nonneg = minimize ? kind == RowKind::kGreaterEqual : kind == RowKind::kLessEqual;
    if (kind == RowKind::kEqual) {
      parts.push_back({i, 1});
      dual.variable_keys.push_back("y[" + name + "]+");
      parts.push_back({i, -1});
      dual.variable_keys.push_back("y[" + name + "]-");
    } else if (nonneg) {
      parts.push_back({i, 1});
      dual.variable_keys.push_back("y[" + name + "]");
    } else {
      parts.push_back({i, -1});
      dual.variable_keys.push_back("-y[" + name + "]");
    }
  }
  for (const auto& part : parts) dual.objective.push_back(part.sign * lp.rows[part.row].rhs);
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    Constraint row{lp.variable_keys[j], {},
                   minimize ? RowKind::kLessEqual : RowKind::kGreaterEqual, lp.objective[j]};
    for (const auto& part : parts) {
      row.coefficients.push_back(part.sign * lp.rows[part.row].coefficients[j]);
    }
    dual.rows.push_back(std::move(row));
  }
  return dual;
}

DualityReport duality_check(const SimplexSolution& primal, const SimplexSolution& dual,
                            const std::optional<Rational>& phi) {
  DualityReport report;
  if (primal.status != SolveStatus::kOptimal || dual.status != SolveStatus::kOptimal) {
    report.note = "no gap defined: primal " + to_string(primal.status) + ", dual " +
                  to_string(dual.status);
    return report;
  }
  report.defined = true;
  report.primal_value = primal.value;
  report.dual_value = dual.value;
  report.gap = primal.value - dual.value;
  if (phi) report.matches_certainty = primal.value == *phi && dual.value == *phi;
  report.note = report.gap == 0 ? "zero gap" : "positive gap";
  return report;
}

}  // namespace coevent
