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

// The student-delicacies linear programs over a quotient structure, and a
// small dense exact simplex solver for them.
//
// Primal: choose a believability b_x over labels minimizing sum_x b_x p^_x
//   subject to sum_{x in X} b_x >= b(X) for every terrace-label X,
//   sum_x b_x = 1, b_x >= 0.
// Dual:   choose a probability p(X) over terrace-labels maximizing
//   sum_X b(X) p(X) subject to sum_{X contains x} p(X) <= p^_x for every
//   label x, sum_X p(X) = 1, p(X) >= 0.
//
// The two share the incidence matrix A (rows X, columns x) and its transpose.
// Weak duality holds between them: for feasible b and p,
//   b(.)^T p <= (A b)^T p = b^T (A^T p) <= b^T p^.
// Equality of optima is guaranteed when (b(X), p^_x) are induced by actual
// measures (b(X) = B(<Ter_X|), p^_x = P(|x>)), in which case both optima equal
// Phi(R). For arbitrary data the exact Lagrangian dual (lagrangian_dual) is the
// problem with a zero gap.

#ifndef COEVENT_LP_DUALITY_HPP_
#define COEVENT_LP_DUALITY_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coevent/labelled_universe.hpp"
#include "coevent/measures.hpp"
#include "coevent/rational.hpp"

namespace coevent {

enum class Sense { kMinimize, kMaximize };
enum class RowKind { kLessEqual, kGreaterEqual, kEqual };

std::string to_string(Sense sense);
std::string to_string(RowKind kind);

struct Constraint {
  std::string name;
  std::vector<Rational> coefficients;
  RowKind kind = RowKind::kLessEqual;
  Rational rhs;
};

// All variables are nonnegative.
struct LinearProgram {
  Sense sense = Sense::kMinimize;
  std::vector<std::string> variable_keys;
  std::vector<Rational> objective;
  std::vector<Constraint> rows;

  std::size_t variable_count() const { return variable_keys.size(); }
  // Throws ValidationError on inconsistent dimensions.
  void validate() const;
  // The inequality rows' coefficient matrix, in row order.
  std::vector<std::vector<Rational>> inequality_matrix() const;
  std::vector<const Constraint*> equality_rows() const;
};

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };

std::string to_string(SolveStatus status);

struct SimplexSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  Rational value;                 // optimal objective (optimal status only)
  std::vector<Rational> point;    // optimal vertex, or feasible base of the ray
  // Optimal: row multipliers y with y^T b = value and the sign/reduced-cost
  // conditions of the LP dual. Infeasible: Farkas multipliers proving that no
  // nonnegative point satisfies the rows.
  std::vector<Rational> multipliers;
  std::vector<Rational> ray;      // unbounded: improving direction
  std::vector<std::string> basis;  // names of the basic columns at termination
  std::size_t pivots = 0;
};

// Two-phase dense simplex over exact rationals with Bland's rule.
SimplexSolution solve(const LinearProgram& lp);

// Independent checks of the certificates carried by a solution.
bool is_feasible(const LinearProgram& lp, const std::vector<Rational>& point);
bool verify_optimality(const LinearProgram& lp, const SimplexSolution& sol);
bool verify_infeasibility(const LinearProgram& lp, const std::vector<Rational>& farkas);
bool verify_unboundedness(const LinearProgram& lp, const SimplexSolution& sol);

using LabelCoefficients = std::map<std::string, Rational>;    // keyed by label id
using TerraceCoefficients = std::map<std::string, Rational>;  // keyed by terrace-label id

// Throws ValidationError naming a missing coefficient.
LinearProgram build_primal(const QuotientStructure& q, const LabelCoefficients& p_breve,
                           const TerraceCoefficients& b_target);
LinearProgram build_dual(const QuotientStructure& q, const TerraceCoefficients& b_target,
                         const LabelCoefficients& p_breve);

// p^_x = P(|x>) and b(X) = B(<Ter_X|) from a pair of measures.
LabelCoefficients derived_p_breve(const QuotientStructure& q, const ProbabilityDist& p);
TerraceCoefficients derived_b_target(const QuotientStructure& q, const BelievabilityDist& b);

// The exact LP dual of `lp`, with free and nonpositive multipliers split into
// nonnegative parts. Strong duality holds between the two whenever both are
// feasible.
LinearProgram lagrangian_dual(const LinearProgram& lp);

struct DualityReport {
  bool defined = false;  // both sides optimal
  Rational primal_value;
  Rational dual_value;
  Rational gap;  // primal - dual
  std::optional<bool> matches_certainty;
  std::string note;
};

// The gap between a minimization and a maximization solution. When `phi` is
// given, also records whether both optima equal it.
DualityReport duality_check(const SimplexSolution& primal, const SimplexSolution& dual,
                            const std::optional<Rational>& phi = std::nullopt);

}  // namespace coevent

#endif  // COEVENT_LP_DUALITY_HPP_
