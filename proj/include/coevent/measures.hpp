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

// Believability B on bra-classes, probability P on terraces, and their product
// certainty Phi = B x P. All arithmetic is exact.

#ifndef COEVENT_MEASURES_HPP_
#define COEVENT_MEASURES_HPP_

#include <string>
#include <vector>

#include "coevent/labelled_universe.hpp"
#include "coevent/rational.hpp"

namespace coevent {

// b_x per label, indexed like QuotientStructure::labels(). The distribution
// types only check shape; check_axioms() reports on sign and normalization.
class BelievabilityDist {
 public:
  BelievabilityDist(const QuotientStructure& q, std::vector<Rational> mass);

  // b_x = sum of the bra-point masses in <x|.
  static BelievabilityDist from_points(const QuotientStructure& q,
                                       const ExtensionalCoEvent& ext);

  const std::vector<Rational>& mass() const { return mass_; }
  const Rational& at(std::size_t label) const { return mass_.at(label); }
  Rational total() const;

 private:
  std::vector<Rational> mass_;
};

// p(X) per terrace-label, plus the mass of the empty terrace.
class ProbabilityDist {
 public:
  ProbabilityDist(const QuotientStructure& q, std::vector<Rational> mass,
                  Rational empty_terrace_mass = 0);

  static ProbabilityDist from_points(const QuotientStructure& q,
                                     const ExtensionalCoEvent& ext);

  const std::vector<Rational>& mass() const { return mass_; }
  const Rational& at(std::size_t terrace_label) const { return mass_.at(terrace_label); }
  const Rational& empty_terrace_mass() const { return empty_terrace_mass_; }
  Rational total() const;

 private:
  std::vector<Rational> mass_;
  Rational empty_terrace_mass_;
};

// B(<event|>) for a set of labels.
Rational believability(LabelMask event, const QuotientStructure& q,
                       const BelievabilityDist& b);

// p_x = sum of p(X) over X containing x. Zero for the Omega-empty label.
Rational probability_of_label(std::size_t label, const QuotientStructure& q,
                              const ProbabilityDist& p);

// b(X) = sum of b_x over x in X.
Rational believability_of_terrace(std::size_t terrace_label, const QuotientStructure& q,
                                  const BelievabilityDist& b);

// P(|ket_event>) for a ket-point set. Throws UnrepresentableEventError unless
// the set is a union of terraces (the empty terrace counts as one).
Rational probability(const IndexSet& ket_event, const QuotientStructure& q,
                     const ProbabilityDist& p);

// Phi(<bra_event|ket_event>) = B(bra_event) * P(ket_event).
Rational certainty(LabelMask bra_event, const IndexSet& ket_event,
                   const QuotientStructure& q, const BelievabilityDist& b,
                   const ProbabilityDist& p);

// Point-resolution certainty: B and P read straight from the point masses, so
// any pair of point subsets is measurable.
Rational certainty(const IndexSet& bra_points, const IndexSet& ket_points,
                   const ExtensionalCoEvent& ext);

struct CertaintyReport {
  // cell[x][X] = b_x * p(X) for every label and terrace-label.
  std::vector<std::vector<Rational>> cell;
  std::vector<Rational> p_of_label;    // p_x
  std::vector<Rational> b_of_terrace;  // b(X)
  Rational phi_by_labels;    // sum_x b_x p_x
  Rational phi_by_terraces;  // sum_X b(X) p(X)
  Rational phi_by_cells;     // sum of cell[x][X] over incidence-true cells

  bool consistent() const {
    return phi_by_labels == phi_by_terraces && phi_by_labels == phi_by_cells;
  }
};

// Phi(R) by both iterated summation orders and by the direct cell sum.
// Throws InconsistentInputError when b or p is sized for another structure.
CertaintyReport certainty_of_coevent(const QuotientStructure& q,
                                     const BelievabilityDist& b,
                                     const ProbabilityDist& p);

enum class CheckStatus { kPass, kFail, kVacuous };

std::string to_string(CheckStatus status);

struct AxiomCheck {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string witness;  // set on failure
};

struct ComplianceReport {
  std::vector<AxiomCheck> checks;

  bool all_pass() const;
  const AxiomCheck& find(const std::string& name) const;
};

// Finite-case Kolmogorov checks for B and P, plus normalization and
// additivity of the product certainty. Continuity entries are vacuous.
ComplianceReport check_axioms(const QuotientStructure& q, const BelievabilityDist& b,
                              const ProbabilityDist& p);

}  // namespace coevent

#endif  // COEVENT_MEASURES_HPP_
