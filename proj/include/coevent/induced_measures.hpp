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

// Set functions pulled across the co~event: P' values bra-events with the
// probability of their dual ket-events, B' values ket-events with the
// believability of their dual bra-events. Neither is additive in general.
//
// Values are keyed by role (label vs terrace-label), not by the underlying
// point set. For a singleton X = {x} the bra-sets <Ter_X| and <x| coincide
// while P' assigns p(X) and p_x respectively, so a set-keyed function would
// be ill-defined.

#ifndef COEVENT_INDUCED_MEASURES_HPP_
#define COEVENT_INDUCED_MEASURES_HPP_

#include <string>
#include <vector>

#include "coevent/labelled_universe.hpp"
#include "coevent/measures.hpp"

namespace coevent {

enum class InducedSide { kProbabilityOnBra, kBelievabilityOnKet };

std::string to_string(InducedSide side);

struct InducedValuation {
  InducedSide side = InducedSide::kProbabilityOnBra;
  std::vector<Rational> on_labels;          // P'(<x|) = p_x  or  B'(|x>) = b_x
  std::vector<Rational> on_terrace_labels;  // P'(<Ter_X|) = p(X)  or  B'(|ter X>) = b(X)
};

InducedValuation induce_probability_on_bra(const QuotientStructure& q,
                                           const ProbabilityDist& p);

InducedValuation induce_believability_on_ket(const QuotientStructure& q,
                                             const BelievabilityDist& b);

// A disjoint decomposition the induced valuation fails to respect.
//   P' side: key is a terrace-label X, whole = P'(<Ter_X|), parts = sum of
//            P'(<x|) over x in X.
//   B' side: key is a label x, whole = B'(|x>), parts = sum of B'(|ter X>)
//            over X containing x.
struct NonAdditivityWitness {
  std::size_t index = 0;
  std::string key;
  Rational whole;
  Rational parts;
};

std::vector<NonAdditivityWitness> nonadditivity_witnesses(const InducedValuation& v,
                                                          const QuotientStructure& q);

}  // namespace coevent

#endif  // COEVENT_INDUCED_MEASURES_HPP_
