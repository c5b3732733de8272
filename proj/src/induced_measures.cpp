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

#include "coevent/induced_measures.hpp"

#include "coevent/errors.hpp"

namespace coevent {

std::string to_string(InducedSide side) {
  return side == InducedSide::kProbabilityOnBra ? "P-prime-on-bra" : "B-prime-on-ket";
}

InducedValuation induce_probability_on_bra(const QuotientStructure& q,
                                           const ProbabilityDist& p) {
  InducedValuation v;
  v.side = InducedSide::kProbabilityOnBra;
  for (std::size_t x = 0; x < q.labels().size(); ++x) {
    v.on_labels.push_back(probability_of_label(x, q, p));
  }
  v.on_terrace_labels = p.mass();
  return v;
}

InducedValuation induce_believability_on_ket(const QuotientStructure& q,
                                             const BelievabilityDist& b) {
  InducedValuation v;
  v.side = InducedSide::kBelievabilityOnKet;
  v.on_labels = b.mass();
  for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
    v.on_terrace_labels.push_back(believability_of_terrace(t, q, b));
  }
  return v;
}

std::vector<NonAdditivityWitness> nonadditivity_witnesses(const InducedValuation& v,
                                                          const QuotientStructure& q) {
  if (v.on_labels.size() != q.labels().size() ||
      v.on_terrace_labels.size() != q.terrace_labels().size()) {
    throw InconsistentInputError("induced valuation does not match the quotient structure");
  }
  std::vector<NonAdditivityWitness> out;
  if (v.side == InducedSide::kProbabilityOnBra) {
    for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
      Rational parts = 0;
      for (auto x : mask_indices(q.terrace_labels()[t].members)) parts += v.on_labels[x];
      if (parts != v.on_terrace_labels[t]) {
        out.push_back({t, q.terrace_labels()[t].id, v.on_terrace_labels[t], parts});
      }
    }
  } else {
    for (std::size_t x = 0; x < q.labels().size(); ++x) {
      Rational parts = 0;
      for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
        if (q.incidence(x, t)) parts += v.on_terrace_labels[t];
      }
      if (parts != v.on_labels[x]) {
        out.push_back({x, q.labels()[x].id, v.on_labels[x], parts});
      }
    }
  }
  return out;
}

}  // namespace coevent
