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

#include "coevent/variables.hpp"

#include "coevent/errors.hpp"

namespace coevent {

namespace {
constexpr const char* kEmptyTerraceKey = "empty";
}

std::string to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::kBraClasses: return "bra-classes";
    case DomainKind::kKetTerraces: return "ket-terraces";
    case DomainKind::kCells: return "cells";
  }
  return "cells";
}

const VariableClass& PiecewiseVariable::at(const std::string& key) const {
  for (const auto& c : classes) {
    if (c.key == key) return c;
  }
  throw UnknownIdError("variable has no class '" + key + "'");
}

bool Threshold::above(const Rational& value) const {
  switch (kind_) {
    case Kind::kNegInf: return false;
    case Kind::kPosInf: return true;
    case Kind::kFinite: return value < value_;
  }
  return false;
}

PiecewiseVariable experienced_variable_of_probabilities(const QuotientStructure& q,
                                                        const BelievabilityDist& b,
                                                        const ProbabilityDist& p) {
  PiecewiseVariable v{DomainKind::kBraClasses, {}};
  for (std::size_t x = 0; x < q.labels().size(); ++x) {
    v.classes.push_back({q.labels()[x].id, probability_of_label(x, q, p), b.at(x)});
  }
  return v;
}

PiecewiseVariable random_variable_of_believabilities(const QuotientStructure& q,
                                                     const BelievabilityDist& b,
                                                     const ProbabilityDist& p) {
  PiecewiseVariable v{DomainKind::kKetTerraces, {}};
  for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
    v.classes.push_back(
        {q.terrace_labels()[t].id, believability_of_terrace(t, q, b), p.at(t)});
  }
  if (q.has_empty_terrace()) {
    v.classes.push_back({kEmptyTerraceKey, 0, p.empty_terrace_mass()});
  }
  return v;
}

PiecewiseVariable certainty_variable(const QuotientStructure& q,
                                     const BelievabilityDist& b,
                                     const ProbabilityDist& p) {
  PiecewiseVariable v{DomainKind::kCells, {}};
  for (std::size_t x = 0; x < q.labels().size(); ++x) {
    const auto& label = q.labels()[x];
    for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
      const Rational phi = b.at(x) * p.at(t);
      v.classes.push_back({label.id + "|" + q.terrace_labels()[t].id, phi, phi});
    }
    if (q.has_empty_terrace()) {
      const Rational phi = b.at(x) * p.empty_terrace_mass();
      v.classes.push_back({label.id + "|" + kEmptyTerraceKey, phi, phi});
    }
  }
  return v;
}

Rational distribution_function(const PiecewiseVariable& v, const Threshold& r) {
  Rational total = 0;
  for (const auto& c : v.classes) {
    if (r.above(c.value)) total += c.mass;
  }
  return total;
}

Rational mean_value(const PiecewiseVariable& v) {
  Rational total = 0;
  for (const auto& c : v.classes) total += c.mass * c.value;
  return total;
}

}  // namespace coevent
