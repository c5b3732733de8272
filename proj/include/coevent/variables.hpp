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

// Experienced, random and experienced-random variables: functions that are
// constant on bra-classes, on ket-terraces, or on bra-ket cells. They are
// stored class-wise, which makes every sublevel set a union of classes.

#ifndef COEVENT_VARIABLES_HPP_
#define COEVENT_VARIABLES_HPP_

#include <string>
#include <vector>

#include "coevent/labelled_universe.hpp"
#include "coevent/measures.hpp"

namespace coevent {

enum class DomainKind { kBraClasses, kKetTerraces, kCells };

std::string to_string(DomainKind kind);

struct VariableClass {
  std::string key;  // "x1", "X2", "x1|X2"; "empty" for the empty terrace
  Rational value;
  Rational mass;  // B, P or B x P of the class
};

struct PiecewiseVariable {
  DomainKind domain = DomainKind::kBraClasses;
  std::vector<VariableClass> classes;

  const VariableClass& at(const std::string& key) const;
};

// Extended-real threshold for distribution functions.
class Threshold {
 public:
  static Threshold negative_infinity() { return Threshold(Kind::kNegInf, 0); }
  static Threshold positive_infinity() { return Threshold(Kind::kPosInf, 0); }
  static Threshold finite(Rational r) { return Threshold(Kind::kFinite, std::move(r)); }

  // True when value < threshold.
  bool above(const Rational& value) const;

 private:
  enum class Kind { kNegInf, kFinite, kPosInf };
  Threshold(Kind kind, Rational value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  Rational value_;
};

// p_x on every bra-class <x|.
PiecewiseVariable experienced_variable_of_probabilities(const QuotientStructure& q,
                                                        const BelievabilityDist& b,
                                                        const ProbabilityDist& p);

// b(X) on every terrace ter(X); the empty terrace, if any, carries 0.
PiecewiseVariable random_variable_of_believabilities(const QuotientStructure& q,
                                                     const BelievabilityDist& b,
                                                     const ProbabilityDist& p);

// b_x p(X) on every cell <x|ter(X)>, including the empty-terrace column.
PiecewiseVariable certainty_variable(const QuotientStructure& q,
                                     const BelievabilityDist& b,
                                     const ProbabilityDist& p);

// F(r) = mass of the classes whose value is strictly below r.
Rational distribution_function(const PiecewiseVariable& v, const Threshold& r);

// Sum of mass * value over the classes.
Rational mean_value(const PiecewiseVariable& v);

}  // namespace coevent

#endif  // COEVENT_VARIABLES_HPP_
