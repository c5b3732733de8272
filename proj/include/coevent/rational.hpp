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

// Exact rational numbers and their text forms.

#ifndef COEVENT_RATIONAL_HPP_
#define COEVENT_RATIONAL_HPP_

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace coevent {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "3", "-0.25", "3/5" or "1.5/2" style literals. Returns nullopt on
// malformed input or a zero denominator. No exponents, no whitespace.
std::optional<Rational> parse_rational(std::string_view text);

// "31/50", "-2", "0".
std::string to_fraction_string(const Rational& value);

// Exact decimal expansion when the reduced denominator has no prime factors
// other than 2 and 5 ("0.62", "1", "-0.125"); nullopt otherwise.
std::optional<std::string> to_exact_decimal(const Rational& value);

// "31/50 (0.62)" when a terminating decimal exists and differs from the
// fraction text, otherwise just the fraction.
std::string to_display_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace coevent

#endif  // COEVENT_RATIONAL_HPP_
