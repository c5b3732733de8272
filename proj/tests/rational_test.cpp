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

#include "coevent/rational.hpp"

#include <random>

#include <gtest/gtest.h>

namespace coevent {
namespace {

TEST(ParseRational, Decimals) {
  EXPECT_EQ(*parse_rational("0.6"), Rational(3, 5));
  EXPECT_EQ(*parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(*parse_rational("0.08"), Rational(2, 25));
  EXPECT_EQ(*parse_rational("1.0"), Rational(1));
  EXPECT_EQ(*parse_rational("007"), Rational(7));
  EXPECT_EQ(*parse_rational("0"), Rational(0));
  EXPECT_EQ(*parse_rational("-0.125"), Rational(-1, 8));
  EXPECT_EQ(*parse_rational("+2"), Rational(2));
}

TEST(ParseRational, Fractions) {
  EXPECT_EQ(*parse_rational("3/5"), Rational(3, 5));
  EXPECT_EQ(*parse_rational("6/10"), Rational(3, 5));
  EXPECT_EQ(*parse_rational("1.5/2"), Rational(3, 4));
  EXPECT_EQ(*parse_rational("-1/3"), Rational(-1, 3));
}

TEST(ParseRational, RejectsMalformed) {
  for (const char* bad : {"", ".", "1.", ".5", "0.4.1", "1/0", "a", "1e3", " 1", "1 ", "1/",
                          "/2", "--1", "0x10", "1/2/3"}) {
    EXPECT_FALSE(parse_rational(bad).has_value()) << bad;
  }
}

TEST(RationalText, FractionAndDecimal) {
  EXPECT_EQ(to_fraction_string(Rational(31, 50)), "31/50");
  EXPECT_EQ(to_fraction_string(Rational(2)), "2");
  EXPECT_EQ(to_fraction_string(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(to_exact_decimal(Rational(31, 50)), "0.62");
  EXPECT_EQ(to_exact_decimal(Rational(-1, 8)), "-0.125");
  EXPECT_EQ(to_exact_decimal(Rational(5)), "5");
  EXPECT_FALSE(to_exact_decimal(Rational(1, 3)).has_value());
  EXPECT_FALSE(to_exact_decimal(Rational(1, 6)).has_value());
  EXPECT_EQ(to_display_string(Rational(31, 50)), "31/50 (0.62)");
  EXPECT_EQ(to_display_string(Rational(1)), "1");
  EXPECT_EQ(to_display_string(Rational(1, 3)), "1/3");
  EXPECT_DOUBLE_EQ(to_double(Rational(31, 50)), 0.62);
}

// Both text forms parse back to the value they render.
TEST(RationalText, RoundTripProperty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-10000, 10000);
  std::uniform_int_distribution<int> exp2(0, 12), exp5(0, 8), other(1, 9);
  for (int i = 0; i < 2000; ++i) {
    long long den = (1LL << exp2(rng));
    for (int e = exp5(rng); e > 0; --e) den *= 5;
    if (i % 3 == 0) den *= other(rng);
    const Rational r(num(rng), den);
    EXPECT_EQ(*parse_rational(to_fraction_string(r)), r);
    if (auto d = to_exact_decimal(r)) EXPECT_EQ(*parse_rational(*d), r);
    else EXPECT_EQ(i % 3, 0);  // only those denominators carry other primes
  }
}

}  // namespace
}  // namespace coevent
