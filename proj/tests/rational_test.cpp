// Copyright 2026 The Gameforge Authors
//
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

#include "gameforge/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace gameforge {
namespace {

TEST(RationalTest, ParsesIntegers) {
  EXPECT_EQ(parse_rational("0"), Rational(0));
  EXPECT_EQ(parse_rational("42"), Rational(42));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational(BigInt("123456789012345678901234567890")));
}

TEST(RationalTest, ParsesFractions) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("22/7"), Rational(22, 7));
  EXPECT_EQ(parse_rational("-3/9"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("4/8"), Rational(1, 2));
}

TEST(RationalTest, ParsesDecimalsExactly) {
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("2.50"), Rational(5, 2));
  EXPECT_EQ(parse_rational("2.2"), Rational(11, 5));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("3.14159"), Rational(314159, 100000));
  EXPECT_EQ(parse_rational("-0.001"), Rational(-1, 1000));
}

TEST(RationalTest, RejectsMalformedLiterals) {
  const std::vector<std::string> bad = {
      "",     " 1",  "1 ",  "+1",  "1/0",  "1/-2", "--3",  "1.",
      ".5",   "1..2", "1/2/3", "a", "1e5", "0x10", "1/",   "/2",
      "1. 5", "2,5",  "1 / 2", "-",  "-.5", "1.-5"};
  for (const std::string& text : bad) {
    EXPECT_FALSE(is_rational_literal(text)) << text;
    EXPECT_THROW(parse_rational(text), std::invalid_argument) << text;
  }
}

TEST(RationalTest, AcceptsWellFormedLiterals) {
  const std::vector<std::string> good = {"0",    "-0",     "7",   "1/2",
                                         "-3/9", "10/3",   "0.5", "-12.75",
                                         "100",  "341/113"};
  for (const std::string& text : good) {
    EXPECT_TRUE(is_rational_literal(text)) << text;
  }
}

TEST(RationalTest, FormatsInLowestTermsWithoutDenominatorOne) {
  EXPECT_EQ(format_rational(Rational(1, 2)), "1/2");
  EXPECT_EQ(format_rational(Rational(2, 4)), "1/2");
  EXPECT_EQ(format_rational(Rational(5, 1)), "5");
  EXPECT_EQ(format_rational(Rational(-2, 4)), "-1/2");
  EXPECT_EQ(format_rational(Rational(4) / Rational(-8)), "-1/2");
  EXPECT_EQ(format_rational(Rational(0)), "0");
  EXPECT_EQ(format_rational(Rational(11, 5)), "11/5");
}

TEST(RationalTest, FormatParseRoundTrip) {
  const std::vector<Rational> values = {
      Rational(0),       Rational(1),        Rational(-1),
      Rational(11, 5),   Rational(-341, 113), Rational(7, 3),
      Rational(BigInt("123456789123456789"), BigInt("987654321987654321"))};
  for (const Rational& value : values) {
    EXPECT_EQ(parse_rational(format_rational(value)), value);
  }
  const std::vector<std::string> texts = {"0", "-17", "1/2", "-341/113",
                                          "11/5"};
  for (const std::string& text : texts) {
    EXPECT_EQ(format_rational(parse_rational(text)), text);
  }
}

TEST(RationalTest, ExactArithmeticHasNoDrift) {
  // 1/3 accumulated three hundred times is exactly 100.
  Rational sum = 0;
  for (int i = 0; i < 300; ++i) sum += Rational(1, 3);
  EXPECT_EQ(sum, Rational(100));
}

}  // namespace
}  // namespace gameforge
