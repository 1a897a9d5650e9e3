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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gameforge {

// Arbitrary-precision rational number.  Values are kept canonical by the
// backing type: lowest terms, positive denominator, sign on the numerator.
// Every payoff computation in this library is exact; nothing ever rounds.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Powers of ten as exact big integers, for decimal literals.
inline BigInt pow10(std::size_t k) {
  BigInt result = 1;
  for (std::size_t i = 0; i < k; ++i) result *= 10;
  return result;
}

}  // namespace detail

// Accepted literals:
//   integers      "-3", "0", "42"
//   fractions     "11/5", "-2/3"   (denominator unsigned, no leading zero)
//   decimals      "2.2", "-0.25"   (converted exactly, never rounded)
// Anything else is rejected.
inline bool is_rational_literal(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  std::size_t digits = 0;
  while (pos < text.size() && detail::is_digit(text[pos])) {
    ++pos;
    ++digits;
  }
  if (digits == 0) return false;
  if (pos == text.size()) return true;
  if (text[pos] == '/') {
    ++pos;
    if (pos >= text.size() || text[pos] < '1' || text[pos] > '9') return false;
    ++pos;
    while (pos < text.size() && detail::is_digit(text[pos])) ++pos;
    return pos == text.size();
  }
  if (text[pos] == '.') {
    ++pos;
    std::size_t frac = 0;
    while (pos < text.size() && detail::is_digit(text[pos])) {
      ++pos;
      ++frac;
    }
    return frac > 0 && pos == text.size();
  }
  return false;
}

// Parses a rational literal.  Throws std::invalid_argument on anything the
// grammar above does not accept (including "1/0", "1/02", ".5", "2.", "+3",
// exponents, and embedded whitespace).
inline Rational parse_rational(std::string_view text) {
  if (!is_rational_literal(text)) {
    throw std::invalid_argument("malformed rational literal: \"" +
                                std::string(text) + "\"");
  }
  const bool negative = !text.empty() && text.front() == '-';
  std::string_view body = negative ? text.substr(1) : text;

  std::size_t slash = body.find('/');
  std::size_t dot = body.find('.');
  Rational value;
  if (slash != std::string_view::npos) {
    BigInt num(std::string(body.substr(0, slash)));
    BigInt den(std::string(body.substr(slash + 1)));
    value = Rational(num, den);
  } else if (dot != std::string_view::npos) {
    BigInt whole(std::string(body.substr(0, dot)));
    std::string_view frac = body.substr(dot + 1);
    BigInt scale = detail::pow10(frac.size());
    value = Rational(whole * scale + BigInt(std::string(frac)), scale);
  } else {
    value = Rational(BigInt(std::string(body)));
  }
  if (negative) value = -value;
  return value;
}

// Canonical text form: lowest terms, "n/d" with positive d, or just "n"
// when the value is an integer.  parse_rational(format_rational(x)) == x.
inline std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

}  // namespace gameforge
