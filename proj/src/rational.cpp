// Copyright 2026 The wvg Authors
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

#include "wvg/rational.hpp"

#include <stdexcept>

namespace wvg {

namespace {

BigInt pow10(unsigned places) {
  BigInt p = 1;
  for (unsigned i = 0; i < places; ++i) p *= 10;
  return p;
}

BigInt parse_integer(std::string_view text, bool allow_sign) {
  if (text.empty()) throw std::invalid_argument("empty number");
  bool negative = false;
  if (allow_sign && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("missing digits");
  BigInt value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("invalid digit in '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

// Scaled integer division rounding half away from zero.
BigInt round_scaled(const Rational& value, unsigned places) {
  BigInt num = boost::multiprecision::numerator(value) * pow10(places);
  const BigInt den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt q = num / den;
  const BigInt r = num % den;
  if (2 * r >= den) ++q;
  return negative ? BigInt(-q) : q;
}

}  // namespace

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string to_fraction_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

Rational parse_rational(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt den = parse_integer(text.substr(slash + 1), false);
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(parse_integer(text.substr(0, slash), true), den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) throw std::invalid_argument("missing fraction digits");
    const bool negative = !whole.empty() && whole.front() == '-';
    std::string_view digits = whole;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    const BigInt int_part = digits.empty() ? BigInt(0) : parse_integer(digits, false);
    const BigInt frac_part = parse_integer(frac, false);
    Rational magnitude = Rational(int_part) + Rational(frac_part, pow10(static_cast<unsigned>(frac.size())));
    return negative ? Rational(-magnitude) : magnitude;
  }
  return Rational(parse_integer(text, true));
}

Rational round_to_places(const Rational& value, unsigned places) {
  return Rational(round_scaled(value, places), pow10(places));
}

std::string render_decimal(const Rational& value, unsigned places) {
  BigInt scaled = round_scaled(value, places);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = negative ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - places);
  }
  return out;
}

}  // namespace wvg
