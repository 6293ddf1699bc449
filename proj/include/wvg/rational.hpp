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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace wvg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

/// "num/den" with den > 0, always both parts, e.g. "1/1", "0/1".
std::string to_fraction_string(const Rational& value);

/// Parses "n", "n/d", or a decimal literal such as "-0.125" exactly.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Rounds to `places` decimals, half away from zero.
Rational round_to_places(const Rational& value, unsigned places);

/// Decimal rendering after round_to_places, always with exactly `places` digits.
std::string render_decimal(const Rational& value, unsigned places);

}  // namespace wvg
