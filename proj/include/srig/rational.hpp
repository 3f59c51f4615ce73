// Copyright 2026 The srig Authors
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

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace srig {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// num/den in lowest terms; throws InvalidArgument when den is zero.
Rational make_ratio(const BigInt& num, const BigInt& den);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) { return make_ratio(BigInt(num), BigInt(den)); }

/// Canonical text: "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

/// Parses "p", "p/q" or a finite decimal "a.b".
Rational parse_rational(const std::string& text);

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

/// Decimal rendering with `digits` fractional digits, rounded toward +inf
/// when `round_up`, else toward -inf. Platform independent.
std::string to_decimal(const Rational& q, int digits, bool round_up = false);

Rational pow(const Rational& base, unsigned exponent);

/// Smallest multiple of 10^-12 that is >= sqrt(x); exact when sqrt(x) is a
/// multiple of 10^-12 (in particular for perfect squares).
Rational sqrt_upper(const Rational& x);

/// e < e_upper() and e > e_lower().
const Rational& e_upper();
const Rational& e_lower();

}  // namespace srig
