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

#include "srig/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include "srig/error.hpp"

namespace srig {

namespace {

BigInt pow10(int digits) {
  BigInt out = 1;
  for (int i = 0; i < digits; ++i) out *= 10;
  return out;
}

BigInt parse_int(const std::string& text) {
  if (text.empty()) throw ParseError("empty number");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ParseError("bad number '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("bad number '" + text + "'");
  }
  return BigInt(text);
}

// Smallest s >= 0 with s*s >= n.
BigInt ceil_isqrt(const BigInt& n) {
  if (n <= 0) return 0;
  BigInt s = boost::multiprecision::sqrt(n);
  if (s * s < n) ++s;
  return s;
}

}  // namespace

std::string to_string(const Rational& q) {
  const BigInt& num = numerator(q);
  const BigInt& den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational make_ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  if (den < 0) return Rational(BigInt(-num), BigInt(-den));
  return Rational(num, den);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw ParseError("non-positive denominator in '" + text + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) throw ParseError("bad decimal '" + text + "'");
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    BigInt scale = pow10(static_cast<int>(frac.size()));
    BigInt w = parse_int(whole);
    BigInt f = parse_int(frac);
    if (negative) f = -f;
    return Rational(w * scale + f, scale);
  }
  return Rational(parse_int(text));
}

BigInt floor(const Rational& q) {
  BigInt num = numerator(q);
  const BigInt& den = denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) --quot;
  return quot;
}

BigInt ceil(const Rational& q) { return -floor(-q); }

std::string to_decimal(const Rational& q, int digits, bool round_up) {
  BigInt scale = pow10(digits);
  Rational scaled = q * scale;
  BigInt v = round_up ? ceil(scaled) : floor(scaled);
  bool negative = v < 0;
  if (negative) v = -v;
  std::string s = v.str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

Rational sqrt_upper(const Rational& x) {
  if (x < 0) throw InvalidArgument("sqrt of negative value");
  BigInt scale = pow10(12);
  BigInt s = ceil_isqrt(ceil(x * scale * scale));
  return Rational(s, scale);
}

const Rational& e_upper() {
  static const Rational value = parse_rational("2.718281828460");
  return value;
}

const Rational& e_lower() {
  static const Rational value = parse_rational("2.718281828");
  return value;
}

}  // namespace srig
