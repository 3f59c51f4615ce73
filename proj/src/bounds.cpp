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

#include "srig/bounds.hpp"

#include "srig/error.hpp"

namespace srig {

namespace {

void require_non_negative(int value, const char* name) {
  if (value < 0) throw InvalidArgument(std::string(name) + " must be non-negative");
}

EBound scaled(const Rational& t, int d, int r) {
  EBound out;
  out.coefficient = t * ((2 * Rational(r) + 2) * d + 1);
  out.upper = out.coefficient * e_upper();
  return out;
}

}  // namespace

EBound bound_rig(int d, int r, const Rational& t) {
  require_non_negative(d, "d");
  require_non_negative(r, "r");
  if (t < 1) throw InvalidArgument("t must be at least 1");
  return scaled(t, d, r);
}

Rational genus_density(int g) {
  require_non_negative(g, "g");
  return sqrt_upper(make_rational(3LL * g, 2)) + 3;
}

EBound bound_surface(int d, int r, int g) {
  require_non_negative(d, "d");
  require_non_negative(r, "r");
  return scaled(genus_density(g), d, r);
}

Rational bound_lower(int d, int r) {
  if (d < 2) throw InvalidArgument("d must be at least 2");
  if (r < 1) throw InvalidArgument("r must be at least 1");
  return Rational(d) * r + make_rational(d, 2) - r - 1;
}

Rational bound_scol(int r, const Rational& nabla) {
  if (r < 1) throw InvalidArgument("r must be at least 1");
  if (nabla < 0) throw InvalidArgument("nabla must be non-negative");
  return pow(Rational(6 * r), static_cast<unsigned>(r)) * pow(nabla, static_cast<unsigned>(3 * r));
}

}  // namespace srig
