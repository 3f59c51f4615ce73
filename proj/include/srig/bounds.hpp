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

#include <string>

#include "srig/rational.hpp"

namespace srig {

/// A bound of the form coefficient * e. `upper` uses the rational upper
/// bound on e, so `x <= upper` is a sound check whenever x <= coefficient * e.
struct EBound {
  Rational coefficient;
  Rational upper;
};

/// t((2r+2)d+1) e. Throws InvalidArgument if d < 0, r < 0 or t < 1.
EBound bound_rig(int d, int r, const Rational& t);

/// Rational upper bound on sqrt(3g/2) + 3, exact when 3g/2 is a square.
Rational genus_density(int g);

/// Same shape as bound_rig with t = genus_density(g).
EBound bound_surface(int d, int r, int g);

/// dr + d/2 - r - 1, for d >= 2 and r >= 1.
Rational bound_lower(int d, int r);

/// (6r)^r * nabla^(3r), for r >= 1.
Rational bound_scol(int r, const Rational& nabla);

}  // namespace srig
