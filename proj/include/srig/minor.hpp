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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "srig/graph.hpp"
#include "srig/rational.hpp"

namespace srig {

/// A model of `pattern` in `ambient`: disjoint connected branch sets, one per
/// pattern vertex, with an ambient edge between the sets of every pattern
/// edge. When `depth_bound` is set, every root must reach its whole branch
/// set within that many steps, which certifies an r-shallow model.
struct MinorModel {
  Graph ambient;
  Graph pattern;
  std::vector<VertexSet> branch;
  std::vector<Vertex> roots;
  std::optional<int> depth_bound;
};

struct ModelViolation {
  std::string condition;  // e.g. "not disjoint", "radius exceeded"
  std::string witness;
};

/// nullopt when the model is valid, else the first failing condition.
std::optional<ModelViolation> validate_model(const MinorModel& m);

/// Edge density of the pattern; throws InvalidArgument on an invalid model.
Rational pattern_density(const MinorModel& m);

/// Largest radius among the branch sets (0 for an empty model).
int max_branch_radius(const MinorModel& m);

inline constexpr int kDefaultNablaCap = 9;

struct NablaResult {
  Rational value;
  MinorModel witness;
};

/// Exact nabla_r(g): the maximum pattern density over all families of
/// disjoint connected vertex sets of radius <= r, each family taken with its
/// full touching pattern. The witness is the first optimum in enumeration
/// order, independent of `jobs`.
/// Throws CapExceeded when |V(g)| > cap.
NablaResult nabla_exact(const Graph& g, int r, int cap = kDefaultNablaCap, int jobs = 1);

/// Calls `visit` for every family enumerated by nabla_exact (including the
/// empty family), as a model with centre roots and depth bound r.
void for_each_shallow_model(const Graph& g, int r, int cap,
                            const std::function<void(const MinorModel&)>& visit);

/// Seeded random r-shallow model with at most `target_size` branch sets,
/// grown as random BFS balls over still-unused vertices; the pattern is every
/// touching pair. Throws InvalidArgument when target_size < 1.
MinorModel random_shallow_model(const Graph& g, int r, int target_size, std::uint64_t seed);

/// Model text format: `model <|V(J)|> <r>` (`r -` without a depth bound),
/// then `branch <i> root <c>: <v1> ...` and `pattern-edge <i> <j>` lines.
std::string format_model(const MinorModel& m);
/// Parses the model format against a known ambient graph.
MinorModel parse_model(const std::string& text, const Graph& ambient);

}  // namespace srig
