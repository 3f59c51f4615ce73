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

#include <vector>

#include "srig/geometry.hpp"
#include "srig/graph.hpp"
#include "srig/rational.hpp"

namespace srig::testing {

/// max |E(S)|/|S| over all non-empty vertex subsets.
Rational brute_max_density(const Graph& g);

/// Some orientation of g has every indegree <= d (all 2^m tried).
bool brute_orientable(const Graph& g, int d);

/// Distances by repeated relaxation inside `within`; -1 when unreachable.
std::vector<int> brute_distances(const Graph& g, Vertex root, const VertexSet& within);

/// Strong reach by enumerating simple paths; `order` lists vertices first to last.
VertexSet brute_sreach(const Graph& g, const std::vector<Vertex>& order, Vertex v, int r);

struct BruteScol {
  int value = 0;
  std::vector<Vertex> order;  // lexicographically first optimal order
};
BruteScol brute_scol(const Graph& g, int r);

/// Minimum k with a proper k-colouring whose colour pairs induce forests.
int brute_acyclic_chromatic(const Graph& g);

/// Maximum pattern density over all families of disjoint connected sets of
/// radius <= r (all labellings enumerated).
Rational brute_nabla(const Graph& g, int r);

/// True iff `pattern` is a minor of `host` (host at most 10 vertices).
bool brute_is_minor(const Graph& host, const Graph& pattern);

enum class SegmentRelation { kDisjoint, kCrossing, kDegenerate };

/// Classification by solving the two line equations in rationals.
SegmentRelation line_oracle(const Segment& a, const Segment& b);

}  // namespace srig::testing
