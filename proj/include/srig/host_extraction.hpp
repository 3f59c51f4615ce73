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
#include <vector>

#include "srig/graph.hpp"
#include "srig/minor.hpp"
#include "srig/representation.hpp"

namespace srig {

/// The subgraph of a pattern induced by its vertices of degree >= 2.
struct CoreGraph {
  Graph core;
  std::vector<Vertex> to_original;  // increasing original ids
};

CoreGraph degree2_core(const Graph& j);

/// Core of a pattern subgraph J' (degrees taken in J').
CoreGraph degree2_core(const PatternSubgraph& sub);

/// |E(J')| <= |E(J*)| + |A| where A holds the vertices of degree <= 1 in J'.
bool core_edge_accounting_holds(const PatternSubgraph& sub);

/// B_{i,j} for a core edge with i before j.
struct ForwardSet {
  Vertex i = -1;  // core labels
  Vertex j = -1;
  int case_tag = 0;  // 1 or 2
  VertexSet set;
  /// Case 1: least host edge (u, w) with u in the set and w in A_y.
  Edge link{-1, -1};
};

/// B_{j,i} for a core edge with i before j.
struct BackwardSet {
  Vertex i = -1;
  Vertex j = -1;
  char case_tag = '?';  // 'A' or 'B'
  Vertex z = -1;        // Case B only
  VertexSet set;
  /// Least host edge (u, w) with u in the set and w in B_i.
  Edge link{-1, -1};
};

/// Branch sets in the host for the degree->=2 core of a junction-free
/// pattern. Core vertex t is pattern vertex core_to_pattern[t]; core labels
/// follow the representation's ordering.
struct HostModel {
  Graph host;
  Graph core;
  std::vector<Vertex> core_to_pattern;
  std::vector<VertexSet> sets;   // B_t
  std::vector<Vertex> roots;     // min A_{c_t}, always inside B_t
  std::vector<VertexSet> lower;  // B_t^<
  std::vector<VertexSet> upper;  // B_t^>
  std::vector<ForwardSet> forward;
  std::vector<BackwardSet> backward;

  /// The model of `core` in `host`, without a depth bound.
  MinorModel as_model() const;
};

/// B_{i,j} for pattern vertices i before j, from their path record. Throws
/// ClaimViolation naming the failed assertion.
ForwardSet build_forward_set(const Representation& rep, Vertex i, Vertex j);

/// B_{j,i} for pattern vertices i before j given the finished branch set
/// B_i. Throws ClaimViolation.
BackwardSet build_backward_set(const Representation& rep, Vertex i, Vertex j, const VertexSet& b_i);

/// Runs the full induction. Throws InvalidArgument when the pattern is not
/// junction-free under `orient`, and ClaimViolation when any internal claim
/// fails (which would mean a bug or a broken precondition).
HostModel extract_host_model(const Representation& rep, const Orientation& orient);

/// As above for the subgraph J' of the pattern; core_to_pattern refers to
/// the original pattern ids.
HostModel extract_host_model(const Representation& rep, const Orientation& orient, const PatternSubgraph& sub);

/// The union of the regions A_t over `vertices`.
VertexSet region_union(const RegionSystem& rs, const std::vector<Vertex>& vertices);

}  // namespace srig
