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
#include "srig/regions.hpp"

namespace srig {

/// Path Q_ij = forward + (x y) + backward for a pattern edge ij with i
/// before j in the representation's ordering.
struct PathRecord {
  Vertex i = -1;
  Vertex j = -1;
  std::vector<Vertex> forward;   // tree path c_i .. x in T_i
  Vertex x = -1;
  Vertex y = -1;
  std::vector<Vertex> backward;  // tree path y .. c_j in T_j
  int case_tag = 0;              // 1, 2 or 3

  /// The whole path c_i .. x, y .. c_j.
  std::vector<Vertex> vertices() const;
};

/// A model of J in G = rig(regions) together with one path per pattern edge
/// chosen by the three-case rule. `paths` follows pattern.edges() order.
struct Representation {
  MinorModel model;
  RegionSystem regions;
  std::vector<BfsTree> trees;     // T_i rooted at c_i, spanning S_i
  std::vector<Vertex> ordering;   // permutation of V(J)
  std::vector<int> position;      // position[i] = index of i in ordering
  std::vector<int> owner;         // ambient vertex -> branch index or -1
  std::vector<PathRecord> paths;

  bool precedes(Vertex i, Vertex j) const { return position.at(i) < position.at(j); }
  /// The record for pattern edge {i, j}, in either argument order.
  const PathRecord& path(Vertex i, Vertex j) const;
  int max_path_vertices() const;
};

/// Throws InvalidArgument when the model is invalid, its ambient graph is not
/// rig(rs), or `ordering` is not a permutation of V(J).
Representation build_representation(const MinorModel& model, const RegionSystem& rs,
                                    std::vector<Vertex> ordering);

/// Ordering by vertex id.
std::vector<Vertex> identity_ordering(int k);

/// A subgraph J' of the pattern: chosen vertices and a subset of the
/// pattern edges among them.
struct PatternSubgraph {
  std::vector<bool> vertices;
  std::vector<Edge> edges;

  static PatternSubgraph full(const Graph& pattern);
  int vertex_count() const;
  int edge_count() const { return static_cast<int>(edges.size()); }
  Rational density() const;
  friend bool operator==(const PatternSubgraph&, const PatternSubgraph&) = default;
};

/// ((a, b), ij): an arc into a vertex b of Q_ij whose tail a lies in the
/// branch set of a third vertex `block` of J'.
struct Junction {
  Orientation::Arc arc;
  Edge pattern_edge;
  Vertex block = -1;

  friend bool operator==(const Junction&, const Junction&) = default;
};

/// All junctions of `sub`, sorted by (pattern edge, arc).
std::vector<Junction> find_junctions(const Representation& rep, const Orientation& orient,
                                     const PatternSubgraph& sub);

/// R_ij: the third vertices l of J carrying a junction ((a, b), ij) with a in S_l.
VertexSet compute_R(const Representation& rep, const Orientation& orient, Edge pattern_edge);

/// The representation restricted to J' and relabelled to 0..|V(J')|-1 in
/// increasing original id; `to_original` maps back.
struct RestrictedRepresentation {
  Representation rep;
  std::vector<Vertex> to_original;
};

RestrictedRepresentation restrict_representation(const Representation& rep, const PatternSubgraph& sub);

/// Lines `path <i> <j> case <t>: <v1> ... <vk>` in pattern edge order.
std::string format_representation(const Representation& rep);

}  // namespace srig
