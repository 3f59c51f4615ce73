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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srig/rational.hpp"

namespace srig {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always first < second
using VertexSet = std::vector<Vertex>;  // sorted, duplicate free

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws InvalidArgument on self-loops, duplicates or out-of-range ids.
  Graph(int n, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }
  const VertexSet& neighbours(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }

  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// G[S] relabelled to 0..|S|-1 in the order of `subset`.
  Graph induced(std::span<const Vertex> subset) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adjacency_;
  int edge_count_ = 0;
};

Edge make_edge(Vertex u, Vertex v);

/// One direction per edge of a base graph.
class Orientation {
 public:
  using Arc = std::pair<Vertex, Vertex>;  // (tail, head)

  /// Throws InvalidArgument unless `arcs` orients every edge of `base` once.
  Orientation(Graph base, std::span<const Arc> arcs);

  const Graph& base() const { return base_; }
  /// Arcs sorted by (tail, head).
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(Vertex tail, Vertex head) const;
  /// N^-(v), sorted.
  const VertexSet& in_neighbours(Vertex v) const { return in_.at(v); }
  int indegree(Vertex v) const { return static_cast<int>(in_.at(v).size()); }
  int max_indegree() const;

 private:
  Graph base_;
  std::vector<Arc> arcs_;
  std::vector<VertexSet> in_;
};

/// |E|/|V|, and 0 for the empty graph.
Rational edge_density(const Graph& g);

/// Exact maximum of |E(G[S])|/|S| over non-empty S, by parametric min-cut.
/// Throws InvalidArgument on the empty graph.
Rational max_density(const Graph& g);

struct DegeneracyOrder {
  int degeneracy = 0;
  /// Each order[i] has at most `degeneracy` neighbours among order[i+1..].
  std::vector<Vertex> order;
};

DegeneracyOrder degeneracy_order(const Graph& g);

/// True when order[i] has at most k neighbours later in `order` for all i.
bool is_degeneracy_order(const Graph& g, std::span<const Vertex> order, int k);

/// An orientation with every indegree <= d, or nullopt when none exists.
std::optional<Orientation> hakimi_orient(const Graph& g, int d);

struct BfsTree {
  Vertex root = -1;
  /// parent[v] = -1 for the root and for vertices outside the tree.
  std::vector<Vertex> parent;
  /// depth[v] = -1 for vertices outside the tree.
  std::vector<int> depth;

  bool contains(Vertex v) const { return depth.at(v) >= 0; }
  /// Vertices from `v` up to the root, inclusive.
  std::vector<Vertex> path_to_root(Vertex v) const;
  /// The unique tree path from `u` to `v`.
  std::vector<Vertex> path(Vertex u, Vertex v) const;
  int distance(Vertex u, Vertex v) const;
};

/// BFS tree of G[within] from `root`; each vertex takes the smallest-id
/// neighbour of the previous layer as parent.
/// Throws InvalidArgument if root is not in `within` or G[within] is
/// disconnected.
BfsTree bfs_tree(const Graph& g, Vertex root, std::span<const Vertex> within);

struct RadiusCentre {
  int radius = 0;
  Vertex centre = -1;
};

/// Minimum eccentricity within G[within] and its smallest-id centre.
RadiusCentre radius_and_centre(const Graph& g, std::span<const Vertex> within);

/// True when G[subset] is non-empty and connected.
bool is_connected_subset(const Graph& g, std::span<const Vertex> subset);

/// Eccentricity of `root` within G[within], or -1 if some vertex of
/// `within` is unreachable.
int eccentricity_within(const Graph& g, Vertex root, std::span<const Vertex> within);

/// Graph text format: `graph <n> <m>` then m lines `<u> <v>` with u < v.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

}  // namespace srig
