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

#include <span>
#include <string>
#include <vector>

#include "srig/graph.hpp"
#include "srig/rational.hpp"

namespace srig {

/// A total order on 0..n-1.
class VertexOrder {
 public:
  VertexOrder() = default;
  /// Throws InvalidArgument unless `order` is a permutation.
  explicit VertexOrder(std::vector<Vertex> order);

  static VertexOrder identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<Vertex>& order() const { return order_; }
  int position(Vertex v) const { return position_.at(v); }

  friend bool operator==(const VertexOrder&, const VertexOrder&) = default;

 private:
  std::vector<Vertex> order_;
  std::vector<int> position_;
};

/// Vertices w <= v reachable from v by a path of length <= r whose internal
/// vertices all come after v. Contains v.
VertexSet sreach(const Graph& g, const VertexOrder& order, Vertex v, int r);

/// max over v of |sreach(v)|.
int scol_of_order(const Graph& g, const VertexOrder& order, int r);

inline constexpr int kDefaultScolCap = 8;
inline constexpr int kDefaultAcyclicCap = 10;

struct ScolResult {
  int value = 0;
  VertexOrder order;
};

/// Exact strong r-colouring number with the lexicographically least optimal
/// order. Throws CapExceeded when |V(g)| > cap.
ScolResult scol_exact(const Graph& g, int r, int cap = kDefaultScolCap);

/// Upper bound: repeatedly puts last the vertex with the smallest reach
/// against the vertices already placed (ties to the smallest id).
ScolResult scol_greedy(const Graph& g, int r);

struct AcyclicColouring {
  int value = 0;
  std::vector<int> colour;  // colour[v] in 0..value-1
};

/// Proper, and every two colour classes induce a forest.
bool is_acyclic_colouring(const Graph& g, std::span<const int> colour);

/// Exact acyclic chromatic number with a witness. Throws CapExceeded when
/// |V(g)| > cap.
AcyclicColouring acyclic_chromatic_exact(const Graph& g, int cap = kDefaultAcyclicCap);

struct InequalityReport {
  int r = 0;
  int chi_a = 0;
  int scol_2 = 0;
  int scol_r = 0;
  Rational nabla;  // nabla_{r-1}
  Rational scol_bound;
  bool eq1_pass = false;  // chi_a <= scol_2
  bool eq2_pass = false;  // scol_r <= (6r)^r nabla^(3r)

  std::string to_text() const;
};

/// Throws InvalidArgument for r < 1 and CapExceeded past any exact cap.
InequalityReport check_inequalities(const Graph& g, int r, int scol_cap = kDefaultScolCap,
                                    int acyclic_cap = kDefaultAcyclicCap);

}  // namespace srig
