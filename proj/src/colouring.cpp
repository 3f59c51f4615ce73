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

#include "srig/colouring.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "srig/bounds.hpp"
#include "srig/error.hpp"
#include "srig/minor.hpp"

namespace srig {

VertexOrder::VertexOrder(std::vector<Vertex> order) : order_(std::move(order)), position_(order_.size(), -1) {
  const int n = size();
  for (int p = 0; p < n; ++p) {
    Vertex v = order_[p];
    if (v < 0 || v >= n || position_[v] != -1) throw InvalidArgument("vertex order is not a permutation");
    position_[v] = p;
  }
}

VertexOrder VertexOrder::identity(int n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return VertexOrder(std::move(order));
}

namespace {

// Reach of v when `later[u]` marks the vertices placed after v.
VertexSet reach_with_later(const Graph& g, const std::vector<bool>& later, Vertex v, int r) {
  const int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::vector<Vertex> frontier{v};
  dist[v] = 0;
  VertexSet out{v};
  for (int step = 1; step <= r && !frontier.empty(); ++step) {
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      if (u != v && !later[u]) continue;
      for (Vertex w : g.neighbours(u)) {
        if (dist[w] != -1) continue;
        dist[w] = step;
        if (later[w]) {
          next.push_back(w);
        } else {
          out.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_order(const Graph& g, const VertexOrder& order) {
  if (order.size() != g.vertex_count()) throw InvalidArgument("vertex order has the wrong size");
}

}  // namespace

VertexSet sreach(const Graph& g, const VertexOrder& order, Vertex v, int r) {
  require_order(g, order);
  if (r < 0) throw InvalidArgument("r must be non-negative");
  if (!g.contains(v)) throw InvalidArgument("vertex out of range");
  std::vector<bool> later(g.vertex_count());
  for (int p = order.position(v) + 1; p < order.size(); ++p) later[order.order()[p]] = true;
  return reach_with_later(g, later, v, r);
}

int scol_of_order(const Graph& g, const VertexOrder& order, int r) {
  require_order(g, order);
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, static_cast<int>(sreach(g, order, v, r).size()));
  return best;
}

ScolResult scol_exact(const Graph& g, int r, int cap) {
  const int n = g.vertex_count();
  if (n > cap) throw CapExceeded("scol_exact: " + std::to_string(n) + " vertices exceed the cap " + std::to_string(cap));
  if (n > 24) throw CapExceeded("scol_exact supports at most 24 vertices");
  if (r < 0) throw InvalidArgument("r must be non-negative");
  if (n == 0) return {0, VertexOrder::identity(0)};
  const std::uint32_t full = (1u << n) - 1;
  // cost(prefix, v): reach of v placed right after `prefix`.
  auto cost = [&](std::uint32_t prefix, Vertex v) {
    std::vector<bool> later(n);
    for (int u = 0; u < n; ++u) later[u] = u != v && !(prefix >> u & 1u);
    return static_cast<int>(reach_with_later(g, later, v, r).size());
  };
  // best[P]: optimal worst reach over the vertices outside prefix P.
  std::vector<int> best(full + 1, 0);
  for (std::uint32_t p = full; p-- > 0;) {
    int value = n + 1;
    for (int v = 0; v < n; ++v) {
      if (p >> v & 1u) continue;
      value = std::min(value, std::max(cost(p, v), best[p | (1u << v)]));
    }
    best[p] = value;
  }
  std::vector<Vertex> order;
  std::uint32_t prefix = 0;
  while (prefix != full) {
    for (int v = 0; v < n; ++v) {
      if (prefix >> v & 1u) continue;
      if (std::max(cost(prefix, v), best[prefix | (1u << v)]) <= best[0]) {
        order.push_back(v);
        prefix |= 1u << v;
        break;
      }
    }
  }
  return {best[0], VertexOrder(std::move(order))};
}

ScolResult scol_greedy(const Graph& g, int r) {
  if (r < 0) throw InvalidArgument("r must be non-negative");
  const int n = g.vertex_count();
  std::vector<bool> later(n, false);
  std::vector<Vertex> reversed;
  int value = 0;
  for (int placed = 0; placed < n; ++placed) {
    Vertex pick = -1;
    int pick_cost = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (later[v]) continue;
      int c = static_cast<int>(reach_with_later(g, later, v, r).size());
      if (pick == -1 || c < pick_cost) {
        pick = v;
        pick_cost = c;
      }
    }
    later[pick] = true;
    reversed.push_back(pick);
    value = std::max(value, pick_cost);
  }
  std::reverse(reversed.begin(), reversed.end());
  return {value, VertexOrder(std::move(reversed))};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool is_acyclic_colouring(const Graph& g, std::span<const int> colour) {
  const int n = g.vertex_count();
  if (static_cast<int>(colour.size()) != n) return false;
  int colours = 0;
  for (int c : colour) {
    if (c < 0) return false;
    colours = std::max(colours, c + 1);
  }
  const auto edges = g.edges();
  for (auto [u, v] : edges) {
    if (colour[u] == colour[v]) return false;
  }
  for (int a = 0; a < colours; ++a) {
    for (int b = a + 1; b < colours; ++b) {
      UnionFind uf(n);
      for (auto [u, v] : edges) {
        bool in_pair = (colour[u] == a || colour[u] == b) && (colour[v] == a || colour[v] == b);
        if (in_pair && !uf.unite(u, v)) return false;
      }
    }
  }
  return true;
}

namespace {

class AcyclicSearch {
 public:
  AcyclicSearch(const Graph& g, int k) : g_(g), k_(k), colour_(g.vertex_count(), -1) {}

  bool run() { return place(0, 0); }
  const std::vector<int>& colour() const { return colour_; }

 private:
  // True if giving v colour c closes a cycle in some two-coloured subgraph.
  bool closes_cycle(Vertex v, int c) const {
    const int n = g_.vertex_count();
    for (int other = 0; other < k_; ++other) {
      if (other == c) continue;
      int hits = 0;
      for (Vertex w : g_.neighbours(v)) hits += colour_[w] == other;
      if (hits < 2) continue;
      UnionFind uf(n);
      for (Vertex u = 0; u < n; ++u) {
        if (colour_[u] != c && colour_[u] != other) continue;
        for (Vertex w : g_.neighbours(u)) {
          if (w > u && (colour_[w] == c || colour_[w] == other)) uf.unite(u, w);
        }
      }
      std::vector<int> seen;
      for (Vertex w : g_.neighbours(v)) {
        if (colour_[w] != other) continue;
        int root = uf.find(w);
        if (std::find(seen.begin(), seen.end(), root) != seen.end()) return true;
        seen.push_back(root);
      }
    }
    return false;
  }

  bool place(Vertex v, int used) {
    if (v == g_.vertex_count()) return true;
    for (int c = 0; c < std::min(k_, used + 1); ++c) {
      bool clash = false;
      for (Vertex w : g_.neighbours(v)) clash = clash || colour_[w] == c;
      if (clash || closes_cycle(v, c)) continue;
      colour_[v] = c;
      if (place(v + 1, std::max(used, c + 1))) return true;
      colour_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> colour_;
};

}  // namespace

AcyclicColouring acyclic_chromatic_exact(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap) {
    throw CapExceeded("acyclic_chromatic_exact: " + std::to_string(n) + " vertices exceed the cap " +
                      std::to_string(cap));
  }
  for (int k = 0;; ++k) {
    if (k == 0) {
      if (n == 0) return {0, {}};
      continue;
    }
    AcyclicSearch search(g, k);
    if (search.run()) {
      AcyclicColouring out{k, search.colour()};
      if (!is_acyclic_colouring(g, out.colour)) {
        throw ClaimViolation("acyclic colouring", "search returned a colouring that fails re-verification");
      }
      return out;
    }
  }
}

InequalityReport check_inequalities(const Graph& g, int r, int scol_cap, int acyclic_cap) {
  if (r < 1) throw InvalidArgument("r must be at least 1");
  InequalityReport rep;
  rep.r = r;
  rep.chi_a = acyclic_chromatic_exact(g, acyclic_cap).value;
  rep.scol_2 = scol_exact(g, 2, scol_cap).value;
  rep.scol_r = r == 2 ? rep.scol_2 : scol_exact(g, r, scol_cap).value;
  rep.nabla = nabla_exact(g, r - 1, std::max(scol_cap, g.vertex_count())).value;
  rep.scol_bound = bound_scol(r, rep.nabla);
  rep.eq1_pass = rep.chi_a <= rep.scol_2;
  rep.eq2_pass = Rational(rep.scol_r) <= rep.scol_bound;
  return rep;
}

std::string InequalityReport::to_text() const {
  std::ostringstream out;
  out << "r = " << r << '\n'
      << "chi_a = " << chi_a << '\n'
      << "scol_2 = " << scol_2 << '\n'
      << "scol_r = " << scol_r << '\n'
      << "nabla_{r-1} = " << to_string(nabla) << '\n'
      << "scol_bound = " << to_string(scol_bound) << '\n'
      << "eq1_pass = " << (eq1_pass ? "true" : "false") << '\n'
      << "eq2_pass = " << (eq2_pass ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace srig
