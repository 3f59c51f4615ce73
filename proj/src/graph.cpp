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

#include "srig/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <sstream>

#include "graph_block.hpp"
#include "maxflow.hpp"
#include "srig/error.hpp"

namespace srig {

Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

Graph::Graph(int n) : adjacency_(n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidArgument("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    }
    if (u == v) throw InvalidArgument("self-loop at " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) {
      Vertex u = static_cast<Vertex>(&adj - adjacency_.data());
      throw InvalidArgument("duplicate edge " + std::to_string(u) + " " + std::to_string(*dup));
    }
  }
  edge_count_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> subset) const {
  std::vector<int> index(vertex_count(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) index.at(subset[i]) = static_cast<int>(i);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (Vertex w : adjacency_[subset[i]]) {
      int j = index[w];
      if (j > static_cast<int>(i)) out.push_back(make_edge(static_cast<int>(i), j));
    }
  }
  return Graph(static_cast<int>(subset.size()), out);
}

Orientation::Orientation(Graph base, std::span<const Arc> arcs)
    : base_(std::move(base)), arcs_(arcs.begin(), arcs.end()), in_(base_.vertex_count()) {
  std::sort(arcs_.begin(), arcs_.end());
  std::vector<Edge> seen;
  seen.reserve(arcs_.size());
  for (auto [a, b] : arcs_) {
    if (!base_.has_edge(a, b)) {
      throw InvalidArgument("arc " + std::to_string(a) + "->" + std::to_string(b) + " is not an edge");
    }
    seen.push_back(make_edge(a, b));
    in_[b].push_back(a);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end() ||
      static_cast<int>(seen.size()) != base_.edge_count()) {
    throw InvalidArgument("orientation must direct every edge exactly once");
  }
  for (auto& in : in_) std::sort(in.begin(), in.end());
}

bool Orientation::has_arc(Vertex tail, Vertex head) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{tail, head});
}

int Orientation::max_indegree() const {
  int best = 0;
  for (const auto& in : in_) best = std::max(best, static_cast<int>(in.size()));
  return best;
}

Rational edge_density(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  return make_rational(g.edge_count(), g.vertex_count());
}

namespace {

// True iff some S has b*|E(S)| - a*|S| > 0 (densest-subgraph closure cut).
bool has_denser_subgraph(const Graph& g, const std::vector<Edge>& edges, std::int64_t a,
                         std::int64_t b) {
  const int m = static_cast<int>(edges.size());
  const int n = g.vertex_count();
  const int source = 0;
  const int sink = m + n + 1;
  detail::MaxFlow flow(m + n + 2);
  for (int e = 0; e < m; ++e) {
    flow.add_arc(source, 1 + e, b);
    flow.add_arc(1 + e, 1 + m + edges[e].first, detail::MaxFlow::kInfinity);
    flow.add_arc(1 + e, 1 + m + edges[e].second, detail::MaxFlow::kInfinity);
  }
  for (Vertex v = 0; v < n; ++v) flow.add_arc(1 + m + v, sink, a);
  return b * m - flow.run(source, sink) > 0;
}

}  // namespace

Rational max_density(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw InvalidArgument("max_density of the empty graph");
  const auto edges = g.edges();
  const std::int64_t m = g.edge_count();
  // The optimum is |E(S)|/|S| for some S, so it is one of these fractions.
  std::vector<std::pair<std::int64_t, std::int64_t>> candidates;
  for (std::int64_t b = 1; b <= n; ++b) {
    std::int64_t top = std::min<std::int64_t>(m, b * (b - 1) / 2);
    for (std::int64_t a = 0; a <= top; ++a) {
      std::int64_t g = std::gcd(a, b);
      candidates.emplace_back(a / g, b / g);
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
    return x.first * y.second < y.first * x.second;
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  // Smallest candidate c such that no subgraph is strictly denser than c.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (has_denser_subgraph(g, edges, candidates[mid].first, candidates[mid].second)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return make_rational(candidates[lo].first, candidates[lo].second);
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> degree(n);
  std::vector<bool> removed(n, false);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  DegeneracyOrder out;
  out.order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && (best < 0 || degree[v] < degree[best])) best = v;
    }
    out.degeneracy = std::max(out.degeneracy, degree[best]);
    out.order.push_back(best);
    removed[best] = true;
    for (Vertex w : g.neighbours(best)) {
      if (!removed[w]) --degree[w];
    }
  }
  return out;
}

bool is_degeneracy_order(const Graph& g, std::span<const Vertex> order, int k) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    if (!g.contains(v) || position[v] >= 0) return false;
    position[v] = i;
  }
  for (Vertex v = 0; v < n; ++v) {
    int later = 0;
    for (Vertex w : g.neighbours(v)) later += position[w] > position[v];
    if (later > k) return false;
  }
  return true;
}

std::optional<Orientation> hakimi_orient(const Graph& g, int d) {
  if (d < 0) throw InvalidArgument("indegree bound must be non-negative");
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int n = g.vertex_count();
  const int source = 0;
  const int sink = m + n + 1;
  detail::MaxFlow flow(m + n + 2);
  std::vector<std::pair<int, int>> to_endpoint(m);
  for (int e = 0; e < m; ++e) {
    flow.add_arc(source, 1 + e, 1);
    // The larger endpoint is tried first as the head.
    to_endpoint[e].second = flow.add_arc(1 + e, 1 + m + edges[e].second, 1);
    to_endpoint[e].first = flow.add_arc(1 + e, 1 + m + edges[e].first, 1);
  }
  for (Vertex v = 0; v < n; ++v) flow.add_arc(1 + m + v, sink, d);
  if (flow.run(source, sink) != m) return std::nullopt;
  std::vector<Orientation::Arc> arcs;
  arcs.reserve(m);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = edges[e];
    // The endpoint receiving the edge's unit is its head.
    if (flow.flow_on(to_endpoint[e].first) == 1) {
      arcs.emplace_back(v, u);
    } else {
      arcs.emplace_back(u, v);
    }
  }
  return Orientation(g, arcs);
}

std::vector<Vertex> BfsTree::path_to_root(Vertex v) const {
  if (!contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " not in tree");
  std::vector<Vertex> out{v};
  while (out.back() != root) out.push_back(parent[out.back()]);
  return out;
}

std::vector<Vertex> BfsTree::path(Vertex u, Vertex v) const {
  auto up = path_to_root(u);
  auto down = path_to_root(v);
  // Strip the common suffix above the lowest common ancestor.
  while (up.size() >= 2 && down.size() >= 2 && up[up.size() - 2] == down[down.size() - 2]) {
    up.pop_back();
    down.pop_back();
  }
  down.pop_back();
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

int BfsTree::distance(Vertex u, Vertex v) const { return static_cast<int>(path(u, v).size()) - 1; }

namespace {

std::vector<bool> membership(const Graph& g, std::span<const Vertex> subset) {
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v : subset) {
    if (!g.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    in[v] = true;
  }
  return in;
}

std::vector<int> distances_within(const Graph& g, Vertex root, const std::vector<bool>& in) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> queue;
  dist[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbours(u)) {
      if (in[w] && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

BfsTree bfs_tree(const Graph& g, Vertex root, std::span<const Vertex> within) {
  auto in = membership(g, within);
  if (!g.contains(root) || !in[root]) throw InvalidArgument("root not in vertex set");
  BfsTree tree;
  tree.root = root;
  tree.depth = distances_within(g, root, in);
  tree.parent.assign(g.vertex_count(), -1);
  for (Vertex v : within) {
    if (tree.depth[v] < 0) throw InvalidArgument("vertex set is disconnected");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in[v]) {
      tree.depth[v] = -1;
      continue;
    }
    if (v == root) continue;
    for (Vertex w : g.neighbours(v)) {
      if (in[w] && tree.depth[w] == tree.depth[v] - 1) {
        tree.parent[v] = w;  // neighbours are sorted, so this is the smallest id
        break;
      }
    }
  }
  return tree;
}

int eccentricity_within(const Graph& g, Vertex root, std::span<const Vertex> within) {
  auto in = membership(g, within);
  if (!g.contains(root) || !in[root]) return -1;
  auto dist = distances_within(g, root, in);
  int ecc = 0;
  for (Vertex v : within) {
    if (dist[v] < 0) return -1;
    ecc = std::max(ecc, dist[v]);
  }
  return ecc;
}

bool is_connected_subset(const Graph& g, std::span<const Vertex> subset) {
  if (subset.empty()) return false;
  return eccentricity_within(g, subset.front(), subset) >= 0;
}

RadiusCentre radius_and_centre(const Graph& g, std::span<const Vertex> within) {
  if (within.empty()) throw InvalidArgument("radius of an empty vertex set");
  VertexSet sorted(within.begin(), within.end());
  std::sort(sorted.begin(), sorted.end());
  RadiusCentre best{-1, -1};
  for (Vertex c : sorted) {
    int ecc = eccentricity_within(g, c, sorted);
    if (ecc < 0) throw InvalidArgument("vertex set is disconnected");
    if (best.centre < 0 || ecc < best.radius) best = {ecc, c};
  }
  return best;
}

namespace detail {

Graph read_graph_block(LineReader& reader) {
  auto header = reader.next_tokens();
  if (header.size() != 3 || header[0] != "graph") reader.fail("expected 'graph <n> <m>'");
  long long n = parse_integer(header[1], reader);
  long long m = parse_integer(header[2], reader);
  if (n < 0 || m < 0) reader.fail("negative size");
  std::vector<Edge> edges;
  edges.reserve(m);
  std::vector<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    auto tok = reader.next_tokens();
    if (tok.size() != 2) reader.fail("expected '<u> <v>'");
    long long u = parse_integer(tok[0], reader);
    long long v = parse_integer(tok[1], reader);
    if (u < 0 || v >= n) reader.fail("vertex id out of range");
    if (u == v) reader.fail("self-loop");
    if (u > v) reader.fail("edge endpoints must satisfy u < v");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  seen = edges;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) reader.fail("duplicate edge");
  return Graph(static_cast<int>(n), edges);
}

}  // namespace detail

Graph parse_graph(const std::string& text) {
  detail::LineReader reader(text);
  Graph g = detail::read_graph_block(reader);
  if (!reader.done()) reader.fail("trailing content after graph");
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace srig
