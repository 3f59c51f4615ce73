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

#include "support/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace srig::testing {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1u) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph random_graph(Rng& rng, int n, double edge_probability) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph random_tree(Rng& rng, int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back(make_edge(uniform(rng, 0, v - 1), v));
  std::sort(edges.begin(), edges.end());
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  std::sort(edges.begin(), edges.end());
  return Graph(n, edges);
}

Graph complete_graph(int n) { return graph_from_mask(n, n < 2 ? 0u : (1u << pair_count(n)) - 1); }

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

VertexSet random_connected_subset(Rng& rng, const Graph& host, int max_size) {
  const int target = uniform(rng, 1, max_size);
  VertexSet set{uniform(rng, 0, host.vertex_count() - 1)};
  while (static_cast<int>(set.size()) < target) {
    std::vector<Vertex> frontier;
    for (Vertex v : set) {
      for (Vertex w : host.neighbours(v)) {
        if (!std::binary_search(set.begin(), set.end(), w)) frontier.push_back(w);
      }
    }
    if (frontier.empty()) break;
    Vertex pick = frontier[uniform(rng, 0, static_cast<int>(frontier.size()) - 1)];
    set.insert(std::lower_bound(set.begin(), set.end(), pick), pick);
  }
  return set;
}

RegionSystem random_regions(Rng& rng, const Graph& host, int regions, int max_region) {
  std::vector<VertexSet> sets;
  for (int k = 0; k < regions; ++k) sets.push_back(random_connected_subset(rng, host, max_region));
  return RegionSystem(host, std::move(sets));
}

RegionSystem random_tree_regions(Rng& rng, int host_size, int regions, int max_region) {
  return random_regions(rng, random_tree(rng, host_size), regions, max_region);
}

namespace {

bool compatible(const Segment& s, const std::vector<Segment>& others) {
  if (s.p == s.q) return false;
  for (const auto& o : others) {
    try {
      segments_intersect(s, o);
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  return true;
}

}  // namespace

Arrangement random_arrangement(Rng& rng, int count, int span) {
  std::vector<Segment> segments;
  while (static_cast<int>(segments.size()) < count) {
    Segment s{Point{uniform(rng, 0, span), uniform(rng, 0, span)}, Point{uniform(rng, 0, span), uniform(rng, 0, span)}};
    if (compatible(s, segments)) segments.push_back(s);
  }
  return Arrangement(std::move(segments));
}

}  // namespace srig::testing
