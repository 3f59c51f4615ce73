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

#include "support/instances.hpp"

#include <algorithm>
#include <stdexcept>

namespace srig::testing {

RegionSystem subdivision_regions(const Graph& g) {
  const int n = g.vertex_count();
  const auto edges = g.edges();
  std::vector<Edge> host_edges;
  std::vector<VertexSet> regions(n);
  for (Vertex v = 0; v < n; ++v) regions[v].push_back(v);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    Vertex mid = n + static_cast<Vertex>(e);
    auto [u, v] = edges[e];
    host_edges.push_back(make_edge(u, mid));
    host_edges.push_back(make_edge(v, mid));
    regions[u].push_back(mid);
    regions[v].push_back(mid);
  }
  std::sort(host_edges.begin(), host_edges.end());
  return RegionSystem(Graph(n + static_cast<int>(edges.size()), host_edges), std::move(regions));
}

Orientation orient_at_density(const Graph& g, int& d) {
  d = g.vertex_count() == 0 ? 0 : static_cast<int>(ceil(max_density(g)));
  auto o = hakimi_orient(g, d);
  if (!o) throw std::logic_error("no orientation at the max density");
  return *o;
}

Instance make_instance(const RegionSystem& rs, const MinorModel& model, int r) {
  int d = 0;
  Orientation orient = orient_at_density(model.ambient, d);
  Representation rep = build_representation(model, rs, identity_ordering(model.pattern.vertex_count()));
  return Instance{rs, model.ambient, d, orient, model, rep, r};
}

Instance random_instance(Rng& rng, int host_size, int regions, int max_region, int r) {
  RegionSystem rs = random_tree_regions(rng, host_size, regions, max_region);
  Graph g = rig(rs);
  MinorModel model = random_shallow_model(g, r, g.vertex_count(), rng());
  return make_instance(rs, model, r);
}

Instance junction_free_instance(Rng& rng, const Graph& pattern) {
  const int k = pattern.vertex_count();
  std::vector<Orientation::Arc> arcs;
  std::vector<VertexSet> branch(k);
  for (Vertex i = 0; i < k; ++i) branch[i].push_back(i);
  int next = k;
  auto random_arc = [&](Vertex u, Vertex v) {
    arcs.push_back(uniform(rng, 0, 1) ? Orientation::Arc{u, v} : Orientation::Arc{v, u});
  };
  for (auto [i, j] : pattern.edges()) {
    Vertex a = next++, b = next++;
    branch[i].push_back(a);
    branch[j].push_back(b);
    arcs.emplace_back(i, a);
    arcs.emplace_back(j, b);
    random_arc(a, b);
  }
  for (Vertex i = 0; i < k; ++i) {
    for (std::size_t x = 1; x < branch[i].size(); ++x) {
      for (std::size_t y = x + 1; y < branch[i].size(); ++y) {
        if (uniform(rng, 0, 2) == 0) random_arc(branch[i][x], branch[i][y]);
      }
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : arcs) edges.push_back(make_edge(u, v));
  Graph g(next, edges);
  MinorModel model;
  model.ambient = g;
  model.pattern = pattern;
  model.branch = branch;
  for (auto& set : model.branch) std::sort(set.begin(), set.end());
  for (Vertex i = 0; i < k; ++i) model.roots.push_back(i);
  model.depth_bound = 1;
  Orientation orient(g, arcs);
  std::vector<Vertex> ordering = identity_ordering(k);
  std::shuffle(ordering.begin(), ordering.end(), rng);
  RegionSystem rs = subdivision_regions(g);
  Representation rep = build_representation(model, rs, ordering);
  return Instance{rs, g, orient.max_indegree(), orient, model, rep, 1};
}

}  // namespace srig::testing
