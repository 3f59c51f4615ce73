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

#include "srig/representation.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "srig/error.hpp"

namespace srig {

std::vector<Vertex> PathRecord::vertices() const {
  std::vector<Vertex> out = forward;
  out.insert(out.end(), backward.begin(), backward.end());
  return out;
}

const PathRecord& Representation::path(Vertex i, Vertex j) const {
  for (const auto& p : paths) {
    if ((p.i == i && p.j == j) || (p.i == j && p.j == i)) return p;
  }
  throw InvalidArgument("no path for pattern edge " + std::to_string(i) + " " + std::to_string(j));
}

int Representation::max_path_vertices() const {
  int best = 0;
  for (const auto& p : paths) best = std::max(best, static_cast<int>(p.forward.size() + p.backward.size()));
  return best;
}

std::vector<Vertex> identity_ordering(int k) {
  std::vector<Vertex> out(k);
  for (int i = 0; i < k; ++i) out[i] = i;
  return out;
}

namespace {

// Region-tree distance in A_v between A_v ∩ A_parent and A_v ∩ A_other.
int link_distance(const RegionSystem& rs, Vertex v, Vertex parent, Vertex other) {
  const auto& area = rs.region(v);
  return closest_in_region(rs, v, set_intersection(area, rs.region(parent)),
                           set_intersection(area, rs.region(other)))
      .distance;
}

PathRecord choose_path(const Representation& rep, Vertex i, Vertex j) {
  const Graph& g = rep.model.ambient;
  const auto& si = rep.model.branch[i];
  const Vertex ci = rep.model.roots[i];
  const Vertex cj = rep.model.roots[j];
  const BfsTree& ti = rep.trees[i];
  const BfsTree& tj = rep.trees[j];
  auto in_sj = [&](Vertex v) { return rep.owner[v] == j; };

  PathRecord rec;
  rec.i = i;
  rec.j = j;
  bool ci_sees_sj = std::any_of(g.neighbours(ci).begin(), g.neighbours(ci).end(), in_sj);
  if (g.has_edge(ci, cj)) {
    rec.case_tag = 3;
    rec.x = ci;
    rec.y = cj;
  } else if (ci_sees_sj) {
    rec.case_tag = 2;
    rec.x = ci;
    std::tuple<int, int, Vertex> best{-1, -1, -1};
    for (Vertex y : g.neighbours(ci)) {
      if (!in_sj(y)) continue;
      std::tuple<int, int, Vertex> key{tj.depth[y], link_distance(rep.regions, y, tj.parent[y], ci), y};
      if (std::get<2>(best) < 0 || key < best) best = key;
    }
    rec.y = std::get<2>(best);
  } else {
    rec.case_tag = 1;
    int alpha = -1;
    for (Vertex x : si) {
      for (Vertex y : g.neighbours(x)) {
        if (in_sj(y) && (alpha < 0 || ti.depth[x] < alpha)) alpha = ti.depth[x];
      }
    }
    // Joint minimisation over every pair at depth alpha.
    std::tuple<int, Vertex, Vertex> best{-1, -1, -1};
    for (Vertex x : si) {
      if (ti.depth[x] != alpha) continue;
      for (Vertex y : g.neighbours(x)) {
        if (!in_sj(y)) continue;
        std::tuple<int, Vertex, Vertex> key{link_distance(rep.regions, x, ti.parent[x], y), x, y};
        if (std::get<1>(best) < 0 || key < best) best = key;
      }
    }
    rec.x = std::get<1>(best);
    rec.y = std::get<2>(best);
  }
  rec.forward = ti.path_to_root(rec.x);
  std::reverse(rec.forward.begin(), rec.forward.end());
  rec.backward = tj.path_to_root(rec.y);
  return rec;
}

}  // namespace

Representation build_representation(const MinorModel& model, const RegionSystem& rs,
                                    std::vector<Vertex> ordering) {
  if (auto bad = validate_model(model)) {
    throw InvalidArgument("invalid model: " + bad->condition + " (" + bad->witness + ")");
  }
  if (!(rig(rs) == model.ambient)) throw InvalidArgument("model ambient graph is not the region intersection graph");
  const int k = model.pattern.vertex_count();
  Representation rep;
  rep.position.assign(k, -1);
  if (static_cast<int>(ordering.size()) != k) throw InvalidArgument("ordering size mismatch");
  for (int p = 0; p < k; ++p) {
    Vertex v = ordering[p];
    if (v < 0 || v >= k || rep.position[v] >= 0) throw InvalidArgument("ordering is not a permutation");
    rep.position[v] = p;
  }
  rep.model = model;
  rep.regions = rs;
  rep.ordering = std::move(ordering);
  rep.owner.assign(model.ambient.vertex_count(), -1);
  for (int i = 0; i < k; ++i) {
    for (Vertex v : model.branch[i]) rep.owner[v] = i;
    rep.trees.push_back(bfs_tree(model.ambient, model.roots[i], model.branch[i]));
  }
  for (auto [a, b] : model.pattern.edges()) {
    Vertex i = rep.precedes(a, b) ? a : b;
    Vertex j = i == a ? b : a;
    rep.paths.push_back(choose_path(rep, i, j));
  }
  return rep;
}

PatternSubgraph PatternSubgraph::full(const Graph& pattern) {
  return {std::vector<bool>(pattern.vertex_count(), true), pattern.edges()};
}

int PatternSubgraph::vertex_count() const {
  return static_cast<int>(std::count(vertices.begin(), vertices.end(), true));
}

Rational PatternSubgraph::density() const {
  int n = vertex_count();
  return n == 0 ? Rational(0) : make_rational(edge_count(), n);
}

std::vector<Junction> find_junctions(const Representation& rep, const Orientation& orient,
                                     const PatternSubgraph& sub) {
  if (!(orient.base() == rep.model.ambient)) throw InvalidArgument("orientation is over a different graph");
  std::vector<Junction> out;
  for (auto e : sub.edges) {
    const PathRecord& rec = rep.path(e.first, e.second);
    for (Vertex b : rec.vertices()) {
      for (Vertex a : orient.in_neighbours(b)) {
        int block = rep.owner[a];
        if (block < 0 || block == e.first || block == e.second) continue;
        if (!sub.vertices.at(block)) continue;
        out.push_back({{a, b}, make_edge(e.first, e.second), block});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Junction& x, const Junction& y) {
    return std::tie(x.pattern_edge, x.arc) < std::tie(y.pattern_edge, y.arc);
  });
  return out;
}

VertexSet compute_R(const Representation& rep, const Orientation& orient, Edge pattern_edge) {
  PatternSubgraph sub = PatternSubgraph::full(rep.model.pattern);
  sub.edges = {make_edge(pattern_edge.first, pattern_edge.second)};
  VertexSet out;
  for (const auto& j : find_junctions(rep, orient, sub)) out.push_back(j.block);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RestrictedRepresentation restrict_representation(const Representation& rep, const PatternSubgraph& sub) {
  const int k = rep.model.pattern.vertex_count();
  std::vector<int> index(k, -1);
  RestrictedRepresentation out;
  for (Vertex i = 0; i < k; ++i) {
    if (sub.vertices.at(i)) {
      index[i] = static_cast<int>(out.to_original.size());
      out.to_original.push_back(i);
    }
  }
  std::vector<Edge> edges;
  for (auto [a, b] : sub.edges) {
    if (index[a] < 0 || index[b] < 0) throw InvalidArgument("subgraph edge on an unchosen vertex");
    if (!rep.model.pattern.has_edge(a, b)) throw InvalidArgument("subgraph edge not in the pattern");
    edges.push_back(make_edge(index[a], index[b]));
  }
  std::sort(edges.begin(), edges.end());
  Representation& r = out.rep;
  r.model.ambient = rep.model.ambient;
  r.model.pattern = Graph(static_cast<int>(out.to_original.size()), edges);
  r.model.depth_bound = rep.model.depth_bound;
  r.regions = rep.regions;
  r.owner.assign(rep.owner.size(), -1);
  for (Vertex old : out.to_original) {
    r.model.branch.push_back(rep.model.branch[old]);
    r.model.roots.push_back(rep.model.roots[old]);
    r.trees.push_back(rep.trees[old]);
    for (Vertex v : rep.model.branch[old]) r.owner[v] = index[old];
  }
  for (Vertex old : rep.ordering) {
    if (index[old] >= 0) r.ordering.push_back(index[old]);
  }
  r.position.assign(r.ordering.size(), -1);
  for (std::size_t p = 0; p < r.ordering.size(); ++p) r.position[r.ordering[p]] = static_cast<int>(p);
  for (auto [a, b] : r.model.pattern.edges()) {
    PathRecord rec = rep.path(out.to_original[a], out.to_original[b]);
    rec.i = index[rec.i];
    rec.j = index[rec.j];
    r.paths.push_back(std::move(rec));
  }
  return out;
}

std::string format_representation(const Representation& rep) {
  std::ostringstream out;
  for (const auto& p : rep.paths) {
    out << "path " << p.i << ' ' << p.j << " case " << p.case_tag << ":";
    for (Vertex v : p.vertices()) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace srig
