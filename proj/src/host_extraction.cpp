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

#include "srig/host_extraction.hpp"

#include <algorithm>
#include <sstream>

#include "srig/error.hpp"
#include "srig/regions.hpp"

namespace srig {

namespace {

std::string list(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < s.size(); ++k) out << (k ? "," : "") << s[k];
  out << '}';
  return out.str();
}

// Least host edge (u, w) with u in `from` and w in `to`, or {-1, -1}.
Edge least_edge_between(const Graph& h, const VertexSet& from, const VertexSet& to) {
  for (Vertex u : from) {
    for (Vertex w : h.neighbours(u)) {
      if (std::binary_search(to.begin(), to.end(), w)) return {u, w};
    }
  }
  return {-1, -1};
}

void require(bool ok, const std::string& claim, const std::string& witness) {
  if (!ok) throw ClaimViolation(claim, witness);
}

}  // namespace

VertexSet region_union(const RegionSystem& rs, const std::vector<Vertex>& vertices) {
  VertexSet out;
  for (Vertex t : vertices) out = set_union(out, rs.region(t));
  return out;
}

CoreGraph degree2_core(const Graph& j) {
  return degree2_core(PatternSubgraph::full(j));
}

CoreGraph degree2_core(const PatternSubgraph& sub) {
  std::vector<int> degree(sub.vertices.size(), 0);
  for (auto [a, b] : sub.edges) {
    ++degree[a];
    ++degree[b];
  }
  CoreGraph out;
  std::vector<int> index(sub.vertices.size(), -1);
  for (std::size_t v = 0; v < sub.vertices.size(); ++v) {
    if (sub.vertices[v] && degree[v] >= 2) {
      index[v] = static_cast<int>(out.to_original.size());
      out.to_original.push_back(static_cast<Vertex>(v));
    }
  }
  std::vector<Edge> edges;
  for (auto [a, b] : sub.edges) {
    if (index[a] >= 0 && index[b] >= 0) edges.push_back(make_edge(index[a], index[b]));
  }
  out.core = Graph(static_cast<int>(out.to_original.size()), edges);
  return out;
}

bool core_edge_accounting_holds(const PatternSubgraph& sub) {
  CoreGraph core = degree2_core(sub);
  int low_degree = sub.vertex_count() - core.core.vertex_count();
  return sub.edge_count() <= core.core.edge_count() + low_degree;
}

MinorModel HostModel::as_model() const {
  MinorModel m;
  m.ambient = host;
  m.pattern = core;
  m.branch = sets;
  m.roots = roots;
  return m;
}

ForwardSet build_forward_set(const Representation& rep, Vertex i, Vertex j) {
  const RegionSystem& rs = rep.regions;
  const PathRecord& rec = rep.path(i, j);
  if (rec.i != i) throw InvalidArgument("forward sets need i before j in the ordering");
  const std::string where = "edge " + std::to_string(i) + " " + std::to_string(j);
  ForwardSet out;
  out.case_tag = rec.case_tag;
  const VertexSet& ci_region = rs.region(rep.model.roots[i]);
  const VertexSet& y_region = rs.region(rec.y);
  if (rec.case_tag == 3) {
    throw ClaimViolation("roots not adjacent", where + " has adjacent roots (case 3)");
  }
  if (rec.case_tag == 2) {
    out.set = ci_region;
  } else {
    require(rec.forward.size() >= 2, "case 1 path", where + " has x = c_i");
    const Vertex x = rec.x;
    const Vertex x_up = rec.forward[rec.forward.size() - 2];
    std::vector<Vertex> before_x(rec.forward.begin(), rec.forward.end() - 1);
    out.set = region_union(rs, before_x);
    const VertexSet& x_region = rs.region(x);
    TreeLink link = closest_in_region(rs, x, set_intersection(x_region, rs.region(x_up)),
                                      set_intersection(x_region, y_region));
    auto walk = region_path(rs, x, link);
    walk.pop_back();  // the endpoint inside A_y
    std::sort(walk.begin(), walk.end());
    out.set = set_union(out.set, walk);

    VertexSet sj_regions = region_union(rs, rep.model.branch[j]);
    VertexSet hit = set_intersection(out.set, sj_regions);
    require(hit.empty(), "forward set avoids S_j regions", where + " meets the regions of S_j at " + list(hit));
    out.link = least_edge_between(rs.host(), out.set, y_region);
    require(out.link.first >= 0, "case 1 link edge", where + " has no host edge into A_y");
  }
  require(is_subset(ci_region, out.set), "forward set contains A_{c_i}", where);
  require(is_connected_subset(rs.host(), out.set), "forward set connected", where + " set " + list(out.set));
  return out;
}

BackwardSet build_backward_set(const Representation& rep, Vertex i, Vertex j, const VertexSet& b_i) {
  const RegionSystem& rs = rep.regions;
  const PathRecord& rec = rep.path(i, j);
  if (rec.i != i) throw InvalidArgument("backward sets need i before j in the ordering");
  const std::string where = "edge " + std::to_string(i) + " " + std::to_string(j);
  BackwardSet out;
  // rec.backward runs y .. c_j; walk it from the c_j end.
  std::vector<Vertex> from_root(rec.backward.rbegin(), rec.backward.rend());
  VertexSet whole = region_union(rs, from_root);
  if (!intersects(whole, b_i)) {
    out.case_tag = 'A';
    out.set = whole;
  } else {
    out.case_tag = 'B';
    std::size_t k = 0;
    while (!intersects(rs.region(from_root[k]), b_i)) ++k;
    require(k > 0, "case B z differs from c_j", where + " has B_i meeting A_{c_j}");
    out.z = from_root[k];
    const Vertex z_up = from_root[k - 1];
    std::vector<Vertex> prefix(from_root.begin(), from_root.begin() + static_cast<long>(k));
    out.set = region_union(rs, prefix);
    const VertexSet& z_region = rs.region(out.z);
    TreeLink link = closest_in_region(rs, out.z, set_intersection(z_region, rs.region(z_up)),
                                      set_intersection(z_region, b_i));
    auto walk = region_path(rs, out.z, link);
    walk.pop_back();  // the endpoint inside B_i
    std::sort(walk.begin(), walk.end());
    out.set = set_union(out.set, walk);
  }
  VertexSet overlap = set_intersection(out.set, b_i);
  require(overlap.empty(), "backward set disjoint and linked", where + " B_ji meets B_i at " + list(overlap));
  out.link = least_edge_between(rs.host(), out.set, b_i);
  require(out.link.first >= 0, "backward set disjoint and linked", where + " has no host edge between B_ji and B_i");
  require(is_subset(rs.region(rep.model.roots[j]), out.set), "backward set contains A_{c_j}", where);
  require(is_connected_subset(rs.host(), out.set), "backward set connected", where + " set " + list(out.set));
  return out;
}

namespace {

HostModel run_induction(const Representation& rep) {
  const RegionSystem& rs = rep.regions;
  const Graph& h = rs.host();
  const Graph& g = rep.model.ambient;
  HostModel out;
  out.host = h;

  CoreGraph core = degree2_core(rep.model.pattern);
  // Core labels follow the ordering.
  for (Vertex v : rep.ordering) {
    if (std::binary_search(core.to_original.begin(), core.to_original.end(), v)) out.core_to_pattern.push_back(v);
  }
  const int k = static_cast<int>(out.core_to_pattern.size());
  std::vector<int> label(rep.model.pattern.vertex_count(), -1);
  for (int t = 0; t < k; ++t) label[out.core_to_pattern[t]] = t;
  std::vector<Edge> core_edges;
  for (auto [a, b] : rep.model.pattern.edges()) {
    if (label[a] >= 0 && label[b] >= 0) core_edges.push_back(make_edge(label[a], label[b]));
  }
  out.core = Graph(k, core_edges);
  if (k == 0) return out;

  auto root_of = [&](int t) { return rep.model.roots[out.core_to_pattern[t]]; };
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      require(!g.has_edge(root_of(a), root_of(b)), "roots not adjacent",
              "roots " + std::to_string(root_of(a)) + " and " + std::to_string(root_of(b)) + " are adjacent");
    }
  }

  out.lower.resize(k);
  for (int t = 0; t < k; ++t) out.lower[t] = rs.region(root_of(t));
  for (auto [a, b] : out.core.edges()) {
    ForwardSet f = build_forward_set(rep, out.core_to_pattern[a], out.core_to_pattern[b]);
    f.i = a;
    f.j = b;
    out.lower[a] = set_union(out.lower[a], f.set);
    out.forward.push_back(std::move(f));
  }
  for (int a = 0; a < k; ++a) {
    require(is_connected_subset(h, out.lower[a]), "lower set connected", "B_" + std::to_string(a) + "^<");
    for (int b = a + 1; b < k; ++b) {
      VertexSet both = set_intersection(out.lower[a], out.lower[b]);
      require(both.empty(), "lower sets disjoint",
              "B_" + std::to_string(a) + "^< and B_" + std::to_string(b) + "^< share " + list(both));
    }
  }

  out.sets.assign(k, VertexSet{});
  out.upper.assign(k, VertexSet{});
  out.sets[0] = out.lower[0];
  for (int j = 1; j < k; ++j) {
    for (Vertex i : out.core.neighbours(j)) {
      if (i >= j) continue;
      BackwardSet bs = build_backward_set(rep, out.core_to_pattern[i], out.core_to_pattern[j], out.sets[i]);
      bs.i = i;
      bs.j = j;
      out.upper[j] = set_union(out.upper[j], bs.set);
      out.backward.push_back(std::move(bs));
    }
    out.sets[j] = set_union(out.lower[j], out.upper[j]);
    const std::string bj = "B_" + std::to_string(j);
    for (int i = 0; i < j; ++i) {
      VertexSet both = set_intersection(out.sets[j], out.sets[i]);
      require(both.empty(), "backward set avoids B_i", bj + " meets B_" + std::to_string(i) + " at " + list(both));
    }
    for (int later = j + 1; later < k; ++later) {
      VertexSet both = set_intersection(out.sets[j], out.lower[later]);
      require(both.empty(), "backward set avoids lower set", bj + " meets B_" + std::to_string(later) + "^< at " + list(both));
    }
    // Invariants for the prefix 0..j.
    require(!out.sets[j].empty() && is_connected_subset(h, out.sets[j]), "branch set connected",
            bj + " empty or disconnected");
    for (Vertex i : out.core.neighbours(j)) {
      if (i < j) {
        require(least_edge_between(h, out.sets[j], out.sets[i]).first >= 0, "branch sets linked",
                bj + " does not touch B_" + std::to_string(i));
      }
    }
    require(is_subset(out.lower[j], out.sets[j]), "lower set inside branch set", bj);
  }
  for (int t = 0; t < k; ++t) out.roots.push_back(rs.region(root_of(t)).front());

  if (auto bad = validate_model(out.as_model())) {
    throw ClaimViolation("host model", bad->condition + " " + bad->witness);
  }
  return out;
}

}  // namespace

HostModel extract_host_model(const Representation& rep, const Orientation& orient) {
  auto junctions = find_junctions(rep, orient, PatternSubgraph::full(rep.model.pattern));
  if (!junctions.empty()) {
    const auto& w = junctions.front();
    throw InvalidArgument("pattern is not junction-free: arc " + std::to_string(w.arc.first) + "->" +
                          std::to_string(w.arc.second) + " against edge " + std::to_string(w.pattern_edge.first) +
                          " " + std::to_string(w.pattern_edge.second));
  }
  return run_induction(rep);
}

HostModel extract_host_model(const Representation& rep, const Orientation& orient, const PatternSubgraph& sub) {
  RestrictedRepresentation restricted = restrict_representation(rep, sub);
  HostModel out = extract_host_model(restricted.rep, orient);
  for (Vertex& v : out.core_to_pattern) v = restricted.to_original[v];
  return out;
}

}  // namespace srig
