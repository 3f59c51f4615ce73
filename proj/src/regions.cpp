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

#include "srig/regions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "graph_block.hpp"
#include "srig/error.hpp"

namespace srig {

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool is_subset(const VertexSet& inner, const VertexSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

RegionSystem::RegionSystem(Graph host, std::vector<VertexSet> regions)
    : host_(std::move(host)), regions_(std::move(regions)) {
  trees_.resize(regions_.size());
  for (std::size_t v = 0; v < regions_.size(); ++v) {
    auto& r = regions_[v];
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    bool in_range = std::all_of(r.begin(), r.end(), [&](Vertex h) { return host_.contains(h); });
    if (!r.empty() && in_range && is_connected_subset(host_, r)) {
      trees_[v] = bfs_tree(host_, r.front(), r);
    }
  }
}

const BfsTree& RegionSystem::tree(Vertex v) const {
  const auto& t = trees_.at(v);
  if (!t) throw InvalidArgument("region " + std::to_string(v) + " is invalid");
  return *t;
}

std::optional<RegionViolation> validate_regions(const RegionSystem& rs) {
  const Graph& h = rs.host();
  for (int v = 0; v < rs.size(); ++v) {
    const auto& r = rs.region(v);
    if (r.empty()) return RegionViolation{v, "empty region"};
    for (Vertex x : r) {
      if (!h.contains(x)) return RegionViolation{v, "host vertex out of range"};
    }
    if (!is_connected_subset(h, r)) return RegionViolation{v, "disconnected region"};
    const BfsTree& t = rs.tree(v);
    int tree_edges = 0;
    for (Vertex x : r) {
      if (x == t.root) continue;
      Vertex p = t.parent[x];
      if (p < 0 || !std::binary_search(r.begin(), r.end(), p) || !h.has_edge(x, p)) {
        return RegionViolation{v, "region tree does not span region"};
      }
      ++tree_edges;
    }
    if (t.root != r.front() || tree_edges != static_cast<int>(r.size()) - 1) {
      return RegionViolation{v, "region tree does not span region"};
    }
  }
  return std::nullopt;
}

Graph rig(const RegionSystem& rs) {
  if (auto bad = validate_regions(rs)) {
    throw InvalidArgument("region " + std::to_string(bad->region) + ": " + bad->reason);
  }
  // Bucket regions by host vertex so the cost is linear in incidences.
  std::vector<std::vector<Vertex>> at(rs.host().vertex_count());
  for (int v = 0; v < rs.size(); ++v) {
    for (Vertex h : rs.region(v)) at[h].push_back(v);
  }
  std::vector<Edge> edges;
  for (const auto& bucket : at) {
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      for (std::size_t j = i + 1; j < bucket.size(); ++j) edges.push_back(make_edge(bucket[i], bucket[j]));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(rs.size(), edges);
}

RegionSystem arrangement_to_rig(const Arrangement& arr) {
  const auto& segs = arr.segments();
  const int n = arr.size();
  // Points on each segment, sorted by position along it.
  std::vector<std::vector<std::pair<Rational, RationalPoint>>> on(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!segments_intersect(segs[i], segs[j])) continue;
      RationalPoint pt = crossing_point(segs[i], segs[j]);
      on[i].emplace_back(position_along(segs[i], pt), pt);
      on[j].emplace_back(position_along(segs[j], pt), pt);
    }
  }
  std::map<RationalPoint, Vertex> ids;
  std::vector<VertexSet> regions(n);
  std::vector<Edge> edges;
  int next_id = 0;
  for (int i = 0; i < n; ++i) {
    auto& pts = on[i];
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const auto& a, const auto& b) { return a.second == b.second; }),
              pts.end());
    if (pts.empty()) {
      regions[i].push_back(next_id++);  // private vertex for a segment without crossings
      continue;
    }
    Vertex prev = -1;
    for (const auto& [pos, pt] : pts) {
      auto [it, inserted] = ids.emplace(pt, next_id);
      if (inserted) ++next_id;
      regions[i].push_back(it->second);
      if (prev >= 0) edges.push_back(make_edge(prev, it->second));
      prev = it->second;
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return RegionSystem(Graph(next_id, edges), std::move(regions));
}

RegionSystem parse_region_system(const std::string& text) {
  detail::LineReader reader(text);
  Graph host = detail::read_graph_block(reader);
  std::vector<VertexSet> regions;
  while (!reader.done()) {
    auto tok = reader.next_tokens();
    if (tok.size() < 2 || tok[0] != "region" || tok[1].empty() || tok[1].back() != ':') {
      reader.fail("expected 'region <v>: <h1> ...'");
    }
    long long v = detail::parse_integer(tok[1].substr(0, tok[1].size() - 1), reader);
    if (v != static_cast<long long>(regions.size())) reader.fail("regions must be listed in order 0, 1, ...");
    VertexSet r;
    for (std::size_t k = 2; k < tok.size(); ++k) {
      long long h = detail::parse_integer(tok[k], reader);
      if (h < 0 || h >= host.vertex_count()) reader.fail("host vertex out of range");
      r.push_back(static_cast<Vertex>(h));
    }
    regions.push_back(std::move(r));
  }
  return RegionSystem(std::move(host), std::move(regions));
}

std::string format_region_system(const RegionSystem& rs) {
  std::ostringstream out;
  out << format_graph(rs.host());
  for (int v = 0; v < rs.size(); ++v) {
    out << "region " << v << ":";
    for (Vertex h : rs.region(v)) out << ' ' << h;
    out << '\n';
  }
  return out.str();
}

}  // namespace srig

namespace srig {

TreeLink closest_in_region(const RegionSystem& rs, Vertex region, const VertexSet& from,
                           const VertexSet& to) {
  const auto& area = rs.region(region);
  const BfsTree& tree = rs.tree(region);
  TreeLink best;
  for (Vertex u : from) {
    if (!std::binary_search(area.begin(), area.end(), u)) continue;
    for (Vertex w : to) {
      if (!std::binary_search(area.begin(), area.end(), w)) continue;
      int d = tree.distance(u, w);
      if (best.distance < 0 || d < best.distance) best = {u, w, d};
    }
  }
  if (best.distance < 0) {
    throw InvalidArgument("vertex sets do not meet region " + std::to_string(region));
  }
  return best;
}

std::vector<Vertex> region_path(const RegionSystem& rs, Vertex region, const TreeLink& link) {
  return rs.tree(region).path(link.from, link.to);
}

}  // namespace srig
