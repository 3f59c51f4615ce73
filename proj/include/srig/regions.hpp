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
#include <string>
#include <vector>

#include "srig/geometry.hpp"
#include "srig/graph.hpp"

namespace srig {

/// A host graph H with one connected region A_v per vertex v of the
/// intersection graph. Each region carries its canonical spanning tree: the
/// BFS tree of H[A_v] rooted at min A_v.
class RegionSystem {
 public:
  RegionSystem() = default;
  /// Stores the regions as given (sorted and de-duplicated). Trees are built
  /// for the regions that are non-empty and connected; call
  /// validate_regions() before relying on them.
  RegionSystem(Graph host, std::vector<VertexSet> regions);

  const Graph& host() const { return host_; }
  int size() const { return static_cast<int>(regions_.size()); }
  const VertexSet& region(Vertex v) const { return regions_.at(v); }
  const std::vector<VertexSet>& regions() const { return regions_; }
  /// Canonical spanning tree of H[A_v]; throws InvalidArgument for an
  /// invalid region.
  const BfsTree& tree(Vertex v) const;

 private:
  Graph host_;
  std::vector<VertexSet> regions_;
  std::vector<std::optional<BfsTree>> trees_;
};

struct RegionViolation {
  int region = -1;
  std::string reason;  // "empty region", "host vertex out of range", "disconnected region"
};

/// nullopt when every invariant holds, else the first violation.
std::optional<RegionViolation> validate_regions(const RegionSystem& rs);

/// The region intersection graph: uv is an edge iff A_u and A_v share a host
/// vertex. Throws InvalidArgument on an invalid system.
Graph rig(const RegionSystem& rs);

/// Host vertices are the crossing points of `arr` (plus one private vertex per
/// segment without crossings); consecutive points along a segment are host
/// edges and region v is the set of points on segment v.
RegionSystem arrangement_to_rig(const Arrangement& arr);

/// Format: a graph block for the host, then `region <v>: <h1> <h2> ...`
/// lines for v = 0..k-1.
RegionSystem parse_region_system(const std::string& text);
std::string format_region_system(const RegionSystem& rs);

/// Vertex set helpers used across the region constructions.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& inner, const VertexSet& outer);

}  // namespace srig

namespace srig {

/// Closest pair between two vertex sets of one region, measured in the
/// region's spanning tree; ties go to the smallest (from, to).
struct TreeLink {
  Vertex from = -1;
  Vertex to = -1;
  int distance = -1;
};

/// Throws InvalidArgument if either set misses the region.
TreeLink closest_in_region(const RegionSystem& rs, Vertex region, const VertexSet& from,
                           const VertexSet& to);

/// Tree path from link.from to link.to inside the region, inclusive.
std::vector<Vertex> region_path(const RegionSystem& rs, Vertex region, const TreeLink& link);

}  // namespace srig
