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

#include <gtest/gtest.h>

#include "srig/error.hpp"
#include "srig/lowerbound.hpp"
#include "srig/regions.hpp"
#include "support/generators.hpp"

namespace srig {
namespace {

using testing::path_graph;
using testing::star_graph;

Segment seg(int x1, int y1, int x2, int y2) { return Segment{Point{x1, y1}, Point{x2, y2}}; }

TEST(RegionsTest, ValidateExamples) {
  RegionSystem singles(path_graph(3), {{0}, {1}, {2}});
  EXPECT_FALSE(validate_regions(singles));

  RegionSystem empty(path_graph(3), {{0}, {}});
  auto e = validate_regions(empty);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->region, 1);
  EXPECT_EQ(e->reason, "empty region");

  RegionSystem gap(path_graph(3), {{0, 2}});
  auto g = validate_regions(gap);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->reason, "disconnected region");

  RegionSystem range(path_graph(3), {{0, 7}});
  EXPECT_EQ(validate_regions(range)->reason, "host vertex out of range");
  EXPECT_THROW(range.tree(0), InvalidArgument);
}

TEST(RegionsTest, RigExamples) {
  std::vector<Edge> k2{{0, 1}};
  EXPECT_EQ(rig(RegionSystem(path_graph(3), {{0, 1}, {1, 2}})), Graph(2, k2));
  Graph k3 = rig(RegionSystem(star_graph(3), {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(k3.edge_count(), 3);
  EXPECT_EQ(rig(RegionSystem(path_graph(4), {{0}, {2, 3}})).edge_count(), 0);
}

TEST(RegionsTest, RegionTreesAreCanonical) {
  testing::Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    Graph host = testing::random_graph(rng, 9, 0.35);
    RegionSystem rs = testing::random_regions(rng, host, 5, 5);
    for (int v = 0; v < rs.size(); ++v) {
      const auto& area = rs.region(v);
      const BfsTree& tree = rs.tree(v);
      EXPECT_EQ(tree.root, area.front());
      int tree_edges = 0;
      for (Vertex h : area) {
        if (tree.parent[h] < 0) continue;
        ++tree_edges;
        EXPECT_TRUE(host.has_edge(h, tree.parent[h]));
        EXPECT_TRUE(std::binary_search(area.begin(), area.end(), tree.parent[h]));
      }
      EXPECT_EQ(tree_edges, static_cast<int>(area.size()) - 1);
    }
  }
}

TEST(RegionsTest, DeletingARegionDeletesItsVertex) {
  testing::Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    RegionSystem rs = testing::random_tree_regions(rng, 10, 6, 4);
    Graph g = rig(rs);
    int drop = testing::uniform(rng, 0, rs.size() - 1);
    std::vector<VertexSet> rest;
    std::vector<Vertex> keep;
    for (int v = 0; v < rs.size(); ++v) {
      if (v == drop) continue;
      rest.push_back(rs.region(v));
      keep.push_back(v);
    }
    EXPECT_EQ(rig(RegionSystem(rs.host(), rest)), g.induced(keep));
  }
}

TEST(RegionsTest, ArrangementExamples) {
  RegionSystem two = arrangement_to_rig(Arrangement({seg(0, 0, 2, 2), seg(0, 2, 2, 0)}));
  EXPECT_EQ(two.host().vertex_count(), 1);
  EXPECT_EQ(two.region(0), VertexSet{0});
  EXPECT_EQ(two.region(1), VertexSet{0});

  Arrangement chain({seg(0, 0, 0, 4), seg(-1, 1, 5, 1), seg(4, 0, 4, 4)});
  RegionSystem rs = arrangement_to_rig(chain);
  EXPECT_EQ(rs.host(), path_graph(2));
  EXPECT_EQ(rs.region(0), VertexSet{0});
  EXPECT_EQ(rs.region(1), (VertexSet{0, 1}));
  EXPECT_EQ(rs.region(2), VertexSet{1});
  EXPECT_EQ(rig(rs), path_graph(3));
}

TEST(RegionsTest, IsolatedSegmentsGetPrivateVertices) {
  RegionSystem rs = arrangement_to_rig(Arrangement({seg(0, 0, 1, 0), seg(0, 2, 2, 4), seg(0, 4, 2, 2)}));
  EXPECT_EQ(rs.host().vertex_count(), 2);
  EXPECT_EQ(rs.region(0), VertexSet{0});
  EXPECT_EQ(rs.region(1), VertexSet{1});
  EXPECT_EQ(rs.region(2), VertexSet{1});
}

TEST(RegionsTest, LowerBoundArrangementRigIsItsStringGraph) {
  auto inst = generate_lower_bound(5, 1);
  EXPECT_EQ(rig(arrangement_to_rig(inst.arrangement)), inst.graph);
}

TEST(RegionsTest, RigOfArrangementMatchesStringGraph) {
  testing::Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Arrangement arr = testing::random_arrangement(rng, testing::uniform(rng, 1, 12), 25);
    RegionSystem rs = arrangement_to_rig(arr);
    EXPECT_FALSE(validate_regions(rs));
    EXPECT_EQ(rig(rs), string_graph(arr));
  }
}

TEST(RegionsTest, ParseFormatRoundTrip) {
  RegionSystem rs(path_graph(4), {{0, 1}, {1, 2, 3}, {3}});
  RegionSystem again = parse_region_system(format_region_system(rs));
  EXPECT_EQ(again.host(), rs.host());
  EXPECT_EQ(again.regions(), rs.regions());
  EXPECT_THROW(parse_region_system("graph 2 1\n0 1\nregion 1: 0\n"), ParseError);
  EXPECT_THROW(parse_region_system("graph 2 1\n0 1\nregion 0: 0 9\n"), ParseError);
  EXPECT_THROW(parse_region_system("graph 2 1\n0 1\nregion 0 0\n"), ParseError);
}

TEST(RegionsTest, ClosestPairAndPath) {
  RegionSystem rs(path_graph(6), {{0, 1, 2, 3, 4, 5}});
  TreeLink link = closest_in_region(rs, 0, {0, 4}, {2, 5});
  EXPECT_EQ(link.from, 4);
  EXPECT_EQ(link.to, 5);
  EXPECT_EQ(link.distance, 1);
  TreeLink tie = closest_in_region(rs, 0, {1, 3}, {2});
  EXPECT_EQ(tie.from, 1);
  EXPECT_EQ(region_path(rs, 0, closest_in_region(rs, 0, {0}, {3})), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_THROW(closest_in_region(rs, 0, {}, {1}), InvalidArgument);
}

TEST(RegionsTest, SetHelpers) {
  EXPECT_EQ(set_union({1, 3}, {2, 3}), (VertexSet{1, 2, 3}));
  EXPECT_EQ(set_intersection({1, 3}, {2, 3}), VertexSet{3});
  EXPECT_TRUE(intersects({1, 3}, {3}));
  EXPECT_FALSE(intersects({1}, {2}));
  EXPECT_TRUE(is_subset({1}, {1, 2}));
  EXPECT_FALSE(is_subset({0, 1}, {1, 2}));
}

}  // namespace
}  // namespace srig
