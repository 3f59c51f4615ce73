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

#include <algorithm>
#include <numeric>

#include "srig/error.hpp"
#include "srig/host_extraction.hpp"
#include "srig/sampling.hpp"
#include "support/generators.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

namespace srig {
namespace {

MinorModel identity_model(const Graph& g) {
  MinorModel m;
  m.ambient = g;
  m.pattern = g;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    m.branch.push_back({v});
    m.roots.push_back(v);
  }
  return m;
}


void expect_valid_host_model(const HostModel& hm, const RegionSystem& rs, const MinorModel& pattern_model) {
  MinorModel m = hm.as_model();
  auto violation = validate_model(m);
  EXPECT_FALSE(violation) << (violation ? violation->condition + " " + violation->witness : "");
  ASSERT_EQ(hm.sets.size(), hm.core_to_pattern.size());
  for (std::size_t t = 0; t < hm.sets.size(); ++t) {
    const VertexSet& region = rs.region(pattern_model.roots[hm.core_to_pattern[t]]);
    EXPECT_TRUE(std::binary_search(region.begin(), region.end(), hm.roots[t]));
    EXPECT_TRUE(std::binary_search(hm.sets[t].begin(), hm.sets[t].end(), hm.roots[t]));
  }
  if (hm.host.vertex_count() <= 10 && hm.core.vertex_count() > 0) {
    EXPECT_TRUE(testing::brute_is_minor(hm.host, hm.core));
  }
}

TEST(HostExtractionTest, CoreExamples) {
  auto star = degree2_core(testing::star_graph(3));
  EXPECT_EQ(star.core.vertex_count(), 1);
  EXPECT_EQ(star.to_original, std::vector<Vertex>{0});
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}};
  auto c4 = degree2_core(Graph(5, e));
  EXPECT_EQ(c4.core, testing::cycle_graph(4));
  EXPECT_EQ(c4.to_original, (std::vector<Vertex>{0, 1, 2, 3}));
  auto matching = degree2_core(Graph(4, std::vector<Edge>{{0, 1}, {2, 3}}));
  EXPECT_EQ(matching.core.vertex_count(), 0);
}

TEST(HostExtractionTest, AccountingOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << testing::pair_count(n)); ++mask) {
      Graph g = testing::graph_from_mask(n, mask);
      EXPECT_TRUE(core_edge_accounting_holds(PatternSubgraph::full(g)));
    }
  }
}

TEST(HostExtractionTest, MatchingPatternGivesEmptyModel) {
  std::vector<Edge> e{{0, 1}, {2, 3}};
  Graph g(4, e);
  RegionSystem rs = testing::subdivision_regions(g);
  auto inst = testing::make_instance(rs, identity_model(g), 0);
  auto hm = extract_host_model(inst.rep, inst.orient);
  EXPECT_EQ(hm.core.vertex_count(), 0);
  EXPECT_TRUE(hm.sets.empty());
}

TEST(HostExtractionTest, PathOverPathRegions) {
  // Host h1..h5 as 0..4; regions {h1,h2}, {h2,h3,h4}, {h4,h5}.
  RegionSystem rs(testing::path_graph(5), {{0, 1}, {1, 2, 3}, {3, 4}});
  Graph g = rig(rs);
  ASSERT_EQ(g, testing::path_graph(3));
  auto inst = testing::make_instance(rs, identity_model(g), 0);
  std::vector<Orientation::Arc> arcs{{1, 0}, {1, 2}};
  inst.orient = Orientation(g, arcs);
  auto hm = extract_host_model(inst.rep, inst.orient);
  ASSERT_EQ(hm.core.vertex_count(), 1);
  EXPECT_EQ(hm.core_to_pattern, std::vector<Vertex>{1});
  EXPECT_EQ(hm.roots, std::vector<Vertex>{1});
  expect_valid_host_model(hm, rs, inst.model);
}

TEST(HostExtractionTest, CycleOverCycleRegions) {
  // Host C8 with four overlapping arcs: rig is C4.
  RegionSystem rs(testing::cycle_graph(8), {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {0, 6, 7}});
  Graph g = rig(rs);
  ASSERT_EQ(g, testing::cycle_graph(4));
  auto inst = testing::make_instance(rs, identity_model(g), 0);
  // Singleton branch sets on a cycle always leave an arc into a foreign path.
  EXPECT_FALSE(find_junctions(inst.rep, inst.orient, PatternSubgraph::full(g)).empty());
  EXPECT_THROW(extract_host_model(inst.rep, inst.orient), InvalidArgument);
}

TEST(HostExtractionTest, CycleOfThreeVertexBranchSets) {
  for (int k = 3; k <= 5; ++k) {
    Graph g = testing::cycle_graph(3 * k);
    RegionSystem rs = testing::subdivision_regions(g);
    MinorModel m;
    m.ambient = g;
    m.pattern = testing::cycle_graph(k);
    for (int i = 0; i < k; ++i) {
      m.branch.push_back({3 * i, 3 * i + 1, 3 * i + 2});
      m.roots.push_back(3 * i + 1);
    }
    m.depth_bound = 1;
    auto inst = testing::make_instance(rs, m, 1);
    std::vector<Orientation::Arc> arcs;
    for (int i = 0; i < k; ++i) {
      arcs.emplace_back(3 * i + 1, 3 * i);
      arcs.emplace_back(3 * i + 1, 3 * i + 2);
      arcs.emplace_back(3 * i + 2, (3 * i + 3) % (3 * k));
    }
    inst.orient = Orientation(g, arcs);
    ASSERT_TRUE(find_junctions(inst.rep, inst.orient, PatternSubgraph::full(m.pattern)).empty());
    auto hm = extract_host_model(inst.rep, inst.orient);
    EXPECT_EQ(hm.core, testing::cycle_graph(k));
    EXPECT_EQ(hm.forward.size() + hm.backward.size(), 2u * k);
    expect_valid_host_model(hm, rs, inst.model);
  }
}

TEST(HostExtractionTest, ConstructedJunctionFreeInstances) {
  testing::Rng rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    Graph pattern = testing::random_graph(rng, testing::uniform(rng, 2, 7), 0.6);
    auto inst = testing::junction_free_instance(rng, pattern);
    ASSERT_TRUE(find_junctions(inst.rep, inst.orient, PatternSubgraph::full(pattern)).empty());
    auto hm = extract_host_model(inst.rep, inst.orient);
    // Core labels follow the random ordering.
    EXPECT_EQ(hm.core.edge_count(), degree2_core(pattern).core.edge_count());
    for (auto [a, b] : hm.core.edges()) EXPECT_TRUE(pattern.has_edge(hm.core_to_pattern[a], hm.core_to_pattern[b]));
    EXPECT_EQ(hm.forward.size(), static_cast<std::size_t>(hm.core.edge_count()));
    EXPECT_EQ(hm.backward.size(), static_cast<std::size_t>(hm.core.edge_count()));
    expect_valid_host_model(hm, inst.rs, inst.model);
  }
}

TEST(HostExtractionTest, RejectsPatternsWithJunctions) {
  RegionSystem rs(testing::star_graph(3), {{0, 1}, {0, 2}, {0, 3}});
  Graph k3 = testing::complete_graph(3);
  auto inst = testing::make_instance(rs, identity_model(k3), 0);
  EXPECT_THROW(extract_host_model(inst.rep, inst.orient), InvalidArgument);
}

TEST(HostExtractionTest, SampledSubgraphsOnTreeHosts) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    auto inst = testing::random_instance(rng, testing::uniform(rng, 4, 10), testing::uniform(rng, 3, 8), 4, trial % 3);
    SamplingParams params(std::max(1, inst.rep.max_path_vertices()), inst.d, 500 + trial, 3);
    for (int t = 0; t < params.trials(); ++t) {
      auto sub = sample_subgraph(inst.rep, inst.orient, params, t);
      auto hm = extract_host_model(inst.rep, inst.orient, sub);
      EXPECT_TRUE(core_edge_accounting_holds(sub));
      EXPECT_EQ(hm.core, degree2_core(sub).core);
      expect_valid_host_model(hm, inst.rs, inst.model);
    }
  }
}

TEST(HostExtractionTest, JunctionFreeModelsOnGeneralHosts) {
  testing::Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    Graph host = testing::random_graph(rng, testing::uniform(rng, 5, 9), 0.4);
    if (!is_connected_subset(host, [&] {
          VertexSet all(host.vertex_count());
          std::iota(all.begin(), all.end(), 0);
          return all;
        }())) {
      continue;
    }
    RegionSystem rs = testing::random_regions(rng, host, testing::uniform(rng, 3, 7), 3);
    Graph g = rig(rs);
    MinorModel m = random_shallow_model(g, trial % 2, testing::uniform(rng, 2, g.vertex_count()), 900 + trial);
    auto inst = testing::make_instance(rs, m, trial % 2);
    PatternSubgraph sub = PatternSubgraph::full(m.pattern);
    for (auto j = find_junctions(inst.rep, inst.orient, sub); !j.empty(); j = find_junctions(inst.rep, inst.orient, sub)) {
      std::erase(sub.edges, j.front().pattern_edge);
    }
    auto hm = extract_host_model(inst.rep, inst.orient, sub);
    expect_valid_host_model(hm, rs, inst.model);
  }
}

}  // namespace
}  // namespace srig
