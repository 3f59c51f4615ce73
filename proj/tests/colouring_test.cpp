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

#include "srig/colouring.hpp"
#include "srig/error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace srig {
namespace {

TEST(ColouringTest, OrderValidation) {
  EXPECT_THROW(VertexOrder({0, 0}), InvalidArgument);
  EXPECT_THROW(VertexOrder({0, 2}), InvalidArgument);
  VertexOrder o({2, 0, 1});
  EXPECT_EQ(o.position(2), 0);
  EXPECT_EQ(o.position(1), 2);
}

TEST(ColouringTest, SreachExamples) {
  Graph c5 = testing::cycle_graph(5);
  auto order = VertexOrder::identity(5);
  EXPECT_EQ(sreach(c5, order, 4, 2), (VertexSet{0, 3, 4}));
  EXPECT_EQ(sreach(c5, order, 0, 2), VertexSet{0});
  EXPECT_EQ(sreach(c5, order, 1, 2), (VertexSet{0, 1}));
  // Path 2 - 3 - 4 - 0: internal vertices after 2.
  EXPECT_EQ(sreach(c5, order, 2, 3), (VertexSet{0, 1, 2}));
}

TEST(ColouringTest, SreachMatchesOracle) {
  testing::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = testing::uniform(rng, 1, 8);
    Graph g = testing::random_graph(rng, n, 0.4);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    VertexOrder order(perm);
    for (int r = 0; r <= 3; ++r) {
      for (Vertex v = 0; v < n; ++v) EXPECT_EQ(sreach(g, order, v, r), testing::brute_sreach(g, perm, v, r));
    }
  }
}

TEST(ColouringTest, ScolExamples) {
  EXPECT_EQ(scol_exact(testing::path_graph(3), 1).value, 2);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(scol_exact(testing::complete_graph(n), 2).value, n);
  EXPECT_EQ(scol_exact(testing::cycle_graph(5), 2).value, 3);
  EXPECT_THROW(scol_exact(testing::path_graph(9), 1), CapExceeded);
}

TEST(ColouringTest, ScolMatchesOracle) {
  testing::Rng rng(4);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = testing::random_graph(rng, testing::uniform(rng, 1, 7), 0.45);
    for (int r = 1; r <= 3; ++r) {
      auto exact = scol_exact(g, r);
      auto brute = testing::brute_scol(g, r);
      EXPECT_EQ(exact.value, brute.value);
      EXPECT_EQ(exact.order.order(), brute.order);
      EXPECT_EQ(scol_of_order(g, exact.order, r), exact.value);
      EXPECT_GE(scol_greedy(g, r).value, exact.value);
    }
    EXPECT_EQ(scol_exact(g, 1).value, degeneracy_order(g).degeneracy + 1);
  }
}

TEST(ColouringTest, AcyclicExamples) {
  EXPECT_EQ(acyclic_chromatic_exact(testing::cycle_graph(4)).value, 3);
  EXPECT_EQ(acyclic_chromatic_exact(testing::cycle_graph(5)).value, 3);
  EXPECT_EQ(acyclic_chromatic_exact(testing::complete_graph(4)).value, 4);
  std::vector<int> two{0, 1, 0, 1};
  EXPECT_FALSE(is_acyclic_colouring(testing::cycle_graph(4), two));
  std::vector<int> clash{0, 0, 1};
  EXPECT_FALSE(is_acyclic_colouring(testing::path_graph(3), clash));
  EXPECT_THROW(acyclic_chromatic_exact(testing::path_graph(11)), CapExceeded);
}

TEST(ColouringTest, AcyclicMatchesOracle) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = testing::random_graph(rng, testing::uniform(rng, 1, 7), 0.5);
    auto result = acyclic_chromatic_exact(g);
    EXPECT_EQ(result.value, testing::brute_acyclic_chromatic(g));
    EXPECT_TRUE(is_acyclic_colouring(g, result.colour));
  }
  for (int trial = 0; trial < 20; ++trial) {
    Graph t = testing::random_tree(rng, testing::uniform(rng, 1, 10));
    EXPECT_LE(acyclic_chromatic_exact(t).value, 2);
  }
}

TEST(ColouringTest, TriangleInequalities) {
  auto report = check_inequalities(testing::complete_graph(3), 1);
  EXPECT_EQ(report.chi_a, 3);
  EXPECT_EQ(report.scol_2, 3);
  EXPECT_EQ(report.scol_r, 3);
  EXPECT_EQ(report.nabla, Rational(1));
  EXPECT_EQ(report.scol_bound, Rational(6));
  EXPECT_TRUE(report.eq1_pass);
  EXPECT_TRUE(report.eq2_pass);
  EXPECT_THROW(check_inequalities(testing::complete_graph(3), 0), InvalidArgument);
}

TEST(ColouringTest, FirstInequalityOnSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << testing::pair_count(n)); ++mask) {
      auto report = check_inequalities(testing::graph_from_mask(n, mask), 2);
      EXPECT_TRUE(report.eq1_pass) << n << ' ' << mask;
    }
  }
}

}  // namespace
}  // namespace srig
