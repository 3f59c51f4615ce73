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

#include "srig/bounds.hpp"
#include "srig/error.hpp"
#include "srig/lowerbound.hpp"
#include "support/oracles.hpp"

namespace srig {
namespace {

TEST(LowerBoundTest, RejectsSmallParameters) {
  EXPECT_THROW(generate_lower_bound(1, 1), InvalidArgument);
  EXPECT_THROW(generate_lower_bound(2, 0), InvalidArgument);
}

TEST(LowerBoundTest, SmallestInstance) {
  auto inst = generate_lower_bound(2, 1);
  EXPECT_EQ(inst.d_prime, 1);
  EXPECT_EQ(inst.r_prime, 3);
  EXPECT_EQ(inst.columns, 3);
  EXPECT_EQ(inst.graph.vertex_count(), 12);
  EXPECT_EQ(inst.graph.edge_count(), 15);
  EXPECT_EQ(inst.alpha(1, 1), 0);
  EXPECT_EQ(inst.gamma(1, 1), 9);
}

TEST(LowerBoundTest, CountsAndOrientation) {
  for (int d = 2; d <= 5; ++d) {
    for (int r = 1; r <= 2; ++r) {
      auto inst = generate_lower_bound(d, r);
      const int dp = d - 1, rp = 2 * r + 1, cols = dp * rp;
      EXPECT_EQ(inst.columns, cols);
      EXPECT_EQ(inst.graph.vertex_count(), cols * rp + rp * dp);
      EXPECT_EQ(inst.graph.edge_count(), cols * (rp - 1) + rp * dp * cols);
      Orientation o = orient_instance(inst);
      EXPECT_EQ(o.max_indegree(), d);
      EXPECT_LE(max_density(inst.graph), Rational(d));
      EXPECT_TRUE(hakimi_orient(inst.graph, d).has_value());
      for (int j = 1; j <= cols; ++j) {
        for (int i = 1; i < rp; ++i) EXPECT_TRUE(inst.graph.has_edge(inst.alpha(i, j), inst.alpha(i + 1, j)));
        auto [row, k] = inst.pairing[j - 1];
        EXPECT_TRUE(inst.graph.has_edge(inst.alpha(row, j), inst.gamma(row, k)));
      }
    }
  }
}

TEST(LowerBoundTest, StringGraphMatchesPairwiseOracle) {
  for (auto [d, r] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{4, 1}}) {
    auto inst = generate_lower_bound(d, r);
    const auto& segs = inst.arrangement.segments();
    for (std::size_t a = 0; a < segs.size(); ++a) {
      for (std::size_t b = a + 1; b < segs.size(); ++b) {
        auto rel = testing::line_oracle(segs[a], segs[b]);
        ASSERT_NE(rel, testing::SegmentRelation::kDegenerate);
        EXPECT_EQ(rel == testing::SegmentRelation::kCrossing,
                  inst.graph.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
      }
    }
    EXPECT_EQ(string_graph(inst.arrangement), inst.graph);
  }
}

TEST(LowerBoundTest, CliqueDensityMatchesClosedForm) {
  for (int d = 2; d <= 5; ++d) {
    for (int r = 1; r <= 3; ++r) {
      auto inst = generate_lower_bound(d, r);
      auto m = clique_model(inst);
      EXPECT_EQ(m.pattern.vertex_count(), inst.columns);
      EXPECT_EQ(m.pattern.edge_count(), inst.columns * (inst.columns - 1) / 2);
      EXPECT_EQ(edge_density(m.pattern), bound_lower(d, r));
      EXPECT_EQ(bound_lower(d, r), make_rational((d - 1) * (2 * r + 1) - 1, 2));
    }
  }
}

TEST(LowerBoundTest, BranchSetsNeedRadiusOneMore) {
  // The branch sets are valid at radius r + 1 and not at r.
  for (int d = 2; d <= 4; ++d) {
    for (int r = 1; r <= 2; ++r) {
      auto inst = generate_lower_bound(d, r);
      auto report = verify_lower_bound(inst);
      EXPECT_EQ(report.max_radius, r + 1);
      EXPECT_TRUE(report.valid_at_max_radius);
      EXPECT_FALSE(report.model_valid);
      EXPECT_TRUE(report.closed_forms_equal);
      EXPECT_TRUE(report.density_meets_bound);
      EXPECT_TRUE(report.hakimi_feasible);
    }
  }
}

TEST(LowerBoundTest, ReportText) {
  auto text = verify_lower_bound(generate_lower_bound(2, 1)).to_text();
  EXPECT_NE(text.find("vertices = 12\n"), std::string::npos);
  EXPECT_NE(text.find("density = 1\n"), std::string::npos);
  EXPECT_NE(text.find("max_radius = 2\n"), std::string::npos);
}

}  // namespace
}  // namespace srig
