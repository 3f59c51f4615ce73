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

#include <string>

#include "srig/srig.h"

namespace {

TEST(CApiTest, GraphRoundTrip) {
  srig_graph_t* g = nullptr;
  ASSERT_EQ(srig_graph_parse("graph 3 3\n0 1\n1 2\n0 2\n", &g), SRIG_OK);
  EXPECT_EQ(srig_graph_vertex_count(g), 3);
  EXPECT_EQ(srig_graph_edge_count(g), 3);
  EXPECT_EQ(srig_graph_has_edge(g, 2, 0), 1);
  int64_t num = 0, den = 0;
  ASSERT_EQ(srig_graph_max_density(g, &num, &den), SRIG_OK);
  EXPECT_EQ(num, 1);
  EXPECT_EQ(den, 1);
  int feasible = -1;
  ASSERT_EQ(srig_graph_hakimi(g, 0, &feasible), SRIG_OK);
  EXPECT_EQ(feasible, 0);
  ASSERT_EQ(srig_graph_hakimi(g, 1, &feasible), SRIG_OK);
  EXPECT_EQ(feasible, 1);
  srig_graph_free(g);
}

TEST(CApiTest, CreateFromEdges) {
  const int edges[] = {0, 1, 1, 2, 2, 3, 3, 0};
  srig_graph_t* g = nullptr;
  ASSERT_EQ(srig_graph_create(4, edges, 4, &g), SRIG_OK);
  EXPECT_EQ(srig_graph_edge_count(g), 4);
  srig_graph_free(g);
  const int bad[] = {0, 7};
  EXPECT_EQ(srig_graph_create(4, bad, 1, &g), SRIG_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(srig_last_error()), "");
}

TEST(CApiTest, ParseErrors) {
  srig_graph_t* g = nullptr;
  EXPECT_EQ(srig_graph_parse("graph 2 1\n0\n", &g), SRIG_ERR_PARSE);
  EXPECT_EQ(g, nullptr);
  EXPECT_EQ(srig_graph_parse(nullptr, &g), SRIG_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(srig_status_name(SRIG_ERR_CAP_EXCEEDED), "cap exceeded");
  EXPECT_NE(std::string(srig_version()), "");
}

TEST(CApiTest, ArrangementToGraph) {
  srig_arrangement_t* a = nullptr;
  ASSERT_EQ(srig_arrangement_parse("segments 3\n0 0 0 4\n-1 1 5 1\n4 0 4 4\n", &a), SRIG_OK);
  EXPECT_EQ(srig_arrangement_size(a), 3);
  srig_graph_t* g = nullptr;
  ASSERT_EQ(srig_arrangement_string_graph(a, &g), SRIG_OK);
  EXPECT_EQ(srig_graph_edge_count(g), 2);
  EXPECT_EQ(srig_graph_has_edge(g, 0, 2), 0);
  srig_regions_t* rs = nullptr;
  ASSERT_EQ(srig_arrangement_to_regions(a, &rs), SRIG_OK);
  EXPECT_EQ(srig_regions_size(rs), 3);
  srig_graph_t* h = nullptr;
  ASSERT_EQ(srig_regions_rig(rs, &h), SRIG_OK);
  EXPECT_EQ(srig_graph_edge_count(h), 2);
  srig_graph_free(h);
  srig_regions_free(rs);
  srig_graph_free(g);
  srig_arrangement_free(a);
  EXPECT_EQ(srig_arrangement_parse("segments 2\n0 0 2 0\n1 0 3 0\n", &a), SRIG_ERR_PARSE);
}

TEST(CApiTest, RunCommands) {
  srig_options opts;
  srig_options_init(&opts);
  EXPECT_EQ(opts.r, -1);
  EXPECT_EQ(opts.t, nullptr);
  opts.d = 2;
  opts.r = 1;
  srig_report_t* report = nullptr;
  ASSERT_EQ(srig_run("lowerbound", nullptr, &opts, &report), SRIG_OK);
  std::string text = srig_report_text(report);
  EXPECT_NE(text.find("vertices = 12\n"), std::string::npos);
  EXPECT_EQ(srig_report_passed(report), 0);
  srig_report_free(report);

  srig_options_init(&opts);
  opts.d = 2;
  opts.r = 1;
  opts.t = "3";
  ASSERT_EQ(srig_run("bounds", nullptr, &opts, &report), SRIG_OK);
  EXPECT_EQ(srig_report_passed(report), 1);
  srig_report_free(report);

  EXPECT_EQ(srig_run("nope", nullptr, &opts, &report), SRIG_ERR_INVALID_ARGUMENT);
  srig_options_init(&opts);
  opts.r = 1;
  EXPECT_EQ(srig_run("sample", "graph 2 1\n0 1\n", &opts, &report), SRIG_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, RunIsDeterministic) {
  std::string fixed = "graph 6 5\n0 1\n1 2\n2 3\n3 4\n4 5\nregion 0: 0 1\nregion 1: 1 2\nregion 2: 2 3 4\nregion 3: 4 5\n";
  srig_options opts;
  srig_options_init(&opts);
  opts.r = 1;
  opts.has_seed = 1;
  opts.seed = 5;
  opts.trials = 3;
  std::string first, second;
  for (std::string* out : {&first, &second}) {
    srig_report_t* report = nullptr;
    ASSERT_EQ(srig_run("pipeline", fixed.c_str(), &opts, &report), SRIG_OK) << srig_last_error();
    *out = srig_report_text(report);
    EXPECT_EQ(srig_report_passed(report), 1);
    srig_report_free(report);
  }
  EXPECT_EQ(first, second);
}

TEST(CApiTest, CapExceeded) {
  srig_options opts;
  srig_options_init(&opts);
  opts.r = 1;
  opts.cap = 3;
  srig_report_t* report = nullptr;
  EXPECT_EQ(srig_run("scol", "graph 5 0\n", &opts, &report), SRIG_ERR_CAP_EXCEEDED);
}

}  // namespace
