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

#include <cstdint>
#include <optional>
#include <string>

#include "srig/rational.hpp"
#include "srig/regions.hpp"

namespace srig {

struct PipelineConfig {
  int r = 0;
  std::uint64_t seed = 0;
  int trials = 20;
  /// Density promise for the host class; computed when the host is small.
  std::optional<Rational> t;
  int host_cap = 9;
  /// Models are enumerated exhaustively up to this many graph vertices.
  int exhaustive_limit = 6;
};

struct PipelineReport {
  int host_vertices = 0;
  int graph_vertices = 0;
  int graph_edges = 0;
  int d = 0;
  int r = 0;
  int k = 0;
  Rational t;
  bool t_computed = false;
  bool exhaustive = false;
  int models = 0;
  int subgraphs = 0;
  int host_models = 0;
  Rational max_pattern_density;
  Rational bound_coefficient;
  Rational bound_upper;
  bool all_junction_free = true;
  bool accounting_holds = true;
  bool core_within_t = true;
  bool density_checks_pass = true;
  bool within_bound = true;
  bool pass = false;

  std::string to_text() const;
};

/// End-to-end run on the region intersection graph of `rs`: orient, build
/// r-shallow models, represent them, sample junction-free subgraphs, extract
/// host models and compare every pattern density with t((2r+2)d+1)e.
/// Stage failures throw ClaimViolation whose claim names the stage.
PipelineReport run_pipeline(const RegionSystem& rs, const PipelineConfig& config);

}  // namespace srig
