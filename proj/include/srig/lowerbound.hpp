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

#include <string>
#include <utility>
#include <vector>

#include "srig/geometry.hpp"
#include "srig/graph.hpp"
#include "srig/minor.hpp"
#include "srig/rational.hpp"

namespace srig {

/// Segment arrangement whose string graph has maximum density at most d and
/// contains a dense clique minor of small depth.
///
/// Rows i = 1..r', columns j = 1..d'r', with d' = d-1 and r' = 2r+1. Every
/// column is a path of r' slanted segments alpha(i, j); the d' horizontal
/// segments gamma(i, k) of row i cross every alpha of that row.
struct LowerBoundInstance {
  int d = 0;
  int r = 0;
  int d_prime = 0;
  int r_prime = 0;
  int columns = 0;  // d' * r'
  Arrangement arrangement;
  Graph graph;
  /// pairing[j-1] = (row, k) of the gamma assigned to column j.
  std::vector<std::pair<int, int>> pairing;

  Vertex alpha(int i, int j) const { return (j - 1) * r_prime + (i - 1); }
  Vertex gamma(int i, int k) const { return columns * r_prime + (i - 1) * d_prime + (k - 1); }
};

/// Builds the instance and checks its string graph edge by edge.
/// Throws InvalidArgument unless d >= 2 and r >= 1.
LowerBoundInstance generate_lower_bound(int d, int r);

/// gamma -> alpha, and alpha(i, j) -> alpha(i+1, j) inside each column.
Orientation orient_instance(const LowerBoundInstance& inst);

/// Model of K_{d'r'} with S_j = column j plus its gamma, rooted at the middle
/// alpha (or a centre of S_j if that is too far), depth bound r.
MinorModel clique_model(const LowerBoundInstance& inst);

struct LowerBoundReport {
  int d = 0;
  int r = 0;
  int vertices = 0;
  int edges = 0;
  bool hakimi_feasible = false;
  int max_indegree = 0;
  int clique_size = 0;
  bool model_valid = false;  // as a depth-r model
  std::string model_violation;
  int max_radius = 0;
  bool valid_at_max_radius = false;
  Rational density;
  Rational bound;
  bool closed_forms_equal = false;
  bool density_meets_bound = false;
  bool pass = false;

  std::string to_text() const;
};

LowerBoundReport verify_lower_bound(const LowerBoundInstance& inst);

}  // namespace srig
