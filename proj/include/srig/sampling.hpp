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
#include <string>
#include <vector>

#include "srig/graph.hpp"
#include "srig/rational.hpp"
#include "srig/representation.hpp"

namespace srig {

/// Parameters of the junction-free sampler. The selection probability is
/// always 1/(k*d + 1).
class SamplingParams {
 public:
  /// Throws InvalidArgument unless k >= 1, d >= 0 and trials >= 1.
  SamplingParams(int k, int d, std::uint64_t seed, int trials);

  int k() const { return k_; }
  int d() const { return d_; }
  std::uint64_t seed() const { return seed_; }
  int trials() const { return trials_; }
  const Rational& p() const { return p_; }

 private:
  int k_;
  int d_;
  std::uint64_t seed_;
  int trials_;
  Rational p_;
};

/// (a+1)^(a+1) / a^a with 0^0 = 1. Throws InvalidArgument for a < 0.
Rational eta(int a);

/// eta(a) < e (a+1), checked against a rational lower bound on e.
bool eta_below_e_bound(int a);

/// R_ij for every pattern edge, in rep.paths order.
std::vector<VertexSet> all_R(const Representation& rep, const Orientation& orient);

/// J' for a fixed set of chosen pattern vertices: an edge ij survives iff i
/// and j are chosen and no vertex of R_ij is.
PatternSubgraph subgraph_for_choice(const Representation& rep, const std::vector<VertexSet>& r_sets,
                                    const std::vector<bool>& chosen);

/// One seeded draw of J'. Throws InvalidArgument if a path has more than
/// k vertices or an indegree exceeds d.
PatternSubgraph sample_subgraph(const Representation& rep, const Orientation& orient,
                                const SamplingParams& params, int trial);

/// p |V(J)| and sum over edges of p^2 (1-p)^|R_ij|.
Rational expected_vertices(const Representation& rep, const Rational& p);
Rational expected_edges(const std::vector<VertexSet>& r_sets, const Rational& p);

struct DensityReport {
  int n_J = 0;
  int m_J = 0;
  Rational density_J;
  Rational beta;
  Rational eta_bound;   // beta * eta(kd)
  Rational e_bound;     // beta * e_upper * (kd + 1)
  Rational emp_mean_nV;
  Rational emp_mean_mE;
  bool all_junction_free = true;
  bool pass = false;    // density_J <= eta_bound

  /// `key = value` lines with the fixed key set.
  std::string to_text() const;
};

DensityReport density_bound_check(const Representation& rep, const Orientation& orient,
                                  const SamplingParams& params, const Rational& beta);

}  // namespace srig
