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

#include "srig/sampling.hpp"

#include <sstream>

#include "srig/error.hpp"
#include "srig/random.hpp"

namespace srig {

SamplingParams::SamplingParams(int k, int d, std::uint64_t seed, int trials)
    : k_(k), d_(d), seed_(seed), trials_(trials), p_(make_rational(1, static_cast<std::int64_t>(k) * d + 1)) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (d < 0) throw InvalidArgument("d must be non-negative");
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
}

Rational eta(int a) {
  if (a < 0) throw InvalidArgument("eta of a negative integer");
  if (a == 0) return 1;
  return Rational(pow(Rational(a + 1), a + 1) / pow(Rational(a), a));
}

bool eta_below_e_bound(int a) { return eta(a) < e_lower() * (a + 1); }

std::vector<VertexSet> all_R(const Representation& rep, const Orientation& orient) {
  std::vector<VertexSet> out;
  out.reserve(rep.paths.size());
  for (const auto& p : rep.paths) out.push_back(compute_R(rep, orient, make_edge(p.i, p.j)));
  return out;
}

PatternSubgraph subgraph_for_choice(const Representation& rep, const std::vector<VertexSet>& r_sets,
                                    const std::vector<bool>& chosen) {
  PatternSubgraph out;
  out.vertices = chosen;
  for (std::size_t e = 0; e < rep.paths.size(); ++e) {
    const auto& p = rep.paths[e];
    if (!chosen[p.i] || !chosen[p.j]) continue;
    bool blocked = false;
    for (Vertex l : r_sets[e]) blocked = blocked || chosen[l];
    if (!blocked) out.edges.push_back(make_edge(p.i, p.j));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

namespace {

void check_preconditions(const Representation& rep, const Orientation& orient, const SamplingParams& params) {
  if (rep.max_path_vertices() > params.k()) {
    throw InvalidArgument("a path has " + std::to_string(rep.max_path_vertices()) + " vertices, more than k = " +
                          std::to_string(params.k()));
  }
  if (orient.max_indegree() > params.d()) {
    throw InvalidArgument("orientation indegree " + std::to_string(orient.max_indegree()) + " exceeds d = " +
                          std::to_string(params.d()));
  }
}

std::vector<bool> draw(const SamplingParams& params, int k_vertices, int trial) {
  RandomStream rng(params.seed(), static_cast<std::uint64_t>(trial));
  const auto den = static_cast<std::uint64_t>(params.k()) * params.d() + 1;
  std::vector<bool> chosen(k_vertices);
  for (int i = 0; i < k_vertices; ++i) chosen[i] = rng.chance(1, den);
  return chosen;
}

}  // namespace

PatternSubgraph sample_subgraph(const Representation& rep, const Orientation& orient,
                                const SamplingParams& params, int trial) {
  check_preconditions(rep, orient, params);
  auto chosen = draw(params, rep.model.pattern.vertex_count(), trial);
  return subgraph_for_choice(rep, all_R(rep, orient), chosen);
}

Rational expected_vertices(const Representation& rep, const Rational& p) {
  return p * rep.model.pattern.vertex_count();
}

Rational expected_edges(const std::vector<VertexSet>& r_sets, const Rational& p) {
  Rational total = 0;
  for (const auto& r : r_sets) total += p * p * pow(1 - p, static_cast<unsigned>(r.size()));
  return total;
}

DensityReport density_bound_check(const Representation& rep, const Orientation& orient,
                                  const SamplingParams& params, const Rational& beta) {
  check_preconditions(rep, orient, params);
  DensityReport report;
  const Graph& pattern = rep.model.pattern;
  report.n_J = pattern.vertex_count();
  report.m_J = pattern.edge_count();
  report.density_J = edge_density(pattern);
  report.beta = beta;
  const int kd = params.k() * params.d();
  report.eta_bound = beta * eta(kd);
  report.e_bound = beta * e_upper() * (kd + 1);
  const auto r_sets = all_R(rep, orient);
  long long total_v = 0;
  long long total_e = 0;
  for (int t = 0; t < params.trials(); ++t) {
    auto sub = subgraph_for_choice(rep, r_sets, draw(params, report.n_J, t));
    total_v += sub.vertex_count();
    total_e += sub.edge_count();
    if (!find_junctions(rep, orient, sub).empty()) report.all_junction_free = false;
  }
  report.emp_mean_nV = make_rational(total_v, params.trials());
  report.emp_mean_mE = make_rational(total_e, params.trials());
  report.pass = report.all_junction_free && report.density_J <= report.eta_bound;
  return report;
}

std::string DensityReport::to_text() const {
  std::ostringstream out;
  out << "n_J = " << n_J << '\n'
      << "m_J = " << m_J << '\n'
      << "density_J = " << to_string(density_J) << '\n'
      << "beta = " << to_string(beta) << '\n'
      << "eta_bound = " << to_string(eta_bound) << '\n'
      << "e_bound = " << to_decimal(e_bound, 6, true) << '\n'
      << "emp_mean_nV = " << to_decimal(emp_mean_nV, 6) << '\n'
      << "emp_mean_mE = " << to_decimal(emp_mean_mE, 6) << '\n'
      << "pass = " << (pass ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace srig
