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

#include "srig/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <vector>

#include "srig/bounds.hpp"
#include "srig/error.hpp"
#include "srig/graph.hpp"
#include "srig/host_extraction.hpp"
#include "srig/minor.hpp"
#include "srig/representation.hpp"
#include "srig/sampling.hpp"

namespace srig {

namespace {

template <typename F>
auto stage(const std::string& name, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const ClaimViolation& e) {
    throw ClaimViolation("stage " + name, e.claim() + ": " + e.witness());
  } catch (const InvalidArgument& e) {
    throw ClaimViolation("stage " + name, e.what());
  }
}

void check_model(const MinorModel& model, const RegionSystem& rs, const Orientation& orient,
                 const PipelineConfig& config, PipelineReport& report) {
  if (model.pattern.vertex_count() == 0) return;
  ++report.models;
  Representation rep = stage("represent", [&] {
    return build_representation(model, rs, identity_ordering(model.pattern.vertex_count()));
  });
  if (rep.max_path_vertices() > report.k) {
    throw ClaimViolation("stage represent", "path with " + std::to_string(rep.max_path_vertices()) + " vertices");
  }
  const Rational density = edge_density(model.pattern);
  report.max_pattern_density = std::max(report.max_pattern_density, density);
  if (density > report.bound_upper) report.within_bound = false;

  SamplingParams params(report.k, report.d, config.seed, config.trials);
  for (int trial = 0; trial < config.trials; ++trial) {
    PatternSubgraph sub = stage("sample", [&] { return sample_subgraph(rep, orient, params, trial); });
    ++report.subgraphs;
    if (!find_junctions(rep, orient, sub).empty()) {
      report.all_junction_free = false;
      continue;
    }
    if (!core_edge_accounting_holds(sub)) report.accounting_holds = false;
    HostModel host = stage("extract", [&] { return extract_host_model(rep, orient, sub); });
    ++report.host_models;
    if (Rational(host.core.edge_count()) > report.t * host.core.vertex_count()) report.core_within_t = false;
    if (Rational(sub.edge_count()) > report.t * sub.vertex_count()) report.core_within_t = false;
  }
  DensityReport dens = stage("density", [&] { return density_bound_check(rep, orient, params, report.t); });
  if (!dens.pass) report.density_checks_pass = false;
}

}  // namespace

PipelineReport run_pipeline(const RegionSystem& rs, const PipelineConfig& config) {
  if (config.r < 0) throw InvalidArgument("r must be non-negative");
  if (config.trials < 1) throw InvalidArgument("trials must be at least 1");
  if (auto bad = validate_regions(rs)) {
    throw InvalidArgument("region " + std::to_string(bad->region) + ": " + bad->reason);
  }
  PipelineReport report;
  report.r = config.r;
  report.k = 2 * config.r + 2;
  const Graph& host = rs.host();
  report.host_vertices = host.vertex_count();
  Graph g = rig(rs);
  report.graph_vertices = g.vertex_count();
  report.graph_edges = g.edge_count();

  if (config.t) {
    report.t = *config.t;
  } else if (host.vertex_count() <= config.host_cap) {
    report.t = host.vertex_count() == 0 ? Rational(0) : nabla_exact(host, host.vertex_count(), config.host_cap).value;
    report.t = std::max(report.t, Rational(1));
    report.t_computed = true;
  } else {
    throw InvalidArgument("host has " + std::to_string(host.vertex_count()) +
                          " vertices; supply t for hosts above the cap " + std::to_string(config.host_cap));
  }
  if (report.t < 1) throw InvalidArgument("t must be at least 1");

  if (g.vertex_count() == 0) {
    report.bound_coefficient = bound_rig(0, config.r, report.t).coefficient;
    report.bound_upper = bound_rig(0, config.r, report.t).upper;
    report.pass = true;
    return report;
  }
  report.d = static_cast<int>(ceil(max_density(g)));
  auto orient = hakimi_orient(g, report.d);
  if (!orient) throw ClaimViolation("stage orient", "no orientation with indegree " + std::to_string(report.d));
  EBound bound = bound_rig(report.d, config.r, report.t);
  report.bound_coefficient = bound.coefficient;
  report.bound_upper = bound.upper;

  if (g.vertex_count() <= config.exhaustive_limit) {
    report.exhaustive = true;
    for_each_shallow_model(g, config.r, config.exhaustive_limit,
                           [&](const MinorModel& m) { check_model(m, rs, *orient, config, report); });
  } else {
    MinorModel m = random_shallow_model(g, config.r, g.vertex_count(), config.seed);
    check_model(m, rs, *orient, config, report);
  }
  report.pass = report.all_junction_free && report.accounting_holds && report.core_within_t &&
                report.density_checks_pass && report.within_bound;
  return report;
}

std::string PipelineReport::to_text() const {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream out;
  out << "host_vertices = " << host_vertices << '\n'
      << "graph_vertices = " << graph_vertices << '\n'
      << "graph_edges = " << graph_edges << '\n'
      << "d = " << d << '\n'
      << "r = " << r << '\n'
      << "k = " << k << '\n'
      << "t = " << to_string(t) << (t_computed ? " (computed)" : "") << '\n'
      << "models = " << models << (exhaustive ? " (exhaustive)" : " (random)") << '\n'
      << "subgraphs = " << subgraphs << '\n'
      << "host_models = " << host_models << '\n'
      << "max_pattern_density = " << to_string(max_pattern_density) << '\n'
      << "bound_coefficient = " << to_string(bound_coefficient) << '\n'
      << "bound_upper = " << to_decimal(bound_upper, 6, true) << '\n'
      << "all_junction_free = " << flag(all_junction_free) << '\n'
      << "accounting_holds = " << flag(accounting_holds) << '\n'
      << "core_within_t = " << flag(core_within_t) << '\n'
      << "density_checks_pass = " << flag(density_checks_pass) << '\n'
      << "within_bound = " << flag(within_bound) << '\n'
      << "verdict = " << (pass ? "pass" : "fail") << '\n';
  return out.str();
}

}  // namespace srig
