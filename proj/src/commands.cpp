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

#include "commands.hpp"

#include <algorithm>
#include <sstream>
#include <variant>

#include "srig/bounds.hpp"
#include "srig/colouring.hpp"
#include "srig/error.hpp"
#include "srig/geometry.hpp"
#include "srig/graph.hpp"
#include "srig/host_extraction.hpp"
#include "srig/lowerbound.hpp"
#include "srig/minor.hpp"
#include "srig/pipeline.hpp"
#include "srig/regions.hpp"
#include "srig/representation.hpp"
#include "srig/sampling.hpp"

namespace srig::detail {

namespace {

const char* const kCommands[] = {"density", "hakimi",   "nabla",        "represent", "junctions",
                                 "sample",  "extract",  "lowerbound",   "scol",      "acyclic",
                                 "bounds",  "pipeline", "inequalities", "gapcover"};

using Input = std::variant<Graph, Arrangement, RegionSystem>;

std::string first_keyword(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    auto end = line.find_first_of(" \t\r", start);
    return line.substr(start, end == std::string::npos ? std::string::npos : end - start);
  }
  return {};
}

bool has_region_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start != std::string::npos && line.compare(start, 6, "region") == 0) return true;
  }
  return false;
}

Input parse_input(const std::string* text) {
  if (!text) throw InvalidArgument("this command needs --input");
  const std::string keyword = first_keyword(*text);
  if (keyword == "segments") return parse_arrangement(*text);
  if (keyword == "graph") {
    if (has_region_lines(*text)) return parse_region_system(*text);
    return parse_graph(*text);
  }
  throw ParseError("line 1: expected 'graph' or 'segments'");
}

Graph graph_of(const Input& in) {
  if (auto g = std::get_if<Graph>(&in)) return *g;
  if (auto a = std::get_if<Arrangement>(&in)) return string_graph(*a);
  return rig(std::get<RegionSystem>(in));
}

RegionSystem regions_of(const Input& in) {
  if (auto rs = std::get_if<RegionSystem>(&in)) return *rs;
  if (auto a = std::get_if<Arrangement>(&in)) return arrangement_to_rig(*a);
  throw InvalidArgument("this command needs a region system or a segment arrangement");
}

int need(const std::optional<int>& value, const char* flag) {
  if (!value) throw InvalidArgument(std::string("missing --") + flag);
  return *value;
}

std::uint64_t need_seed(const CommandOptions& o) {
  if (!o.seed) throw InvalidArgument("randomized command needs --seed");
  return *o.seed;
}

std::string join(const std::vector<Vertex>& items) {
  std::ostringstream out;
  for (std::size_t k = 0; k < items.size(); ++k) out << (k ? " " : "") << items[k];
  return out.str();
}

const char* flag(bool b) { return b ? "true" : "false"; }

void write_model(std::ostringstream& out, const MinorModel& m) {
  out << "branch_sets = " << m.branch.size() << '\n' << "pattern_edges = " << m.pattern.edge_count() << '\n';
  for (std::size_t i = 0; i < m.branch.size(); ++i) {
    out << "branch " << i << " = root " << m.roots[i] << ": " << join(m.branch[i]) << '\n';
  }
  for (auto [i, j] : m.pattern.edges()) out << "pattern_edge = " << i << ' ' << j << '\n';
}

// Orientation of the graph at d = --d or ceil(max density).
struct Oriented {
  Graph g;
  int d = 0;
  Orientation orient;
};

Oriented orient_graph(const Graph& g, const CommandOptions& o) {
  int d = o.d ? *o.d : (g.vertex_count() == 0 ? 0 : static_cast<int>(ceil(max_density(g))));
  auto orient = hakimi_orient(g, d);
  if (!orient) throw InvalidArgument("no orientation with indegree at most " + std::to_string(d));
  return {g, d, *orient};
}

struct Prepared {
  RegionSystem rs;
  Oriented oriented;
  MinorModel model;
  Representation rep;
  int k = 0;
};

Prepared prepare(const Input& in, const CommandOptions& o) {
  RegionSystem rs = regions_of(in);
  Graph g = rig(rs);
  if (g.vertex_count() == 0) throw InvalidArgument("empty region system");
  Oriented oriented = orient_graph(g, o);
  int r = need(o.r, "r");
  MinorModel model = random_shallow_model(g, r, g.vertex_count(), need_seed(o));
  Representation rep = build_representation(model, rs, identity_ordering(model.pattern.vertex_count()));
  return {rs, oriented, model, rep, 2 * r + 2};
}

CommandResult cmd_density(const Input& in) {
  Graph g = graph_of(in);
  std::ostringstream out;
  out << "vertices = " << g.vertex_count() << '\n' << "edges = " << g.edge_count() << '\n';
  if (g.vertex_count() > 0) {
    auto order = degeneracy_order(g);
    out << "edge_density = " << to_string(edge_density(g)) << '\n'
        << "max_density = " << to_string(max_density(g)) << '\n'
        << "degeneracy = " << order.degeneracy << '\n'
        << "degeneracy_order = " << join(order.order) << '\n';
  }
  return {out.str(), true};
}

CommandResult cmd_hakimi(const Input& in, const CommandOptions& o) {
  Graph g = graph_of(in);
  int d = need(o.d, "d");
  auto orient = hakimi_orient(g, d);
  bool density_ok = g.vertex_count() == 0 || max_density(g) <= d;
  std::ostringstream out;
  out << "d = " << d << '\n' << "feasible = " << flag(orient.has_value()) << '\n';
  if (orient) {
    out << "max_indegree = " << orient->max_indegree() << '\n';
    for (auto [a, b] : orient->arcs()) out << "arc = " << a << ' ' << b << '\n';
  }
  bool agree = orient.has_value() == density_ok;
  out << "agrees_with_max_density = " << flag(agree) << '\n';
  return {out.str(), agree};
}

CommandResult cmd_nabla(const Input& in, const CommandOptions& o) {
  Graph g = graph_of(in);
  int r = need(o.r, "r");
  auto result = nabla_exact(g, r, o.cap.value_or(kDefaultNablaCap), o.jobs);
  std::ostringstream out;
  out << "r = " << r << '\n' << "nabla = " << to_string(result.value) << '\n';
  write_model(out, result.witness);
  bool valid = !validate_model(result.witness).has_value();
  out << "witness_valid = " << flag(valid) << '\n';
  return {out.str(), valid};
}

CommandResult cmd_represent(const Input& in, const CommandOptions& o) {
  Prepared p = prepare(in, o);
  std::ostringstream out;
  out << "r = " << *o.r << '\n' << "k = " << p.k << '\n';
  write_model(out, p.model);
  for (const auto& path : p.rep.paths) {
    out << "path " << path.i << ' ' << path.j << " = case " << path.case_tag << ": " << join(path.vertices()) << '\n';
  }
  out << "max_path_vertices = " << p.rep.max_path_vertices() << '\n';
  bool ok = p.rep.max_path_vertices() <= p.k;
  out << "within_k = " << flag(ok) << '\n';
  return {out.str(), ok};
}

CommandResult cmd_junctions(const Input& in, const CommandOptions& o) {
  Prepared p = prepare(in, o);
  auto junctions = find_junctions(p.rep, p.oriented.orient, PatternSubgraph::full(p.model.pattern));
  std::ostringstream out;
  out << "d = " << p.oriented.d << '\n' << "junctions = " << junctions.size() << '\n';
  for (const auto& j : junctions) {
    out << "junction = arc " << j.arc.first << ' ' << j.arc.second << " edge " << j.pattern_edge.first << ' '
        << j.pattern_edge.second << " block " << j.block << '\n';
  }
  return {out.str(), true};
}

CommandResult cmd_sample(const Input& in, const CommandOptions& o) {
  Prepared p = prepare(in, o);
  SamplingParams params(p.k, p.oriented.d, *o.seed, o.trials.value_or(100));
  Rational beta = o.t ? parse_rational(*o.t) : Rational(1);
  auto report = density_bound_check(p.rep, p.oriented.orient, params, beta);
  std::ostringstream out;
  out << "k = " << p.k << '\n' << "d = " << p.oriented.d << '\n' << "p = " << to_string(params.p()) << '\n'
      << "trials = " << params.trials() << '\n'
      << "expected_nV = " << to_string(expected_vertices(p.rep, params.p())) << '\n'
      << "expected_mE = " << to_string(expected_edges(all_R(p.rep, p.oriented.orient), params.p())) << '\n'
      << report.to_text();
  return {out.str(), report.all_junction_free};
}

CommandResult cmd_extract(const Input& in, const CommandOptions& o) {
  Prepared p = prepare(in, o);
  SamplingParams params(p.k, p.oriented.d, *o.seed, o.trials.value_or(1));
  std::ostringstream out;
  bool ok = true;
  for (int trial = 0; trial < params.trials(); ++trial) {
    auto sub = sample_subgraph(p.rep, p.oriented.orient, params, trial);
    HostModel host = extract_host_model(p.rep, p.oriented.orient, sub);
    bool valid = !validate_model(host.as_model()).has_value();
    ok = ok && valid;
    out << "trial = " << trial << '\n'
        << "sub_vertices = " << sub.vertex_count() << '\n'
        << "sub_edges = " << sub.edge_count() << '\n'
        << "core = " << join(host.core_to_pattern) << '\n';
    for (std::size_t t = 0; t < host.sets.size(); ++t) out << "set " << t << " = " << join(host.sets[t]) << '\n';
    out << "host_model_valid = " << flag(valid) << '\n';
  }
  return {out.str(), ok};
}

CommandResult cmd_lowerbound(const CommandOptions& o) {
  auto inst = generate_lower_bound(need(o.d, "d"), need(o.r, "r"));
  auto report = verify_lower_bound(inst);
  std::ostringstream out;
  out << report.to_text();
  EBound upper = bound_rig(inst.d, inst.r, 3);
  bool sandwich = report.density <= upper.upper;
  out << "plane_bound_upper = " << to_decimal(upper.upper, 6, true) << '\n'
      << "below_plane_bound = " << flag(sandwich) << '\n';
  out << "# arrangement\n" << format_arrangement(inst.arrangement) << "# model\n" << format_model(clique_model(inst));
  return {out.str(), report.pass && sandwich};
}

CommandResult cmd_scol(const Input& in, const CommandOptions& o) {
  Graph g = graph_of(in);
  int r = need(o.r, "r");
  auto exact = scol_exact(g, r, o.cap.value_or(kDefaultScolCap));
  auto greedy = scol_greedy(g, r);
  std::ostringstream out;
  out << "r = " << r << '\n'
      << "scol = " << exact.value << '\n'
      << "order = " << join(exact.order.order()) << '\n'
      << "greedy = " << greedy.value << '\n'
      << "greedy_order = " << join(greedy.order.order()) << '\n';
  return {out.str(), greedy.value >= exact.value};
}

CommandResult cmd_acyclic(const Input& in, const CommandOptions& o) {
  Graph g = graph_of(in);
  auto result = acyclic_chromatic_exact(g, o.cap.value_or(kDefaultAcyclicCap));
  std::ostringstream out;
  out << "chi_a = " << result.value << '\n' << "colouring = " << join(result.colour) << '\n';
  bool ok = is_acyclic_colouring(g, result.colour);
  out << "verified = " << flag(ok) << '\n';
  return {out.str(), ok};
}

CommandResult cmd_inequalities(const Input& in, const CommandOptions& o) {
  Graph g = graph_of(in);
  int cap = o.cap.value_or(kDefaultScolCap);
  auto report = check_inequalities(g, need(o.r, "r"), cap, std::max(cap, kDefaultAcyclicCap));
  return {report.to_text(), report.eq1_pass && report.eq2_pass};
}

CommandResult cmd_gapcover(const Input& in) {
  Graph g = graph_of(in);
  auto cert = potential_bearing(g, degeneracy_order(g));
  std::ostringstream out;
  out << "degeneracy = " << cert.degeneracy << '\n'
      << "bound = " << cert.bound << '\n'
      << "pairs = " << cert.bearing.size() << '\n'
      << "reversed_pairs = " << cert.reversed_pairs << '\n'
      << "max_cover_size = " << cert.max_cover_size << '\n'
      << "certified = " << flag(cert.certified) << '\n';
  return {out.str(), cert.certified};
}

CommandResult cmd_bounds(const CommandOptions& o) {
  int d = need(o.d, "d");
  int r = need(o.r, "r");
  int g = o.g.value_or(0);
  Rational t = o.t ? parse_rational(*o.t) : Rational(1);
  std::ostringstream out;
  EBound rig_bound = bound_rig(d, r, t);
  EBound plane = bound_rig(d, r, 3);
  EBound surface = bound_surface(d, r, g);
  out << "d = " << d << '\n' << "r = " << r << '\n' << "g = " << g << '\n' << "t = " << to_string(t) << '\n'
      << "rig_coefficient = " << to_string(rig_bound.coefficient) << '\n'
      << "rig_upper = " << to_decimal(rig_bound.upper, 6, true) << '\n'
      << "plane_coefficient = " << to_string(plane.coefficient) << '\n'
      << "plane_upper = " << to_decimal(plane.upper, 6, true) << '\n'
      << "genus_density = " << to_decimal(genus_density(g), 6, true) << '\n'
      << "surface_coefficient = " << to_decimal(surface.coefficient, 6, true) << '\n'
      << "surface_upper = " << to_decimal(surface.upper, 6, true) << '\n';
  bool ok = true;
  if (d >= 2 && r >= 1) {
    Rational lower = bound_lower(d, r);
    out << "lower = " << to_string(lower) << '\n';
    ok = lower < plane.upper;
    out << "lower_below_plane = " << flag(ok) << '\n';
  }
  if (r >= 1) {
    // scol_r bound with nabla_{r-1} replaced by the plane bound at depth r-1.
    EBound previous = bound_rig(d, r - 1, 3);
    out << "scol_plane_upper = " << to_decimal(bound_scol(r, previous.upper), 6, true) << '\n';
  }
  return {out.str(), ok};
}

CommandResult cmd_pipeline(const Input& in, const CommandOptions& o) {
  PipelineConfig config;
  config.r = need(o.r, "r");
  config.seed = need_seed(o);
  if (o.trials) config.trials = *o.trials;
  if (o.t) config.t = parse_rational(*o.t);
  if (o.cap) config.host_cap = *o.cap;
  auto report = run_pipeline(regions_of(in), config);
  return {report.to_text(), report.pass};
}

}  // namespace

bool is_known_command(const std::string& name) {
  return std::find(std::begin(kCommands), std::end(kCommands), name) != std::end(kCommands);
}

CommandResult run_command(const std::string& name, const std::string* input, const CommandOptions& o) {
  if (!is_known_command(name)) throw InvalidArgument("unknown command '" + name + "'");
  if (o.r && *o.r < 0) throw InvalidArgument("--r must be non-negative");
  if (o.d && *o.d < 0) throw InvalidArgument("--d must be non-negative");
  if (o.trials && *o.trials < 1) throw InvalidArgument("--trials must be positive");
  if (o.jobs < 1) throw InvalidArgument("--jobs must be positive");
  if (name == "lowerbound") return cmd_lowerbound(o);
  if (name == "bounds") return cmd_bounds(o);
  Input in = parse_input(input);
  if (name == "density") return cmd_density(in);
  if (name == "hakimi") return cmd_hakimi(in, o);
  if (name == "nabla") return cmd_nabla(in, o);
  if (name == "represent") return cmd_represent(in, o);
  if (name == "junctions") return cmd_junctions(in, o);
  if (name == "sample") return cmd_sample(in, o);
  if (name == "extract") return cmd_extract(in, o);
  if (name == "scol") return cmd_scol(in, o);
  if (name == "acyclic") return cmd_acyclic(in, o);
  if (name == "inequalities") return cmd_inequalities(in, o);
  if (name == "gapcover") return cmd_gapcover(in);
  return cmd_pipeline(in, o);
}

}  // namespace srig::detail
