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

#include "srig/lowerbound.hpp"

#include <algorithm>
#include <sstream>

#include "srig/bounds.hpp"
#include "srig/error.hpp"

namespace srig {

namespace {

Point at(long long x, long long y) { return Point{BigInt(x), BigInt(y)}; }

}  // namespace

LowerBoundInstance generate_lower_bound(int d, int r) {
  if (d < 2) throw InvalidArgument("d must be at least 2");
  if (r < 1) throw InvalidArgument("r must be at least 1");
  LowerBoundInstance inst;
  inst.d = d;
  inst.r = r;
  inst.d_prime = d - 1;
  inst.r_prime = 2 * r + 1;
  inst.columns = inst.d_prime * inst.r_prime;
  const long long s = inst.d_prime + 1;

  std::vector<Segment> segments;
  for (int j = 1; j <= inst.columns; ++j) {
    const long long left = 10LL * j * s;
    const long long right = (10LL * j + 2) * s;
    for (int i = 1; i <= inst.r_prime; ++i) {
      const long long low = 3LL * i * s;
      const long long high = (3LL * i + 4) * s;
      if (i % 2 == 1) {
        segments.push_back(Segment{at(left, low), at(right, high)});
      } else {
        segments.push_back(Segment{at(right, low), at(left, high)});
      }
    }
  }
  const long long x_start = 9 * s;
  const long long x_end = (10LL * inst.columns + 3) * s;
  for (int i = 1; i <= inst.r_prime; ++i) {
    for (int k = 1; k <= inst.d_prime; ++k) {
      const long long y = (3LL * i + 1) * s + 2LL * k;
      segments.push_back(Segment{at(x_start, y), at(x_end, y)});
    }
  }
  inst.arrangement = Arrangement(std::move(segments));
  inst.graph = string_graph(inst.arrangement);

  for (int j = 1; j <= inst.columns; ++j) {
    inst.pairing.emplace_back((j - 1) % inst.r_prime + 1, (j - 1) / inst.r_prime + 1);
  }

  std::vector<Edge> expected;
  for (int j = 1; j <= inst.columns; ++j) {
    for (int i = 1; i < inst.r_prime; ++i) expected.push_back(make_edge(inst.alpha(i, j), inst.alpha(i + 1, j)));
  }
  for (int i = 1; i <= inst.r_prime; ++i) {
    for (int k = 1; k <= inst.d_prime; ++k) {
      for (int j = 1; j <= inst.columns; ++j) expected.push_back(make_edge(inst.gamma(i, k), inst.alpha(i, j)));
    }
  }
  std::sort(expected.begin(), expected.end());
  const int n = inst.columns * inst.r_prime + inst.r_prime * inst.d_prime;
  if (!(inst.graph == Graph(n, expected))) {
    throw ClaimViolation("lower bound geometry", "string graph differs from the intended combinatorics");
  }
  return inst;
}

Orientation orient_instance(const LowerBoundInstance& inst) {
  std::vector<Orientation::Arc> arcs;
  for (int j = 1; j <= inst.columns; ++j) {
    for (int i = 1; i < inst.r_prime; ++i) arcs.emplace_back(inst.alpha(i, j), inst.alpha(i + 1, j));
  }
  for (int i = 1; i <= inst.r_prime; ++i) {
    for (int k = 1; k <= inst.d_prime; ++k) {
      for (int j = 1; j <= inst.columns; ++j) arcs.emplace_back(inst.gamma(i, k), inst.alpha(i, j));
    }
  }
  Orientation out(inst.graph, arcs);
  if (out.max_indegree() > inst.d) {
    throw ClaimViolation("lower bound orientation", "indegree " + std::to_string(out.max_indegree()));
  }
  return out;
}

MinorModel clique_model(const LowerBoundInstance& inst) {
  MinorModel m;
  m.ambient = inst.graph;
  std::vector<Edge> clique;
  for (int a = 0; a < inst.columns; ++a) {
    for (int b = a + 1; b < inst.columns; ++b) clique.emplace_back(a, b);
  }
  m.pattern = Graph(inst.columns, clique);
  for (int j = 1; j <= inst.columns; ++j) {
    VertexSet set;
    for (int i = 1; i <= inst.r_prime; ++i) set.push_back(inst.alpha(i, j));
    auto [row, k] = inst.pairing[j - 1];
    set.push_back(inst.gamma(row, k));
    std::sort(set.begin(), set.end());
    Vertex root = inst.alpha(inst.r + 1, j);
    if (eccentricity_within(inst.graph, root, set) > inst.r) root = radius_and_centre(inst.graph, set).centre;
    m.branch.push_back(std::move(set));
    m.roots.push_back(root);
  }
  m.depth_bound = inst.r;
  return m;
}

LowerBoundReport verify_lower_bound(const LowerBoundInstance& inst) {
  LowerBoundReport rep;
  rep.d = inst.d;
  rep.r = inst.r;
  rep.vertices = inst.graph.vertex_count();
  rep.edges = inst.graph.edge_count();
  rep.hakimi_feasible = hakimi_orient(inst.graph, inst.d).has_value();
  rep.max_indegree = orient_instance(inst).max_indegree();

  MinorModel m = clique_model(inst);
  rep.clique_size = m.pattern.vertex_count();
  auto violation = validate_model(m);
  rep.model_valid = !violation.has_value();
  if (violation) rep.model_violation = violation->condition + " (" + violation->witness + ")";
  rep.max_radius = max_branch_radius(m);
  MinorModel relaxed = m;
  for (std::size_t t = 0; t < relaxed.branch.size(); ++t) {
    relaxed.roots[t] = radius_and_centre(inst.graph, relaxed.branch[t]).centre;
  }
  relaxed.depth_bound = rep.max_radius;
  rep.valid_at_max_radius = !validate_model(relaxed).has_value();

  rep.density = edge_density(m.pattern);
  rep.bound = bound_lower(inst.d, inst.r);
  rep.closed_forms_equal = make_rational(inst.columns - 1, 2) == rep.bound;
  rep.density_meets_bound = rep.density >= rep.bound;
  rep.pass = rep.hakimi_feasible && rep.model_valid && rep.closed_forms_equal && rep.density_meets_bound;
  return rep;
}

std::string LowerBoundReport::to_text() const {
  std::ostringstream out;
  out << "d = " << d << '\n'
      << "r = " << r << '\n'
      << "vertices = " << vertices << '\n'
      << "edges = " << edges << '\n'
      << "hakimi_feasible = " << (hakimi_feasible ? "true" : "false") << '\n'
      << "max_indegree = " << max_indegree << '\n'
      << "clique_size = " << clique_size << '\n'
      << "model_valid = " << (model_valid ? "true" : "false") << '\n';
  if (!model_violation.empty()) out << "model_violation = " << model_violation << '\n';
  out << "max_radius = " << max_radius << '\n'
      << "valid_at_max_radius = " << (valid_at_max_radius ? "true" : "false") << '\n'
      << "density = " << to_string(density) << '\n'
      << "bound_lower = " << to_string(bound) << '\n'
      << "closed_forms_equal = " << (closed_forms_equal ? "true" : "false") << '\n'
      << "density_meets_bound = " << (density_meets_bound ? "true" : "false") << '\n'
      << "pass = " << (pass ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace srig
