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

#include "srig/minor.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

#include "srig/error.hpp"
#include "srig/random.hpp"
#include "srig/regions.hpp"
#include "text_io.hpp"

namespace srig {

std::optional<ModelViolation> validate_model(const MinorModel& m) {
  const Graph& g = m.ambient;
  const int k = m.pattern.vertex_count();
  if (static_cast<int>(m.branch.size()) != k || static_cast<int>(m.roots.size()) != k) {
    return ModelViolation{"size mismatch", "pattern has " + std::to_string(k) + " vertices"};
  }
  std::vector<int> owner(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) {
    const auto& s = m.branch[i];
    if (s.empty()) return ModelViolation{"empty branch set", "branch " + std::to_string(i)};
    for (Vertex v : s) {
      if (!g.contains(v)) {
        return ModelViolation{"vertex out of range", "branch " + std::to_string(i) + " vertex " + std::to_string(v)};
      }
      if (owner[v] >= 0 && owner[v] != i) {
        return ModelViolation{"not disjoint", "vertex " + std::to_string(v) + " in branches " +
                                                  std::to_string(owner[v]) + " and " + std::to_string(i)};
      }
      owner[v] = i;
    }
    if (!std::binary_search(s.begin(), s.end(), m.roots[i])) {
      return ModelViolation{"root not in branch set", "branch " + std::to_string(i)};
    }
    if (!is_connected_subset(g, s)) return ModelViolation{"not connected", "branch " + std::to_string(i)};
  }
  for (auto [i, j] : m.pattern.edges()) {
    bool found = false;
    for (Vertex v : m.branch[i]) {
      for (Vertex w : g.neighbours(v)) found = found || owner[w] == j;
    }
    if (!found) {
      return ModelViolation{"missing pattern edge", std::to_string(i) + " " + std::to_string(j)};
    }
  }
  if (m.depth_bound) {
    for (int i = 0; i < k; ++i) {
      int ecc = eccentricity_within(g, m.roots[i], m.branch[i]);
      if (ecc > *m.depth_bound) {
        return ModelViolation{"radius exceeded", "branch " + std::to_string(i) + " root " +
                                                     std::to_string(m.roots[i]) + " eccentricity " +
                                                     std::to_string(ecc)};
      }
    }
  }
  return std::nullopt;
}

Rational pattern_density(const MinorModel& m) {
  if (auto bad = validate_model(m)) throw InvalidArgument("invalid model: " + bad->condition);
  return edge_density(m.pattern);
}

int max_branch_radius(const MinorModel& m) {
  int best = 0;
  for (const auto& s : m.branch) best = std::max(best, radius_and_centre(m.ambient, s).radius);
  return best;
}

namespace {

using Mask = std::uint32_t;

VertexSet mask_to_set(Mask mask) {
  VertexSet out;
  for (Vertex v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1u) out.push_back(v);
  }
  return out;
}

// Search over families of disjoint vertex sets. Vertices are visited in id
// order; each is left out, added to an existing set, or opens a new set.
class FamilySearch {
 public:
  FamilySearch(const Graph& g, int r) : g_(g), n_(g.vertex_count()) {
    const Mask full = n_ == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n_) - 1);
    reach_.assign(full + 1, 0);
    centre_.assign(full + 1, -1);
    std::vector<Mask> adj(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbours(v)) adj[v] |= Mask{1} << w;
    }
    for (Mask s = 1; s <= full && s != 0; ++s) {
      Mask nb = 0;
      for (Mask t = s; t; t &= t - 1) nb |= adj[std::countr_zero(t)];
      reach_[s] = nb;
      auto set = mask_to_set(s);
      for (Vertex c : set) {
        int ecc = eccentricity_within(g, c, set);
        if (ecc >= 0 && ecc <= r) {
          centre_[s] = c;
          break;
        }
      }
    }
  }

  int vertex_count() const { return n_; }
  bool valid(Mask s) const { return centre_[s] >= 0; }
  Vertex centre(Mask s) const { return centre_[s]; }
  bool touching(Mask a, Mask b) const { return (reach_[a] & b) != 0; }

  // Visits leaves below a partial family fixed for vertices < start.
  template <typename Visit>
  void run(int start, std::vector<Mask>& sets, Visit&& visit) const {
    if (start == n_) {
      for (Mask s : sets) {
        if (!valid(s)) return;
      }
      visit(sets);
      return;
    }
    const Mask bit = Mask{1} << start;
    run(start + 1, sets, visit);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      sets[i] |= bit;
      run(start + 1, sets, visit);
      sets[i] &= ~bit;
    }
    sets.push_back(bit);
    run(start + 1, sets, visit);
    sets.pop_back();
  }

  // All partial families over vertices < depth, in enumeration order.
  std::vector<std::vector<Mask>> prefixes(int depth) const {
    std::vector<std::vector<Mask>> out{{}};
    for (int v = 0; v < depth; ++v) {
      std::vector<std::vector<Mask>> next;
      const Mask bit = Mask{1} << v;
      for (const auto& sets : out) {
        next.push_back(sets);
        for (std::size_t i = 0; i < sets.size(); ++i) {
          next.push_back(sets);
          next.back()[i] |= bit;
        }
        next.push_back(sets);
        next.back().push_back(bit);
      }
      out = std::move(next);
    }
    return out;
  }

  MinorModel to_model(const std::vector<Mask>& sets, int r) const {
    MinorModel m;
    m.ambient = g_;
    m.depth_bound = r;
    std::vector<Edge> pattern;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      m.branch.push_back(mask_to_set(sets[i]));
      m.roots.push_back(centre(sets[i]));
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        if (touching(sets[i], sets[j])) pattern.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
    m.pattern = Graph(static_cast<int>(sets.size()), pattern);
    return m;
  }

  int pattern_edges(const std::vector<Mask>& sets) const {
    int count = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) count += touching(sets[i], sets[j]);
    }
    return count;
  }

 private:
  const Graph& g_;
  int n_;
  std::vector<Mask> reach_;
  std::vector<Vertex> centre_;
};

struct Best {
  long long edges = 0;
  long long sets = 1;  // density 0/1 for the empty family
  std::vector<Mask> family;
  bool found = false;

  void offer(const std::vector<Mask>& candidate, long long e) {
    long long k = static_cast<long long>(candidate.size());
    if (k == 0) {
      if (!found) {
        found = true;
        family.clear();
      }
      return;
    }
    if (!found || e * sets > edges * k) {
      found = true;
      edges = e;
      sets = k;
      family = candidate;
    }
  }
};

void check_cap(const Graph& g, int cap) {
  if (g.vertex_count() > cap) {
    throw CapExceeded("graph has " + std::to_string(g.vertex_count()) + " vertices, cap is " +
                      std::to_string(cap));
  }
  if (g.vertex_count() > 24) throw CapExceeded("exact minor enumeration supports at most 24 vertices");
}

}  // namespace

NablaResult nabla_exact(const Graph& g, int r, int cap, int jobs) {
  if (r < 0) throw InvalidArgument("r must be non-negative");
  check_cap(g, cap);
  FamilySearch search(g, r);
  const int n = search.vertex_count();
  const int depth = std::min(n, jobs > 1 ? 4 : 0);
  auto prefixes = search.prefixes(depth);
  std::vector<Best> results(prefixes.size());
  auto work = [&](std::size_t task) {
    Best best;
    std::vector<Mask> sets = prefixes[task];
    search.run(depth, sets, [&](const std::vector<Mask>& family) {
      best.offer(family, search.pattern_edges(family));
    });
    results[task] = std::move(best);
  };
  if (jobs > 1) {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) {
      threads.emplace_back([&, t] {
        for (std::size_t task = t; task < prefixes.size(); task += jobs) work(task);
      });
    }
    for (auto& th : threads) th.join();
  } else {
    for (std::size_t task = 0; task < prefixes.size(); ++task) work(task);
  }
  // Merge in task order, which is the sequential enumeration order.
  Best best;
  for (const auto& res : results) {
    if (res.found) best.offer(res.family, res.edges);
  }
  return {make_rational(best.family.empty() ? 0 : best.edges, best.family.empty() ? 1 : best.sets),
          search.to_model(best.family, r)};
}

void for_each_shallow_model(const Graph& g, int r, int cap,
                            const std::function<void(const MinorModel&)>& visit) {
  if (r < 0) throw InvalidArgument("r must be non-negative");
  check_cap(g, cap);
  FamilySearch search(g, r);
  std::vector<Mask> sets;
  search.run(0, sets, [&](const std::vector<Mask>& family) { visit(search.to_model(family, r)); });
}

MinorModel random_shallow_model(const Graph& g, int r, int target_size, std::uint64_t seed) {
  if (target_size < 1) throw InvalidArgument("target size must be positive");
  if (r < 0) throw InvalidArgument("r must be non-negative");
  RandomStream rng(seed, 0);
  const int n = g.vertex_count();
  std::vector<bool> used(n, false);
  MinorModel m;
  m.ambient = g;
  m.depth_bound = r;
  while (static_cast<int>(m.branch.size()) < target_size) {
    VertexSet free;
    for (Vertex v = 0; v < n; ++v) {
      if (!used[v]) free.push_back(v);
    }
    if (free.empty()) break;
    Vertex root = free[rng.below(free.size())];
    VertexSet set{root};
    used[root] = true;
    VertexSet layer{root};
    for (int depth = 1; depth <= r && !layer.empty(); ++depth) {
      VertexSet candidates;
      for (Vertex u : layer) {
        for (Vertex w : g.neighbours(u)) {
          if (!used[w]) candidates.push_back(w);
        }
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      VertexSet next;
      for (Vertex w : candidates) {
        if (rng.chance(1, 2)) {
          next.push_back(w);
          used[w] = true;
        }
      }
      set = set_union(set, next);
      layer = std::move(next);
    }
    m.branch.push_back(std::move(set));
    m.roots.push_back(root);
  }
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < m.branch.size(); ++i) {
    for (Vertex v : m.branch[i]) owner[v] = static_cast<int>(i);
  }
  std::vector<Edge> pattern;
  for (auto [u, v] : g.edges()) {
    if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v]) pattern.push_back(make_edge(owner[u], owner[v]));
  }
  std::sort(pattern.begin(), pattern.end());
  pattern.erase(std::unique(pattern.begin(), pattern.end()), pattern.end());
  m.pattern = Graph(static_cast<int>(m.branch.size()), pattern);
  return m;
}

std::string format_model(const MinorModel& m) {
  std::ostringstream out;
  out << "model " << m.pattern.vertex_count() << ' ';
  if (m.depth_bound) {
    out << *m.depth_bound;
  } else {
    out << '-';
  }
  out << '\n';
  for (std::size_t i = 0; i < m.branch.size(); ++i) {
    out << "branch " << i << " root " << m.roots.at(i) << ":";
    for (Vertex v : m.branch[i]) out << ' ' << v;
    out << '\n';
  }
  for (auto [i, j] : m.pattern.edges()) out << "pattern-edge " << i << ' ' << j << '\n';
  return out.str();
}

MinorModel parse_model(const std::string& text, const Graph& ambient) {
  detail::LineReader reader(text);
  auto header = reader.next_tokens();
  if (header.size() != 3 || header[0] != "model") reader.fail("expected 'model <k> <r>'");
  long long k = detail::parse_integer(header[1], reader);
  if (k < 0) reader.fail("negative pattern size");
  MinorModel m;
  m.ambient = ambient;
  if (header[2] != "-") {
    long long r = detail::parse_integer(header[2], reader);
    if (r < 0) reader.fail("negative depth bound");
    m.depth_bound = static_cast<int>(r);
  }
  m.branch.resize(k);
  m.roots.assign(k, -1);
  std::vector<bool> seen(k, false);
  std::vector<Edge> pattern;
  while (!reader.done()) {
    auto tok = reader.next_tokens();
    if (tok.size() >= 4 && tok[0] == "branch" && tok[2] == "root" && !tok[3].empty() && tok[3].back() == ':') {
      long long i = detail::parse_integer(tok[1], reader);
      if (i < 0 || i >= k || seen[i]) reader.fail("bad or repeated branch index");
      seen[i] = true;
      m.roots[i] = static_cast<Vertex>(detail::parse_integer(tok[3].substr(0, tok[3].size() - 1), reader));
      for (std::size_t t = 4; t < tok.size(); ++t) {
        m.branch[i].push_back(static_cast<Vertex>(detail::parse_integer(tok[t], reader)));
      }
      std::sort(m.branch[i].begin(), m.branch[i].end());
      m.branch[i].erase(std::unique(m.branch[i].begin(), m.branch[i].end()), m.branch[i].end());
    } else if (tok.size() == 3 && tok[0] == "pattern-edge") {
      long long i = detail::parse_integer(tok[1], reader);
      long long j = detail::parse_integer(tok[2], reader);
      if (i < 0 || j < 0 || i >= k || j >= k || i == j) reader.fail("bad pattern edge");
      pattern.push_back(make_edge(static_cast<int>(i), static_cast<int>(j)));
    } else {
      reader.fail("expected 'branch ...' or 'pattern-edge ...'");
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) reader.fail("missing branch line");
  std::sort(pattern.begin(), pattern.end());
  if (std::adjacent_find(pattern.begin(), pattern.end()) != pattern.end()) reader.fail("duplicate pattern edge");
  m.pattern = Graph(static_cast<int>(k), pattern);
  return m;
}

}  // namespace srig
