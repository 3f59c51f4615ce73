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
#include <limits>
#include <queue>
#include <vector>

namespace srig::detail {

// Dinic's algorithm. Arcs are explored in insertion order, so the flow
// found is a deterministic function of the construction sequence.
class MaxFlow {
 public:
  static constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(int nodes) : graph_(nodes), level_(nodes), next_(nodes) {}

  // Returns the index of the forward arc.
  int add_arc(int from, int to, std::int64_t capacity) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity});
    graph_[from].push_back(id);
    arcs_.push_back({from, 0});
    graph_[to].push_back(id + 1);
    return id;
  }

  std::int64_t flow_on(int arc) const { return arcs_[arc ^ 1].capacity; }

  std::int64_t run(int source, int sink) {
    std::int64_t total = 0;
    while (build_levels(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (std::int64_t pushed = augment(source, sink, kInfinity)) total += pushed;
    }
    return total;
  }

  // Nodes reachable from `source` in the residual graph after run().
  std::vector<bool> source_side(int source) const {
    std::vector<bool> seen(graph_.size(), false);
    std::vector<int> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int id : graph_[u]) {
        if (arcs_[id].capacity > 0 && !seen[arcs_[id].to]) {
          seen[arcs_[id].to] = true;
          stack.push_back(arcs_[id].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    std::int64_t capacity;
  };

  bool build_levels(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int id : graph_[u]) {
        const Arc& a = arcs_[id];
        if (a.capacity > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          queue.push(a.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  std::int64_t augment(int u, int sink, std::int64_t limit) {
    if (u == sink) return limit;
    for (int& i = next_[u]; i < static_cast<int>(graph_[u].size()); ++i) {
      int id = graph_[u][i];
      Arc& a = arcs_[id];
      if (a.capacity <= 0 || level_[a.to] != level_[u] + 1) continue;
      if (std::int64_t pushed = augment(a.to, sink, std::min(limit, a.capacity))) {
        a.capacity -= pushed;
        arcs_[id ^ 1].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> graph_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace srig::detail
