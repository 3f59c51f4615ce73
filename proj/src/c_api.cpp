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

#include "srig/srig.h"

#include <algorithm>
#include <exception>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "commands.hpp"
#include "srig/error.hpp"
#include "srig/geometry.hpp"
#include "srig/graph.hpp"
#include "srig/regions.hpp"

struct srig_graph {
  srig::Graph value;
};

struct srig_arrangement {
  srig::Arrangement value;
};

struct srig_regions {
  srig::RegionSystem value;
};

struct srig_report {
  std::string text;
  bool passed = false;
};

namespace {

thread_local std::string last_error;

template <typename F>
srig_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SRIG_OK;
  } catch (const srig::ParseError& e) {
    last_error = e.what();
    return SRIG_ERR_PARSE;
  } catch (const srig::CapExceeded& e) {
    last_error = e.what();
    return SRIG_ERR_CAP_EXCEEDED;
  } catch (const srig::ClaimViolation& e) {
    last_error = e.what();
    return SRIG_ERR_CHECK_FAILED;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return SRIG_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SRIG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SRIG_ERR_INTERNAL;
  }
}

srig_status null_argument(const char* name) {
  last_error = std::string("null argument: ") + name;
  return SRIG_ERR_INVALID_ARGUMENT;
}

bool fits_int64(const srig::BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

extern "C" {

const char* srig_last_error(void) { return last_error.c_str(); }

const char* srig_status_name(srig_status status) {
  switch (status) {
    case SRIG_OK:
      return "ok";
    case SRIG_ERR_PARSE:
      return "parse error";
    case SRIG_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SRIG_ERR_CAP_EXCEEDED:
      return "cap exceeded";
    case SRIG_ERR_CHECK_FAILED:
      return "check failed";
    case SRIG_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* srig_version(void) { return "0.1.0"; }

srig_status srig_graph_parse(const char* text, srig_graph_t** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new srig_graph{srig::parse_graph(text)}; });
}

srig_status srig_graph_create(int n, const int* edges, size_t edge_count, srig_graph_t** out) {
  if (!out) return null_argument("out");
  if (edge_count > 0 && !edges) return null_argument("edges");
  return guarded([&] {
    if (n < 0) throw srig::InvalidArgument("negative vertex count");
    std::vector<srig::Edge> list;
    for (size_t k = 0; k < edge_count; ++k) {
      int u = edges[2 * k];
      int v = edges[2 * k + 1];
      if (u == v) throw srig::InvalidArgument("self-loop");
      list.push_back(srig::make_edge(u, v));
    }
    std::sort(list.begin(), list.end());
    *out = new srig_graph{srig::Graph(n, list)};
  });
}

int srig_graph_vertex_count(const srig_graph_t* g) { return g ? g->value.vertex_count() : -1; }

int srig_graph_edge_count(const srig_graph_t* g) { return g ? g->value.edge_count() : -1; }

int srig_graph_has_edge(const srig_graph_t* g, int u, int v) {
  if (!g || !g->value.contains(u) || !g->value.contains(v)) return 0;
  return g->value.has_edge(u, v) ? 1 : 0;
}

srig_status srig_graph_max_density(const srig_graph_t* g, int64_t* num, int64_t* den) {
  if (!g) return null_argument("g");
  if (!num || !den) return null_argument("num/den");
  return guarded([&] {
    srig::Rational q = srig::max_density(g->value);
    if (!fits_int64(numerator(q)) || !fits_int64(denominator(q))) throw std::overflow_error("density overflows int64");
    *num = static_cast<int64_t>(numerator(q));
    *den = static_cast<int64_t>(denominator(q));
  });
}

srig_status srig_graph_hakimi(const srig_graph_t* g, int d, int* feasible) {
  if (!g) return null_argument("g");
  if (!feasible) return null_argument("feasible");
  return guarded([&] { *feasible = srig::hakimi_orient(g->value, d).has_value() ? 1 : 0; });
}

void srig_graph_free(srig_graph_t* g) { delete g; }

srig_status srig_arrangement_parse(const char* text, srig_arrangement_t** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new srig_arrangement{srig::parse_arrangement(text)}; });
}

int srig_arrangement_size(const srig_arrangement_t* a) { return a ? a->value.size() : -1; }

srig_status srig_arrangement_string_graph(const srig_arrangement_t* a, srig_graph_t** out) {
  if (!a) return null_argument("a");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new srig_graph{srig::string_graph(a->value)}; });
}

srig_status srig_arrangement_to_regions(const srig_arrangement_t* a, srig_regions_t** out) {
  if (!a) return null_argument("a");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new srig_regions{srig::arrangement_to_rig(a->value)}; });
}

void srig_arrangement_free(srig_arrangement_t* a) { delete a; }

srig_status srig_regions_parse(const char* text, srig_regions_t** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new srig_regions{srig::parse_region_system(text)}; });
}

int srig_regions_size(const srig_regions_t* rs) { return rs ? rs->value.size() : -1; }

srig_status srig_regions_rig(const srig_regions_t* rs, srig_graph_t** out) {
  if (!rs) return null_argument("rs");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new srig_graph{srig::rig(rs->value)}; });
}

void srig_regions_free(srig_regions_t* rs) { delete rs; }

void srig_options_init(srig_options* options) {
  if (!options) return;
  options->r = -1;
  options->d = -1;
  options->g = -1;
  options->t = nullptr;
  options->has_seed = 0;
  options->seed = 0;
  options->trials = -1;
  options->cap = -1;
  options->jobs = 1;
}

srig_status srig_run(const char* command, const char* input, const srig_options* options, srig_report_t** out) {
  if (!command) return null_argument("command");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    srig::detail::CommandOptions o;
    if (options) {
      if (options->r >= 0) o.r = options->r;
      if (options->d >= 0) o.d = options->d;
      if (options->g >= 0) o.g = options->g;
      if (options->t) o.t = std::string(options->t);
      if (options->has_seed) o.seed = options->seed;
      if (options->trials >= 0) o.trials = options->trials;
      if (options->cap >= 0) o.cap = options->cap;
      o.jobs = options->jobs;
    }
    std::string text;
    if (input) text = input;
    auto result = srig::detail::run_command(command, input ? &text : nullptr, o);
    *out = new srig_report{std::move(result.text), result.passed};
  });
}

const char* srig_report_text(const srig_report_t* report) { return report ? report->text.c_str() : ""; }

int srig_report_passed(const srig_report_t* report) { return report && report->passed ? 1 : 0; }

void srig_report_free(srig_report_t* report) { delete report; }

}  // extern "C"
