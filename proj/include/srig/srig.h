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

#ifndef SRIG_SRIG_H_
#define SRIG_SRIG_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SRIG_API __declspec(dllexport)
#else
#define SRIG_API __attribute__((visibility("default")))
#endif

typedef enum srig_status {
  SRIG_OK = 0,
  SRIG_ERR_PARSE = 1,
  SRIG_ERR_INVALID_ARGUMENT = 2,
  SRIG_ERR_CAP_EXCEEDED = 3,
  SRIG_ERR_CHECK_FAILED = 4,
  SRIG_ERR_INTERNAL = 5
} srig_status;

typedef struct srig_graph srig_graph_t;
typedef struct srig_arrangement srig_arrangement_t;
typedef struct srig_regions srig_regions_t;
typedef struct srig_report srig_report_t;

/* Message for the last failing call on this thread; never NULL. */
SRIG_API const char* srig_last_error(void);
SRIG_API const char* srig_status_name(srig_status status);
SRIG_API const char* srig_version(void);

/* Graphs: `graph <n> <m>` followed by m lines `u v`. */
SRIG_API srig_status srig_graph_parse(const char* text, srig_graph_t** out);
SRIG_API srig_status srig_graph_create(int n, const int* edges, size_t edge_count, srig_graph_t** out);
SRIG_API int srig_graph_vertex_count(const srig_graph_t* g);
SRIG_API int srig_graph_edge_count(const srig_graph_t* g);
SRIG_API int srig_graph_has_edge(const srig_graph_t* g, int u, int v);
/* Writes the exact maximum density as num/den. */
SRIG_API srig_status srig_graph_max_density(const srig_graph_t* g, int64_t* num, int64_t* den);
/* Sets *feasible to 1 when an orientation with indegree <= d exists. */
SRIG_API srig_status srig_graph_hakimi(const srig_graph_t* g, int d, int* feasible);
SRIG_API void srig_graph_free(srig_graph_t* g);

/* Segment arrangements: `segments <n>` followed by n lines `x1 y1 x2 y2`. */
SRIG_API srig_status srig_arrangement_parse(const char* text, srig_arrangement_t** out);
SRIG_API int srig_arrangement_size(const srig_arrangement_t* a);
SRIG_API srig_status srig_arrangement_string_graph(const srig_arrangement_t* a, srig_graph_t** out);
SRIG_API srig_status srig_arrangement_to_regions(const srig_arrangement_t* a, srig_regions_t** out);
SRIG_API void srig_arrangement_free(srig_arrangement_t* a);

/* Region systems: a host graph block followed by `region <v>: ...` lines. */
SRIG_API srig_status srig_regions_parse(const char* text, srig_regions_t** out);
SRIG_API int srig_regions_size(const srig_regions_t* rs);
SRIG_API srig_status srig_regions_rig(const srig_regions_t* rs, srig_graph_t** out);
SRIG_API void srig_regions_free(srig_regions_t* rs);

/* Options for srig_run. Unset integers are -1; unset strings are NULL. */
typedef struct srig_options {
  int r;
  int d;
  int g;
  const char* t; /* rational, e.g. "3" or "5/2" */
  int has_seed;
  uint64_t seed;
  int trials;
  int cap;
  int jobs;
} srig_options;

SRIG_API void srig_options_init(srig_options* options);

/* Runs one command on `input` (graph, segments or region text, detected from
 * the first keyword; may be NULL for commands without input). Commands:
 * density, hakimi, nabla, represent, junctions, sample, extract, lowerbound,
 * scol, acyclic, inequalities, gapcover, bounds, pipeline. */
SRIG_API srig_status srig_run(const char* command, const char* input, const srig_options* options,
                              srig_report_t** out);

/* `key = value` lines. Owned by the report. */
SRIG_API const char* srig_report_text(const srig_report_t* report);
/* 1 when every check in the report held. */
SRIG_API int srig_report_passed(const srig_report_t* report);
SRIG_API void srig_report_free(srig_report_t* report);

#ifdef __cplusplus
}
#endif

#endif  // SRIG_SRIG_H_
