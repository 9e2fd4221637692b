// Copyright 2026 The starpack Authors
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

#ifndef STARPACK_STARPACK_H
#define STARPACK_STARPACK_H

/* C interface to the starpack library. All objects are opaque handles owned
 * by the caller and released with the matching *_free function (NULL is
 * accepted). Functions return an sp_status; on failure a human-readable
 * message is available from sp_last_error() on the calling thread. Vertex
 * indices are 0-based. Strings returned through char** out-parameters are
 * heap-allocated and must be released with sp_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(STARPACK_BUILDING_LIBRARY)
#define SP_API __declspec(dllexport)
#else
#define SP_API __declspec(dllimport)
#endif
#else
#define SP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sp_status {
  SP_OK = 0,
  SP_ERR_INVALID_ARGUMENT = 1, /* bad parameter or precondition */
  SP_ERR_PARSE = 2,            /* malformed input text */
  SP_ERR_IO = 3,               /* file could not be read or written */
  SP_ERR_CONTRACT = 4,         /* input outside the promised graph class */
  SP_ERR_LIMIT = 5,            /* exponential search refused by a size guard */
  SP_ERR_INTERNAL = 6
} sp_status;

typedef struct sp_graph sp_graph;
typedef struct sp_packing sp_packing;
typedef struct sp_kernel sp_kernel;
typedef struct sp_3dm sp_3dm;

SP_API const char* sp_version(void);
SP_API const char* sp_status_string(sp_status status);
/* Message of the last failed call on this thread; "" if none. */
SP_API const char* sp_last_error(void);
SP_API void sp_string_free(char* s);

/* ---- graphs ---- */

SP_API sp_status sp_graph_create(size_t n, sp_graph** out);
SP_API void sp_graph_free(sp_graph* g);
SP_API sp_status sp_graph_add_edge(sp_graph* g, int32_t u, int32_t v);
SP_API size_t sp_graph_vertex_count(const sp_graph* g);
SP_API size_t sp_graph_edge_count(const sp_graph* g);
SP_API int sp_graph_has_edge(const sp_graph* g, int32_t u, int32_t v);
SP_API size_t sp_graph_degree(const sp_graph* g, int32_t v);

SP_API sp_status sp_graph_parse(const char* text, sp_graph** out);
SP_API sp_status sp_graph_read_file(const char* path, sp_graph** out);
/* `comment` may be NULL; otherwise it is written as a leading "c" line. */
SP_API sp_status sp_graph_format(const sp_graph* g, const char* comment, char** out);
SP_API sp_status sp_graph_write_file(const sp_graph* g, const char* comment, const char* path);

/* Writes 1 to *found and the path into witness[0..d) when g has an induced
 * path on d vertices; witness may be NULL. */
SP_API sp_status sp_graph_find_induced_path(const sp_graph* g, int d, int* found, int32_t* witness);
SP_API sp_status sp_graph_is_cograph(const sp_graph* g, int* result);
SP_API sp_status sp_graph_is_split(const sp_graph* g, int* result);

/* ---- packings ---- */

typedef enum sp_solve_mode {
  SP_SOLVE_COGRAPH = 0, /* polynomial, cographs only, r >= 3 */
  SP_SOLVE_ORACLE = 1,  /* exact exponential search */
  SP_SOLVE_GREEDY = 2   /* maximal, not maximum */
} sp_solve_mode;

/* The oracle refuses graphs with more than 24 vertices unless allow_large
 * is nonzero. */
SP_API sp_status sp_solve(const sp_graph* g, int r, sp_solve_mode mode, int allow_large, sp_packing** out);
SP_API void sp_packing_free(sp_packing* p);
SP_API size_t sp_packing_size(const sp_packing* p);
/* One "s <center> <leaves...>" line per star, 1-based. */
SP_API sp_status sp_packing_format(const sp_packing* p, char** out);
SP_API sp_status sp_packing_validate(const sp_graph* g, const sp_packing* p, int r, int* valid);

/* ---- kernelization ---- */

typedef enum sp_kernel_flags {
  SP_KERNEL_DEFAULT = 0,
  SP_KERNEL_VERIFY_CLASS = 1 /* reject inputs containing an induced P_d */
} sp_kernel_flags;

typedef enum sp_kernel_outcome {
  SP_OUTCOME_KERNEL = 0,
  SP_OUTCOME_TRIVIAL_YES = 1,
  SP_OUTCOME_TRIVIAL_NO = 2
} sp_kernel_outcome;

SP_API sp_status sp_kernelize(const sp_graph* g, int k, int r, int d, unsigned flags, sp_kernel** out);
SP_API void sp_kernel_free(sp_kernel* kr);
/* Copy of the output graph; free with sp_graph_free. */
SP_API sp_status sp_kernel_graph(const sp_kernel* kr, sp_graph** out);
SP_API int sp_kernel_k(const sp_kernel* kr);
SP_API sp_kernel_outcome sp_kernel_outcome_of(const sp_kernel* kr);
/* Trace and record lines. `instance` and `seed` may be NULL. */
SP_API sp_status sp_kernel_report(const sp_kernel* kr, const char* instance, const char* seed, char** out);
/* (k-1)(r+1)(r^(d+1)+1), saturating at INT64_MAX; 0 for k <= 1. */
SP_API int64_t sp_kernel_bound(int k, int r, int d);

/* ---- generators (deterministic per seed) ---- */

SP_API sp_status sp_generate_cograph(size_t n, uint64_t seed, double join_probability, sp_graph** out);
/* clique_size 0 picks a random size. */
SP_API sp_status sp_generate_split(size_t n, uint64_t seed, size_t clique_size, double cross_probability,
                                   sp_graph** out);
SP_API sp_status sp_generate_stars(size_t count, int r, double noise, uint64_t seed, sp_graph** out);
SP_API sp_status sp_generate_gnp(size_t n, double p, uint64_t seed, sp_graph** out);
SP_API sp_status sp_generate_3dm(int k, size_t m, uint64_t seed, int planted, sp_3dm** out);

/* ---- 3-dimensional matching ---- */

SP_API void sp_3dm_free(sp_3dm* inst);
SP_API sp_status sp_3dm_parse(const char* text, sp_3dm** out);
SP_API sp_status sp_3dm_read_file(const char* path, sp_3dm** out);
SP_API sp_status sp_3dm_format(const sp_3dm* inst, const char* comment, char** out);
SP_API int sp_3dm_k(const sp_3dm* inst);
SP_API size_t sp_3dm_triple_count(const sp_3dm* inst);
SP_API sp_status sp_3dm_has_perfect_matching(const sp_3dm* inst, int* result);
/* Gadget split graph with m(r+1) vertices. When roles is non-NULL it
 * receives a malloc'ed array of one role name per vertex (v1, v2, v3, x1,
 * x2, y, w) encoded as single chars '1','2','3','a','b','y','w'; release it
 * with sp_string_free. */
SP_API sp_status sp_reduce_3dm(const sp_3dm* inst, int r, sp_graph** out, char** roles);
SP_API sp_status sp_has_perfect_star_partition(const sp_graph* g, int r, int* result);

/* ---- benchmark ---- */

/* Kernelizes every *.graph file of corpus_dir for k in [k_min, k_max]. */
SP_API sp_status sp_bench_run(const char* corpus_dir, int k_min, int k_max, int r, int d, unsigned jobs, char** out);

#ifdef __cplusplus
}
#endif

#endif /* STARPACK_STARPACK_H */
