/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#ifndef CMC_CMC_H
#define CMC_CMC_H

/* C interface to the connected maximum cut library.
 *
 * Every fallible call returns a cmc_status. On failure the message of the
 * calling thread's last error is available from cmc_last_error() until the
 * next failing call on that thread. Strings returned through char** out
 * parameters are owned by the caller and released with cmc_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CMC_API __declspec(dllexport)
#else
#define CMC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cmc_status {
    CMC_OK = 0,
    CMC_INVALID_INPUT = 1,
    CMC_SIZE_GUARD = 2,
    CMC_INTERNAL = 3
} cmc_status;

typedef struct cmc_graph cmc_graph;
typedef struct cmc_solution cmc_solution;

CMC_API const char* cmc_version(void);
CMC_API const char* cmc_last_error(void);
CMC_API void cmc_string_free(char* s);

/* Graphs. A graph keeps the external labels of its source file and, when
 * present, its rotation system and outer face witness. */
CMC_API cmc_status cmc_graph_parse(const char* text, cmc_graph** out);
CMC_API cmc_status cmc_graph_read_file(const char* path, cmc_graph** out);
/* family is a generator spec such as "grid(3,3)" or "gnp(6,1/2)". */
CMC_API cmc_status cmc_graph_generate(const char* family, uint64_t seed, cmc_graph** out);
CMC_API void cmc_graph_free(cmc_graph* g);
CMC_API size_t cmc_graph_vertex_count(const cmc_graph* g);
CMC_API size_t cmc_graph_edge_count(const cmc_graph* g);
CMC_API int cmc_graph_has_embedding(const cmc_graph* g);
CMC_API cmc_status cmc_graph_write(const cmc_graph* g, char** text);
/* Newline-separated list of generator family names. */
CMC_API cmc_status cmc_generator_families(char** text);

/* Solvers. Decimal and p/q strings are accepted wherever a rational is
 * expected; NULL selects the default. */
CMC_API cmc_status cmc_solve_bcmc(const cmc_graph* g, uint64_t seed, cmc_solution** out);
CMC_API cmc_status cmc_solve_wcmc(const cmc_graph* g, const char* epsilon, uint64_t seed, cmc_solution** out);
CMC_API cmc_status cmc_solve_random_half(const cmc_graph* g, size_t trials, uint64_t seed, cmc_solution** out);
/* force != 0 lifts the vertex limit of exhaustive search up to 64. */
CMC_API cmc_status cmc_solve_brute_force(const cmc_graph* g, int force, cmc_solution** out);
/* td_text is a PACE .td decomposition over the graph's labels, or NULL to
 * build one. report (may be NULL) receives DP statistics as JSON. */
CMC_API cmc_status cmc_solve_treewidth(const cmc_graph* g, const char* td_text, cmc_solution** out, char** report);
/* report (may be NULL) receives the per-group run report as JSON. */
CMC_API cmc_status cmc_solve_ptas(const cmc_graph* g, const char* epsilon, cmc_solution** out, char** report);

CMC_API void cmc_solution_free(cmc_solution* s);
CMC_API size_t cmc_solution_size(const cmc_solution* s);
/* Copies min(size, capacity) external labels in increasing order. */
CMC_API size_t cmc_solution_labels(const cmc_solution* s, uint64_t* labels, size_t capacity);
/* Exact cut value as a decimal or p/q string. */
CMC_API cmc_status cmc_solution_cut(const cmc_solution* s, char** text);
CMC_API double cmc_solution_cut_double(const cmc_solution* s);
CMC_API int cmc_solution_connected(const cmc_solution* s);
/* Rechecks connectivity and the cut value against g. */
CMC_API cmc_status cmc_solution_verify(const cmc_graph* g, const cmc_solution* s);

/* Decompositions and validation. Reports are JSON objects with at least a
 * boolean "valid" field; an invalid object is still CMC_OK. */
CMC_API cmc_status cmc_decompose(const cmc_graph* g, char** td_text);
CMC_API cmc_status cmc_validate_td(const cmc_graph* g, const char* td_text, char** report);
CMC_API cmc_status cmc_validate_coloring(const cmc_graph* g, size_t k, char** report);
CMC_API cmc_status cmc_validate_pmsat(const char* pmsat_text, char** report);

/* PM-3SAT reduction: the gadget graph and its {K, threshold, roles} JSON. */
CMC_API cmc_status cmc_reduce_sat(const char* pmsat_text, char** graph_text, char** sidecar_json);

/* Benchmark suite (JSON) to records. format is "csv" or "json". */
CMC_API cmc_status cmc_bench(const char* suite_json, const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif
