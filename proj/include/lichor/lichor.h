/* SPDX-License-Identifier: Apache-2.0 */

/*
 * C interface to the lichor list edge coloring library.
 *
 * Objects are opaque handles released with their matching *_free function.
 * Every call returns a lichor_status; on failure, lichor_last_error() gives a
 * message for the calling thread. Strings returned through char** outputs are
 * heap-allocated and released with lichor_string_free.
 */

#ifndef LICHOR_H
#define LICHOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LICHOR_BUILDING)
#    define LICHOR_API __declspec(dllexport)
#  else
#    define LICHOR_API __declspec(dllimport)
#  endif
#else
#  define LICHOR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lichor_status {
    LICHOR_OK = 0,
    LICHOR_ERR_INPUT = 1,            /* bad argument or contract violation */
    LICHOR_ERR_PARSE = 2,            /* malformed document */
    LICHOR_ERR_NOT_LINE_PERFECT = 3, /* a block is not bipartite, four-vertex, or K_{1,1,n} */
    LICHOR_ERR_LIST_TOO_SMALL = 4,   /* some list is shorter than the chromatic index */
    LICHOR_ERR_INVARIANT = 5,        /* an induction step failed its check */
    LICHOR_ERR_SIZE_CAP = 6,         /* brute force refused an oversized instance */
    LICHOR_ERR_VERIFY = 7,           /* a coloring failed verification */
    LICHOR_ERR_INTERNAL = 8
} lichor_status;

typedef struct lichor_instance lichor_instance;
typedef struct lichor_report lichor_report;

typedef struct lichor_gen_params {
    uint64_t seed;
    size_t blocks;
    size_t max_multiplicity;
    size_t max_centers;
    size_t max_edges;          /* 0: unbounded */
    unsigned weight_bipartite; /* relative block-kind weights */
    unsigned weight_four_vertex;
    unsigned weight_k11n;
    int identical_lists;       /* nonzero: A_e = {1..chi'}; else random from 1..2chi' */
} lichor_gen_params;

/* Fills `params` with one block of each kind equally likely. */
LICHOR_API void lichor_gen_params_default(lichor_gen_params* params);

LICHOR_API const char* lichor_last_error(void);
LICHOR_API const char* lichor_status_name(lichor_status status);
LICHOR_API void lichor_string_free(char* text);

LICHOR_API lichor_status lichor_instance_parse(const char* text, size_t length,
                                               lichor_instance** out);
LICHOR_API void lichor_instance_free(lichor_instance* instance);
LICHOR_API lichor_status lichor_instance_emit(const lichor_instance* instance, char** out);
LICHOR_API size_t lichor_instance_edge_count(const lichor_instance* instance);

/* Random line perfect multigraph with chi'-sized lists. */
LICHOR_API lichor_status lichor_generate(const lichor_gen_params* params, lichor_instance** out);

LICHOR_API lichor_status lichor_chromatic_index(const lichor_instance* instance, size_t* out);

/* JSON: {"blocks": [{"block", "class", "edges", ...}], "cut_vertices": [...]} */
LICHOR_API lichor_status lichor_classify(const lichor_instance* instance, char** out);

LICHOR_API lichor_status lichor_solve(const lichor_instance* instance, size_t root_block,
                                      lichor_report** out);
LICHOR_API void lichor_report_free(lichor_report* report);
LICHOR_API lichor_status lichor_report_parse(const char* text, size_t length,
                                             lichor_report** out);
LICHOR_API lichor_status lichor_report_emit(const lichor_report* report, char** out);
/* 1 if every block was colored by its induction, 0 if any needed brute force. */
LICHOR_API int lichor_report_conforming(const lichor_report* report);
LICHOR_API lichor_status lichor_report_color(const lichor_report* report, size_t edge,
                                             uint64_t* out);

/* LICHOR_OK if the report colors the instance properly from its lists;
 * LICHOR_ERR_VERIFY otherwise, with the first violation in lichor_last_error(). */
LICHOR_API lichor_status lichor_verify(const lichor_instance* instance,
                                       const lichor_report* report);

/* Brute-force list coloring and chromatic index.
 * JSON: {"feasible": bool, "colors": [...] or null, "chi": k} */
LICHOR_API lichor_status lichor_oracle(const lichor_instance* instance, char** out);

#ifdef __cplusplus
}
#endif

#endif
