/* SPDX-License-Identifier: Apache-2.0 */
#ifndef LOCAPPROX_H
#define LOCAPPROX_H

/*
 * C interface to the locapprox library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a lax_status; on failure lax_last_error()
 * describes the problem (thread-local, valid until the next call on the
 * same thread). Strings returned through `char**` are owned by the caller
 * and released with lax_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LAX_BUILDING_LIBRARY)
#    define LAX_API __declspec(dllexport)
#  else
#    define LAX_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) && (__GNUC__ >= 4)
#  define LAX_API __attribute__((visibility("default")))
#else
#  define LAX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lax_status {
    LAX_OK = 0,
    LAX_ERR_VALIDATION = 1, /* malformed input, violated precondition */
    LAX_ERR_RESOURCE = 2,   /* size cap exceeded or infeasible request */
    LAX_ERR_SCHEME = 3,     /* interpretation produced an invalid edge relation */
    LAX_ERR_ARGUMENT = 4,   /* null handle or bad argument */
    LAX_ERR_INTERNAL = 5
} lax_status;

typedef struct lax_graph lax_graph;
typedef struct lax_dist lax_dist;
typedef struct lax_scheme lax_scheme;

LAX_API const char* lax_version(void);
LAX_API const char* lax_last_error(void);
LAX_API void lax_string_free(char* s);

/* graphs */
LAX_API lax_status lax_graph_parse(const char* text, lax_graph** out);
LAX_API lax_status lax_graph_read_file(const char* path, lax_graph** out);
LAX_API lax_status lax_graph_write(const lax_graph* g, char** text);
LAX_API void lax_graph_free(lax_graph* g);
LAX_API size_t lax_graph_vertex_count(const lax_graph* g);
LAX_API size_t lax_graph_edge_count(const lax_graph* g);
/* girth, or -1 for forests */
LAX_API lax_status lax_graph_girth(const lax_graph* g, long* girth);

/* tree types */
LAX_API lax_status lax_types_enumerate(int d, int c, int r, char** lines);
LAX_API lax_status lax_types_count(int d, int c, int r, char** decimal);
LAX_API lax_status lax_types_canonical(int d, int c, int r, const char* encoding, char** canonical);
LAX_API lax_status lax_types_truncate(int d, int c, int r, const char* encoding, int ell, char** truncated);
/* adm(t, tau) with t at radius k+1 and tau at radius k */
LAX_API lax_status lax_types_adm(int d, int c, int k, const char* t, const char* tau, long* value);
LAX_API lax_status lax_extract_ball(const lax_graph* g, long v, int r, char** ball_id);

/* distributions */
LAX_API lax_status lax_dist_parse(const char* text, lax_dist** out);
LAX_API lax_status lax_dist_read_file(const char* path, lax_dist** out);
LAX_API lax_status lax_dist_write(const lax_dist* q, char** text);
LAX_API void lax_dist_free(lax_dist* q);
LAX_API lax_status lax_dist_from_graph(const lax_graph* g, int k, lax_dist** out);
/* *passed is 1 iff both the unimodularity and the adm <= 1 checks pass */
LAX_API lax_status lax_dist_check(const lax_dist* q, int* passed, char** report);
LAX_API lax_status lax_dist_project(const lax_dist* q, int ell, lax_dist** out);

/* synthesizer */
LAX_API lax_status lax_threshold_n(int d, int c, int k, double epsilon, double* value);
LAX_API lax_status lax_synthesize(const lax_dist* q, long long n, uint64_t seed, double epsilon, lax_graph** out,
                                  char** report);
LAX_API lax_status lax_rainbow(const lax_graph* g, int r, lax_graph** out);
LAX_API lax_status lax_power(const lax_graph* g, int k, lax_graph** out);

/* audit; *ok is 1 iff every audited guarantee holds */
LAX_API lax_status lax_audit(const lax_graph* g, const lax_dist* q, int* ok, char** report);
LAX_API lax_status lax_stats(const lax_graph* g, int r, char** table);
LAX_API lax_status lax_distance(const lax_graph* g, const lax_graph* h, int R, double* truncated, double* upper,
                                char** report);
LAX_API lax_status lax_perturbation(const lax_graph* g, const lax_graph* h, int r, int* holds, char** report);

/* interpretation */
LAX_API lax_status lax_scheme_parse(const char* text, lax_scheme** out);
LAX_API lax_status lax_scheme_read_file(const char* path, lax_scheme** out);
LAX_API lax_status lax_scheme_write(const lax_scheme* s, char** text);
LAX_API void lax_scheme_free(lax_scheme* s);
LAX_API lax_status lax_scheme_validate(const lax_scheme* s, int* valid, char** report);
LAX_API lax_status lax_scheme_apply(const lax_scheme* s, const lax_graph* g, lax_graph** out);
LAX_API lax_status lax_pipeline(const lax_graph* target, const lax_graph* forest, int k, const long long* n_list,
                                size_t n_count, uint64_t seed, double epsilon, char** report);

#ifdef __cplusplus
}
#endif

#endif /* LOCAPPROX_H */
