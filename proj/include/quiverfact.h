/* C interface to the quiverfact library.
 *
 * Graphs are opaque handles. Every operation returns a status code; on
 * failure qf_last_error() holds a one-line message (per thread) until the
 * next call. Strings returned through `char **out` are owned by the caller
 * and must be released with qf_string_free. Vertices are named as in the
 * graph file.
 */
#ifndef QUIVERFACT_H
#define QUIVERFACT_H

#include <stddef.h>

#if defined(_WIN32)
#define QF_API __declspec(dllexport)
#else
#define QF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qf_graph qf_graph;

typedef enum qf_status {
    QF_OK = 0,
    QF_ERR_INVALID_ARGUMENT = 1,
    QF_ERR_UNKNOWN_VERTEX = 2,
    QF_ERR_PARSE = 3,
    QF_ERR_CAP_EXCEEDED = 4,
    QF_ERR_BOUND_EXCEEDED = 5,
    QF_ERR_SINGULAR = 6,
    QF_ERR_DOMAIN = 7,
    QF_ERR_INTERNAL = 8
} qf_status;

typedef enum qf_charset { QF_ASCII = 0, QF_UNICODE = 1 } qf_charset;

typedef enum qf_render_mode { QF_MODE_VERTEX = 0, QF_MODE_EDGE = 1, QF_MODE_LANGUAGE = 2 } qf_render_mode;

QF_API const char *qf_last_error(void);
QF_API const char *qf_status_name(qf_status status);
QF_API const char *qf_version(void);
QF_API void qf_string_free(char *s);

QF_API qf_status qf_graph_load_file(const char *path, qf_graph **out);
QF_API qf_status qf_graph_from_json(const char *text, qf_graph **out);
/* "complete:4", "loops:3", "cycle:5", "path:4", "bethe:3:2" */
QF_API qf_status qf_graph_from_family(const char *spec, qf_graph **out);
QF_API void qf_graph_free(qf_graph *g);
QF_API size_t qf_graph_vertex_count(const qf_graph *g);
QF_API size_t qf_graph_edge_count(const qf_graph *g);
QF_API qf_status qf_graph_to_json(const qf_graph *g, char **out);

/* Canonical factorization of a walk, e.g. "133112343442333" or "(1 3 3 1)". */
QF_API qf_status qf_factor(const qf_graph *g, const char *walk, qf_charset cs, char **out);

/* Factorized ensemble of all walks source -> target. */
QF_API qf_status qf_ensemble(const qf_graph *g, const char *source, const char *target, qf_render_mode mode,
                             qf_charset cs, char **out);

/* Walks of length <= max_length from the ensemble expression, one per line. */
QF_API qf_status qf_expand(const qf_graph *g, const char *source, const char *target, size_t max_length, size_t cap,
                           char **out);

/* Walks of length <= max_length by brute force, one per line. */
QF_API qf_status qf_enumerate(const qf_graph *g, const char *source, const char *target, size_t max_length,
                              size_t cap, char **out);

/* Walk generating function as "(num) / (den)"; uses scalar_weights when the
 * graph file has them, z on every other edge. */
QF_API qf_status qf_genfunc(const qf_graph *g, const char *source, const char *target, char **out);

/* The same through the resolvent of the adjacency matrix. */
QF_API qf_status qf_resolvent(const qf_graph *g, const char *source, const char *target, char **out);

/* Taylor coefficients 0..terms of the generating function, space separated. */
QF_API qf_status qf_series(const qf_graph *g, const char *source, const char *target, size_t terms, char **out);

/* Matrix path-sum over the graph file's weights, one row per line. */
QF_API qf_status qf_weighted_sum(const qf_graph *g, const char *source, const char *target, double rcond_min,
                                 char **out);

/* Star-height report. `target` may be NULL or equal to `source`. */
QF_API qf_status qf_starheight(const qf_graph *g, const char *source, const char *target, char **out);

#ifdef __cplusplus
}
#endif

#endif
