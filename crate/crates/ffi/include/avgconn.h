#ifndef AVGCONN_H
#define AVGCONN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AvgStatus {
  AVG_STATUS_OK = 0,
  AVG_STATUS_NULL_POINTER = 1,
  AVG_STATUS_INVALID_UTF8 = 2,
  AVG_STATUS_PARSE = 3,
  AVG_STATUS_PRECONDITION = 4,
  AVG_STATUS_INVALID_PARAMETER = 5,
  AVG_STATUS_EDGE_CAP_EXCEEDED = 6,
  AVG_STATUS_OVERFLOW = 7,
  AVG_STATUS_PANIC = 8,
} AvgStatus;

typedef enum AvgObjective {
  AVG_OBJECTIVE_VERTEX = 0,
  AVG_OBJECTIVE_EDGE = 1,
} AvgObjective;

typedef enum AvgMethod {
  AVG_METHOD_EXHAUSTIVE = 0,
  AVG_METHOD_BRANCH_AND_BOUND = 1,
  AVG_METHOD_LOCAL_SEARCH = 2,
} AvgMethod;

typedef struct AvgGraph AvgGraph;

typedef struct AvgOrientation AvgOrientation;

typedef struct AvgSearchResult AvgSearchResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread. Returns the length needed
 * including the NUL; 1 means no error is recorded.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t avg_last_error_message(char *buf, size_t len);

/**
 * Parses a graph6 string.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum AvgStatus avg_graph_from_graph6(const char *text, struct AvgGraph **out);

/**
 * Parses the edge-list text form (`n m` header, then one edge per line).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum AvgStatus avg_graph_from_edge_list(const char *text, struct AvgGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void avg_graph_free(struct AvgGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t avg_graph_order(const struct AvgGraph *g);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t avg_graph_size(const struct AvgGraph *g);

/**
 * Exact average connectivity of an undirected graph as `num / den`.
 *
 * # Safety
 * `g` must be a live handle; `num` and `den` must be writable.
 */
enum AvgStatus avg_graph_average(const struct AvgGraph *g,
                                 enum AvgObjective objective,
                                 uint64_t *num,
                                 uint64_t *den);

/**
 * Builds an orientation of `g` from its packed hex bit string. The graph is
 * copied, so `g` may be freed afterwards.
 *
 * # Safety
 * `g` must be a live handle, `hex` NUL-terminated and `out` writable.
 */
enum AvgStatus avg_orientation_from_hex(const struct AvgGraph *g,
                                        const char *hex,
                                        struct AvgOrientation **out);

/**
 * # Safety
 * `o` must be null or a live handle.
 */
void avg_orientation_free(struct AvgOrientation *o);

/**
 * Total connectivity of the oriented graph, summed over ordered pairs.
 *
 * # Safety
 * `o` must be a live handle and `total` writable.
 */
enum AvgStatus avg_orientation_total(const struct AvgOrientation *o,
                                     enum AvgObjective objective,
                                     uint64_t *total);

/**
 * Runs an orientation search. `threads` 0 means the library default.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum AvgStatus avg_search(const struct AvgGraph *g,
                          enum AvgMethod method,
                          enum AvgObjective objective,
                          size_t threads,
                          uint64_t seed,
                          struct AvgSearchResult **out);

/**
 * # Safety
 * `r` must be null or a live handle.
 */
void avg_search_result_free(struct AvgSearchResult *r);

/**
 * Best total and its average `num / den` over `n(n-1)` ordered pairs.
 *
 * # Safety
 * `r` must be a live handle; all outputs writable.
 */
enum AvgStatus avg_search_result_best(const struct AvgSearchResult *r,
                                      uint64_t *total,
                                      uint64_t *num,
                                      uint64_t *den);

/**
 * Whether the result is a proven optimum (exhaustive or branch-and-bound).
 *
 * # Safety
 * `r` must be null or a live handle.
 */
bool avg_search_result_certified(const struct AvgSearchResult *r);

/**
 * Writes the witness orientation as packed hex. See
 * [`avg_last_error_message`] for the buffer convention; `needed` may be null.
 *
 * # Safety
 * `r` must be a live handle; `buf` null or `len` writable bytes.
 */
enum AvgStatus avg_search_result_witness_hex(const struct AvgSearchResult *r,
                                             char *buf,
                                             size_t len,
                                             size_t *needed);

/**
 * Copies the witness into a new orientation handle.
 *
 * # Safety
 * `r` must be a live handle and `out` writable.
 */
enum AvgStatus avg_search_result_witness(const struct AvgSearchResult *r,
                                         struct AvgOrientation **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AVGCONN_H */
