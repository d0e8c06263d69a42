#ifndef GEMBED_H
#define GEMBED_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

#define GEMBED_OK 0

#define GEMBED_ERR_ARGUMENT -1

#define GEMBED_ERR_PARSE -2

#define GEMBED_ERR_INVALID -3

#define GEMBED_ERR_UTF8 -4

#define GEMBED_ERR_SEARCH -5

/**
 * Closed 2-cell verdicts returned by `gembed_is_closed_2cell` and
 * `gembed_conditions_predict`.
 */
#define GEMBED_C2C_NO 0

#define GEMBED_C2C_YES 1

#define GEMBED_C2C_DEGENERATE 2

/**
 * An embedding handle: a gem plus the edge names it was loaded with.
 */
typedef struct GembedGem GembedGem;

/**
 * V/E/F counts and surface data of an embedding.
 */
typedef struct GembedSummary {
  uint64_t vertices;
  uint64_t edges;
  uint64_t faces;
  int64_t euler_characteristic;
  bool orientable;
  int64_t euler_genus;
} GembedSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent error on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *gembed_last_error(void);

/**
 * Parses the rotation text format into a gem handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
int gembed_gem_from_rotation_text(const char *text, struct GembedGem **out);

/**
 * Parses gem JSON into a gem handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
int gembed_gem_from_json(const char *text, struct GembedGem **out);

/**
 * Serializes a gem handle to JSON; free the result with
 * `gembed_string_free`.
 *
 * # Safety
 * `gem` must be a live handle and `out` a valid pointer.
 */
int gembed_gem_to_json(const struct GembedGem *gem, char **out);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `text` must come from this library and not be freed twice.
 */
void gembed_string_free(char *text);

/**
 * Frees a gem handle.
 *
 * # Safety
 * `gem` must come from this library and not be freed twice.
 */
void gembed_gem_free(struct GembedGem *gem);

/**
 * Number of graph edges.
 *
 * # Safety
 * `gem` must be a live handle.
 */
int64_t gembed_gem_edge_count(const struct GembedGem *gem);

/**
 * Fills `out` with the embedding summary.
 *
 * # Safety
 * `gem` must be a live handle and `out` a valid pointer.
 */
int gembed_gem_summary(const struct GembedGem *gem, struct GembedSummary *out);

/**
 * Partial geometric dual over the edge mask.
 *
 * # Safety
 * `gem` must be a live handle and `out` a valid pointer.
 */
int gembed_partial_dual(const struct GembedGem *gem, uint64_t mask, struct GembedGem **out);

/**
 * Partial Petrie dual over the edge mask.
 *
 * # Safety
 * `gem` must be a live handle and `out` a valid pointer.
 */
int gembed_partial_petrie(const struct GembedGem *gem, uint64_t mask, struct GembedGem **out);

/**
 * Closed 2-cell verdict for the embedding itself: `GEMBED_C2C_YES`,
 * `GEMBED_C2C_NO` or `GEMBED_C2C_DEGENERATE`.
 *
 * # Safety
 * `gem` must be a live handle.
 */
int gembed_is_closed_2cell(const struct GembedGem *gem);

/**
 * Predicts through the conditions path whether the partial dual over
 * `mask` is closed 2-cell, without constructing it.
 *
 * # Safety
 * `gem` must be a live handle.
 */
int gembed_conditions_predict(const struct GembedGem *gem, uint64_t mask);

/**
 * True iff some separating feature blocks every partial dual.
 *
 * # Safety
 * `gem` must be a live handle.
 */
int gembed_blocks_all_partial_duals(const struct GembedGem *gem);

/**
 * Runs the cross-checking search and returns the report as JSON; free it
 * with `gembed_string_free`. `cap` bounds the edge count.
 *
 * # Safety
 * `gem` must be a live handle and `out` a valid pointer.
 */
int gembed_search_json(const struct GembedGem *gem, uint64_t cap, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GEMBED_H */
