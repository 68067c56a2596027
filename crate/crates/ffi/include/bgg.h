#ifndef BGG_H
#define BGG_H

/* Generated by cbindgen from the bgg-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of every fallible call.
 */
typedef enum BggStatus {
  BGG_STATUS_OK = 0,
  /**
   * Malformed input: bad rank, bad k, or a non-admissible weight shape.
   */
  BGG_STATUS_INVALID_INPUT = 1,
  /**
   * Some coordinate repeats three or more times.
   */
  BGG_STATUS_SINGULARITY_TOO_DEEP = 2,
  /**
   * More repeated pairs than fit into the first block (l > k).
   */
  BGG_STATUS_NO_REGULAR_CONJUGATE = 3,
  /**
   * An internal invariant failed; the result cannot be trusted.
   */
  BGG_STATUS_INTERNAL = 4,
  /**
   * A required pointer argument was null.
   */
  BGG_STATUS_NULL_POINTER = 5,
  /**
   * The structural verification suite reported a failure.
   */
  BGG_STATUS_VERIFICATION_FAILED = 6,
} BggStatus;

/**
 * Opaque handle to a fully built pipeline (analysis, labeled diagram,
 * assembled complex) for one `(mu, k)` input.
 */
typedef struct BggPipeline BggPipeline;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the message of the most recent failure on this thread, or null.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *bgg_last_error(void);

/**
 * Builds the pipeline for the weight `mu` (length `n`) on `G(k, n)`.
 *
 * On success, `*out` owns the handle; release it with `bgg_pipeline_free`.
 *
 * # Safety
 * `mu` must point to `n` readable values and `out` must be writable.
 */
enum BggStatus bgg_pipeline_new(const int64_t *mu,
                                uintptr_t n,
                                uintptr_t k,
                                struct BggPipeline **out);

/**
 * Releases a handle returned by `bgg_pipeline_new`. Null is a no-op.
 *
 * # Safety
 * `pipeline` must be a pointer from `bgg_pipeline_new`, not yet freed.
 */
void bgg_pipeline_free(struct BggPipeline *pipeline);

/**
 * The order of singularity `l`.
 *
 * # Safety
 * `pipeline` must be a live handle and `out` writable; same for the other getters.
 */
enum BggStatus bgg_pipeline_singularity_order(const struct BggPipeline *pipeline, uintptr_t *out);

/**
 * Number of vertices of the relative Hasse diagram.
 *
 * # Safety
 * See `bgg_pipeline_singularity_order`.
 */
enum BggStatus bgg_pipeline_relative_vertex_count(const struct BggPipeline *pipeline,
                                                  uintptr_t *out);

/**
 * Number of arrows of the relative Hasse diagram.
 *
 * # Safety
 * See `bgg_pipeline_singularity_order`.
 */
enum BggStatus bgg_pipeline_relative_arrow_count(const struct BggPipeline *pipeline,
                                                 uintptr_t *out);

/**
 * Number of vertices (bundles) of the assembled complex.
 *
 * # Safety
 * See `bgg_pipeline_singularity_order`.
 */
enum BggStatus bgg_pipeline_vertex_count(const struct BggPipeline *pipeline, uintptr_t *out);

/**
 * Number of jump arrows (differentials) of the assembled complex.
 *
 * # Safety
 * See `bgg_pipeline_singularity_order`.
 */
enum BggStatus bgg_pipeline_arrow_count(const struct BggPipeline *pipeline, uintptr_t *out);

/**
 * Number of chain degrees, `(k-l)(n-k-l) + 1`.
 *
 * # Safety
 * See `bgg_pipeline_singularity_order`.
 */
enum BggStatus bgg_pipeline_chain_space_count(const struct BggPipeline *pipeline, uintptr_t *out);

/**
 * Number of bundles in chain degree `s`. Fails with `INVALID_INPUT` when
 * `s` is out of range.
 *
 * # Safety
 * See `bgg_pipeline_singularity_order`.
 */
enum BggStatus bgg_pipeline_chain_space_size(const struct BggPipeline *pipeline,
                                             uintptr_t s,
                                             uintptr_t *out);

/**
 * Runs the structural verification suite (oracle isomorphism, shift law,
 * jump-label law, diamond pairing). `OK` when everything holds.
 *
 * # Safety
 * `pipeline` must be a live handle.
 */
enum BggStatus bgg_pipeline_check(const struct BggPipeline *pipeline);

/**
 * Serializes the full result (singularity data, labeled diagram, complex)
 * as a JSON document. The string must be released with `bgg_string_free`.
 *
 * # Safety
 * `pipeline` must be a live handle and `out` writable.
 */
enum BggStatus bgg_pipeline_to_json(const struct BggPipeline *pipeline, char **out);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `text` must come from this library and not be freed twice.
 */
void bgg_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BGG_H */
