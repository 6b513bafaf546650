#ifndef STANLEY_H
#define STANLEY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum StanleyStat {
  STANLEY_STAT_P = 0,
  STANLEY_STAT_T = 1,
  STANLEY_STAT_U = 2,
  STANLEY_STAT_F = 3,
} StanleyStat;

/**
 * Status codes returned by every fallible call.
 */
typedef enum StanleyStatus {
  STANLEY_STATUS_OK = 0,
  STANLEY_STATUS_NULL_POINTER = 1,
  STANLEY_STATUS_INVALID_ARGUMENT = 2,
  STANLEY_STATUS_OUT_OF_RANGE = 3,
  /**
   * A coefficient does not fit the requested integer type.
   */
  STANLEY_STATUS_OVERFLOW = 4,
  STANLEY_STATUS_PANIC = 5,
} StanleyStatus;

typedef enum StanleySuite {
  STANLEY_SUITE_ALL = 0,
  STANLEY_SUITE_SERIES = 1,
  STANLEY_SUITE_COMBINATORIAL = 2,
  STANLEY_SUITE_PROOF_STEPS = 3,
  STANLEY_SUITE_CONGRUENCES = 4,
} StanleySuite;

/**
 * Opaque truncated power series.
 */
typedef struct StanleySeries StanleySeries;

/**
 * Per-partition statistics.
 */
typedef struct StanleyPartitionStats {
  size_t odd_parts;
  size_t odd_parts_conjugate;
  size_t even_hooks;
  /**
   * 1 when O(λ) ≡ O(λ') (mod 4), else 0.
   */
  uint8_t is_t_type;
} StanleyPartitionStats;

/**
 * Outcome counts of a verification suite.
 */
typedef struct StanleySuiteSummary {
  size_t checks;
  size_t failed;
} StanleySuiteSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *stanley_last_error_message(void);

/**
 * Generating function of `stat` truncated at `order`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum StanleyStatus stanley_series_new(enum StanleyStat stat,
                                      size_t order,
                                      struct StanleySeries **out);

/**
 * Generating function of `u(4n + residue)` truncated at `order`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum StanleyStatus stanley_series_u_progression(size_t residue,
                                                size_t order,
                                                struct StanleySeries **out);

/**
 * Truncation order of a series, or 0 for NULL.
 *
 * # Safety
 * `series` must be NULL or a live handle from this library.
 */
size_t stanley_series_order(const struct StanleySeries *series);

/**
 * Coefficient of `q^index` as a signed 64-bit integer.
 *
 * # Safety
 * `series` must be a live handle and `out` valid for one write.
 */
enum StanleyStatus stanley_series_coeff_i64(const struct StanleySeries *series,
                                            size_t index,
                                            int64_t *out);

/**
 * Coefficient of `q^index` as a decimal string. Release it with
 * [`stanley_string_free`].
 *
 * # Safety
 * `series` must be a live handle and `out` valid for one write.
 */
enum StanleyStatus stanley_series_coeff_string(const struct StanleySeries *series,
                                               size_t index,
                                               char **out);

/**
 * # Safety
 * `series` must be NULL or a handle from this library not yet freed.
 */
void stanley_series_free(struct StanleySeries *series);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library not yet freed.
 */
void stanley_string_free(char *s);

/**
 * Statistics of the partition with the given parts (nonincreasing,
 * positive). `len == 0` is the empty partition and `parts` may be NULL.
 *
 * # Safety
 * `parts` must point to `len` readable values; `out` must be valid for one
 * write.
 */
enum StanleyStatus stanley_classify_partition(const size_t *parts,
                                              size_t len,
                                              struct StanleyPartitionStats *out);

/**
 * Runs a verification suite. Reports are discarded; only counts are
 * returned.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum StanleyStatus stanley_verify_suite(enum StanleySuite suite,
                                        size_t order,
                                        size_t enum_bound,
                                        size_t oracle_bound,
                                        struct StanleySuiteSummary *out);

/**
 * Library version as a static NUL-terminated string.
 */
const char *stanley_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STANLEY_H */
