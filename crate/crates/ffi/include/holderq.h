#ifndef HOLDERQ_H
#define HOLDERQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every `hq_*` function.
 */
typedef enum HqStatus {
  HQ_STATUS_OK = 0,
  /**
   * Empty tuple, or an element that is not strictly positive and finite.
   */
  HQ_STATUS_INVALID_INPUT = 1,
  HQ_STATUS_LENGTH_MISMATCH = 2,
  HQ_STATUS_UNDEFINED_AT_ZERO = 3,
  HQ_STATUS_INVALID_EXPONENT = 4,
  HQ_STATUS_OUT_OF_RANGE = 5,
  HQ_STATUS_TOO_LARGE = 6,
  HQ_STATUS_EMPTY_STREAM = 7,
  HQ_STATUS_ORIENTATION = 8,
  HQ_STATUS_NULL_POINTER = 9,
  HQ_STATUS_PANIC = 10,
} HqStatus;

typedef enum HqExponentTag {
  HQ_EXPONENT_TAG_NEG_INF = 0,
  HQ_EXPONENT_TAG_FINITE = 1,
  HQ_EXPONENT_TAG_ZERO = 2,
  HQ_EXPONENT_TAG_POS_INF = 3,
} HqExponentTag;

typedef enum HqVerdict {
  HQ_VERDICT_HOLDS_STRICT = 0,
  HQ_VERDICT_EQUALITY_N1 = 1,
  HQ_VERDICT_NEAR_EQUALITY = 2,
  HQ_VERDICT_VIOLATED = 3,
} HqVerdict;

/**
 * Opaque stream accumulator.
 */
typedef struct HqStream HqStream;

/**
 * Extended exponent; `value` is read only when `tag` is `FINITE`.
 */
typedef struct HqExponent {
  enum HqExponentTag tag;
  double value;
} HqExponent;

typedef struct HqReport {
  struct HqExponent p;
  size_t n;
  double lhs;
  double rhs;
  double gap;
  enum HqVerdict verdict;
} HqReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Human-readable name of a status code. The string is static.
 */
const char *hq_status_message(enum HqStatus status);

/**
 * `‖a‖_p`.
 *
 * # Safety
 * `a` must point to `n` doubles; `out` must be writable.
 */
enum HqStatus hq_holder_functional(const double *a, size_t n, struct HqExponent p, double *out);

/**
 * `ln Σ a_k^p` for a finite nonzero `p`.
 *
 * # Safety
 * `a` must point to `n` doubles; `out` must be writable.
 */
enum HqStatus hq_log_power_sum(const double *a, size_t n, double p, double *out);

/**
 * `‖a‖_p / ‖b‖_p`, including the limits at `p = 0, ±inf`.
 *
 * # Safety
 * `a` and `b` must each point to `n` doubles; `out` must be writable.
 */
enum HqStatus hq_lhs_quotient(const double *a,
                              const double *b,
                              size_t n,
                              struct HqExponent p,
                              double *out);

/**
 * `Σ a_k / b_k`.
 *
 * # Safety
 * `a` and `b` must each point to `n` doubles; `out` must be writable.
 */
enum HqStatus hq_rhs_ratio_sum(const double *a, const double *b, size_t n, double *out);

/**
 * `(Π a_k / b_k)^{1/n}`.
 *
 * # Safety
 * `a` and `b` must each point to `n` doubles; `out` must be writable.
 */
enum HqStatus hq_geometric_mean_ratio(const double *a, const double *b, size_t n, double *out);

/**
 * Checks `‖a‖_p / ‖b‖_p < Σ a_k / b_k`. `tolerance` is the near-equality
 * band relative to the right side; pass a negative value for the default.
 *
 * # Safety
 * `a` and `b` must each point to `n` doubles; `out` must be writable.
 */
enum HqStatus hq_check_main_inequality(const double *a,
                                       const double *b,
                                       size_t n,
                                       struct HqExponent p,
                                       double tolerance,
                                       struct HqReport *out);

/**
 * Geometric mean, arithmetic mean and sum of the ratios. Any of the out
 * pointers may be null.
 *
 * # Safety
 * `a` and `b` must each point to `n` doubles; non-null outs must be writable.
 */
enum HqStatus hq_am_gm_chain(const double *a,
                             const double *b,
                             size_t n,
                             double *gm,
                             double *am,
                             double *sum);

/**
 * Relative residual of the two-entry merge identity.
 *
 * # Safety
 * `a` must point to `n` doubles; `out` must be writable.
 */
enum HqStatus hq_merge_identity_residual(const double *a, size_t n, double p, double *out);

/**
 * Extremal ratio sums by sorting. Permutations are 0-based: `a[k]` is
 * paired with `b[perm[k]]`. The permutation outputs may be null.
 *
 * # Safety
 * `a` and `b` must each point to `n` doubles; sums must be writable;
 * non-null permutation outputs must hold `n` elements.
 */
enum HqStatus hq_extremal_ratio_sums(const double *a,
                                     const double *b,
                                     size_t n,
                                     double *min_sum,
                                     double *max_sum,
                                     size_t *min_perm,
                                     size_t *max_perm);

/**
 * Exhaustive version of [`hq_extremal_ratio_sums`] for `n <= 8`.
 *
 * # Safety
 * As for [`hq_extremal_ratio_sums`].
 */
enum HqStatus hq_brute_force_extrema(const double *a,
                                     const double *b,
                                     size_t n,
                                     double *min_sum,
                                     double *max_sum,
                                     size_t *min_perm,
                                     size_t *max_perm);

/**
 * Creates a stream accumulator for a finite nonzero `p`. `tolerance < 0`
 * selects the default band.
 *
 * # Safety
 * `out` must be writable. The handle must be released with
 * [`hq_stream_free`].
 */
enum HqStatus hq_stream_new(double p, double tolerance, struct HqStream **out);

/**
 * # Safety
 * `stream` must be a live handle from [`hq_stream_new`], not used
 * concurrently.
 */
enum HqStatus hq_stream_push(struct HqStream *stream, double a, double b);

/**
 * Number of pairs pushed so far; 0 for a null handle.
 *
 * # Safety
 * `stream` must be null or a live handle.
 */
size_t hq_stream_count(const struct HqStream *stream);

/**
 * Prefix check in the orientation fixed by the sign of `p`. `log_lhs` and
 * `log_rhs` (either may be null) receive `ln Σ a^p` and
 * `ln(Σ b^p · S^p)`.
 *
 * # Safety
 * `stream` must be a live handle; `out` must be writable.
 */
enum HqStatus hq_stream_check(const struct HqStream *stream,
                              struct HqReport *out,
                              double *log_lhs,
                              double *log_rhs);

/**
 * Releases a stream handle. Null is ignored.
 *
 * # Safety
 * `stream` must be null or a handle from [`hq_stream_new`] that has not
 * been freed.
 */
void hq_stream_free(struct HqStream *stream);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOLDERQ_H */
