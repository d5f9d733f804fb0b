#ifndef HYPERBESSEL_H
#define HYPERBESSEL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum HbStatus {
  HB_STATUS_OK = 0,
  /**
   * A null pointer, zero count or misplaced Janowski constants.
   */
  HB_STATUS_INVALID_ARGUMENT = 1,
  HB_STATUS_INVALID_PARAMS = 2,
  HB_STATUS_INVALID_CONFIG = 3,
  HB_STATUS_DOMAIN = 4,
  HB_STATUS_TRUNCATION = 5,
  HB_STATUS_NEAR_POLE = 6,
  HB_STATUS_BRACKET = 7,
  HB_STATUS_CONVERGENCE = 8,
  HB_STATUS_SCAN_EXHAUSTED = 9,
  HB_STATUS_ZERO_RESIDUAL = 10,
  /**
   * An internal panic was caught at the boundary.
   */
  HB_STATUS_INTERNAL = 11,
} HbStatus;

typedef enum HbZeroKind {
  /**
   * Zeros of 𝒥.
   */
  HB_ZERO_KIND_FUNCTION = 0,
  /**
   * Zeros of f′.
   */
  HB_ZERO_KIND_DERIVATIVE = 1,
} HbZeroKind;

typedef enum HbRadiusKind {
  HB_RADIUS_KIND_LEMNISCATE_STARLIKE = 0,
  HB_RADIUS_KIND_LEMNISCATE_CONVEX = 1,
  HB_RADIUS_KIND_JANOWSKI_STARLIKE = 2,
  HB_RADIUS_KIND_JANOWSKI_CONVEX = 3,
} HbRadiusKind;

/**
 * Opaque parameter handle.
 */
typedef struct HbParams HbParams;

typedef struct HbComplex {
  double re;
  double im;
} HbComplex;

/**
 * Janowski constants `−1 ≤ B < A ≤ 1`.
 */
typedef struct HbJanowski {
  double a;
  double b;
} HbJanowski;

typedef struct HbRadius {
  double radius;
  double bracket_lo;
  double bracket_hi;
  double residual;
  size_t iterations;
  /**
   * `j_1` for starlike kinds, `γ_1` for convex kinds.
   */
  double ceiling;
} HbRadius;

typedef struct HbBoundary {
  double rho;
  size_t samples;
  /**
   * `INFINITY` when a denominator vanished at some sample.
   */
  double sup_modulus;
  double argmax_angle;
  bool satisfied;
} HbBoundary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a handle for `α_1, …, α_d` (each > −1). Free it with [`hb_params_free`].
 *
 * # Safety
 * `alphas` must point to `d` readable doubles; `out` must be writable.
 */
enum HbStatus hb_params_new(const double *alphas, size_t d, struct HbParams **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `params` must come from [`hb_params_new`] and not be used afterwards.
 */
void hb_params_free(struct HbParams *params);

/**
 * The dimension `d`, or 0 for a null handle.
 *
 * # Safety
 * `params` must be null or a live handle.
 */
size_t hb_params_dimension(const struct HbParams *params);

/**
 * `𝒥(z)`, `𝒥′(z)` and `𝒥″(z)`. Any of the outputs may be null.
 *
 * # Safety
 * `params` must be a live handle; non-null outputs must be writable.
 */
enum HbStatus hb_eval_j(const struct HbParams *params,
                        struct HbComplex z,
                        struct HbComplex *value,
                        struct HbComplex *d1,
                        struct HbComplex *d2);

/**
 * `x(r) = r f′(r)/f(r)` for `0 < r < j_1`.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum HbStatus hb_log_deriv_f(const struct HbParams *params, double r, double *out);

/**
 * `y(r) = r f″(r)/f′(r)` for `0 < r < γ_1`.
 *
 * # Safety
 * `params` must be a live handle; `out` must be writable.
 */
enum HbStatus hb_log_deriv_f_prime(const struct HbParams *params, double r, double *out);

/**
 * Writes the first `count` positive zeros of 𝒥 or f′ into `out`.
 *
 * # Safety
 * `params` must be a live handle; `out` must hold `count` doubles.
 */
enum HbStatus hb_zeros(const struct HbParams *params,
                       enum HbZeroKind kind,
                       size_t count,
                       double *out);

/**
 * Solves one radius equation. `jan` must be non-null exactly for the
 * Janowski kinds; `tol` is the root tolerance (scaled by `1 + radius`).
 *
 * # Safety
 * `params` must be a live handle; `jan` null or readable; `out` writable.
 */
enum HbStatus hb_radius(const struct HbParams *params,
                        enum HbRadiusKind kind,
                        const struct HbJanowski *jan,
                        double tol,
                        struct HbRadius *out);

/**
 * Samples the defining functional of `kind` at `samples` equispaced points
 * of `|z| = rho`; `rho` must lie below `j_1` (starlike) or `γ_1` (convex).
 *
 * # Safety
 * As for [`hb_radius`].
 */
enum HbStatus hb_boundary_sup(const struct HbParams *params,
                              enum HbRadiusKind kind,
                              const struct HbJanowski *jan,
                              double rho,
                              size_t samples,
                              struct HbBoundary *out);

/**
 * Copies the calling thread's last error message into `buf` (NUL-terminated,
 * truncated to `len`) and returns the full length including the terminator;
 * 0 when there is no message. A null `buf` only queries the length.
 *
 * # Safety
 * `buf` must be null or hold `len` writable bytes.
 */
size_t hb_last_error_message(char *buf, size_t len);

/**
 * Static name of a status code.
 */
const char *hb_status_name(enum HbStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERBESSEL_H */
