#ifndef RATVEC_H
#define RATVEC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RatvecStatus {
  RATVEC_STATUS_OK = 0,
  RATVEC_STATUS_NOT_A_RATIO_VECTOR = 1,
  RATVEC_STATUS_INVALID_ARGUMENT = 2,
  RATVEC_STATUS_PARSE_ERROR = 3,
  RATVEC_STATUS_DEGENERATE = 4,
  RATVEC_STATUS_NO_CONVERGENCE = 5,
  RATVEC_STATUS_NULL_POINTER = 6,
  RATVEC_STATUS_INDEX_OUT_OF_RANGE = 7,
  RATVEC_STATUS_INTERNAL = 8,
} RatvecStatus;

typedef enum RatvecRegion {
  RATVEC_REGION_OUTSIDE = 0,
  RATVEC_REGION_Z1 = 1,
  RATVEC_REGION_Z2 = 2,
  RATVEC_REGION_Z3 = 3,
  RATVEC_REGION_BOUNDARY_INDETERMINATE = 4,
} RatvecRegion;

/**
 * Solutions of `R(u, v, w) = 0` for fixed rational `u, v`.
 */
typedef struct RatvecSolveW RatvecSolveW;

/**
 * Membership verdict for one point.
 */
typedef struct RatvecVerdict RatvecVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message on this thread, or null. Valid until the next failing
 * call on the same thread.
 */
const char *ratvec_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void ratvec_string_free(char *s);

/**
 * Ratio vector and critical points of the quartic with strictly increasing
 * `roots[0..4]`, using relative bisection tolerance `tol`.
 *
 * # Safety
 * `roots` must point to 4 doubles; `out_uvw` and `out_critical` to 3 each.
 */
enum RatvecStatus ratvec_forward_f64(const double *roots,
                                     double tol,
                                     double *out_uvw,
                                     double *out_critical);

/**
 * Membership test in binary64.
 *
 * # Safety
 * `out` must be a valid pointer; on success it receives a new handle.
 */
enum RatvecStatus ratvec_check_f64(double u, double v, double w, struct RatvecVerdict **out);

/**
 * Exact membership test. Inputs are `"p/q"`, exact decimals, or surds such
 * as `"(156303 - 9*sqrt(10054801))/211888"`.
 *
 * # Safety
 * Strings must be NUL-terminated; `out` must be a valid pointer.
 */
enum RatvecStatus ratvec_check_str(const char *u,
                                   const char *v,
                                   const char *w,
                                   struct RatvecVerdict **out);

/**
 * # Safety
 * `verdict` must be a live handle.
 */
bool ratvec_verdict_is_member(const struct RatvecVerdict *verdict);

/**
 * # Safety
 * `verdict` must be a live handle.
 */
enum RatvecRegion ratvec_verdict_region(const struct RatvecVerdict *verdict);

/**
 * `k` at the point, rendered exactly when the input was exact.
 *
 * # Safety
 * `verdict` must be a live handle. Free the result with [`ratvec_string_free`].
 */
char *ratvec_verdict_k(const struct RatvecVerdict *verdict);

/**
 * `R` at the point.
 *
 * # Safety
 * `verdict` must be a live handle. Free the result with [`ratvec_string_free`].
 */
char *ratvec_verdict_r(const struct RatvecVerdict *verdict);

/**
 * # Safety
 * `verdict` must be null or a handle not yet freed.
 */
void ratvec_verdict_free(struct RatvecVerdict *verdict);

/**
 * Canonical `(r, s)` in binary64. With `checked` set, non-members give
 * `RATVEC_STATUS_NOT_A_RATIO_VECTOR`.
 *
 * # Safety
 * `out_r` and `out_s` must be valid pointers.
 */
enum RatvecStatus ratvec_reconstruct_f64(double u,
                                         double v,
                                         double w,
                                         bool checked,
                                         double *out_r,
                                         double *out_s);

/**
 * Exact canonical `(r, s)` as strings.
 *
 * # Safety
 * Strings must be NUL-terminated; outputs must be valid pointers. Free the
 * results with [`ratvec_string_free`].
 */
enum RatvecStatus ratvec_reconstruct_str(const char *u,
                                         const char *v,
                                         const char *w,
                                         bool checked,
                                         char **out_r,
                                         char **out_s);

/**
 * All real `w` with `R(u, v, w) = 0` for rational `u, v`, ascending.
 *
 * # Safety
 * Strings must be NUL-terminated; `out` must be a valid pointer.
 */
enum RatvecStatus ratvec_solve_w(const char *u, const char *v, struct RatvecSolveW **out);

/**
 * # Safety
 * `handle` must be a live handle.
 */
size_t ratvec_solve_w_count(const struct RatvecSolveW *handle);

/**
 * Root `index` as an exact string, its binary64 value and its membership.
 *
 * # Safety
 * `handle` must be live; any output pointer may be null to skip it. Free
 * `*out_text` with [`ratvec_string_free`].
 */
enum RatvecStatus ratvec_solve_w_root(const struct RatvecSolveW *handle,
                                      size_t index,
                                      char **out_text,
                                      double *out_value,
                                      bool *out_is_member);

/**
 * # Safety
 * `handle` must be null or a handle not yet freed.
 */
void ratvec_solve_w_free(struct RatvecSolveW *handle);

double ratvec_eval_r(double u, double v, double w);

double ratvec_eval_k(double u, double v, double w);

double ratvec_eval_d(double u, double v, double w);

/**
 * Runs the identity suite; `*out_failed` receives the number of failures.
 *
 * # Safety
 * `out_failed` must be a valid pointer.
 */
enum RatvecStatus ratvec_verify_identities(uint32_t *out_failed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RATVEC_H */
