#ifndef RANKWITNESS_H
#define RANKWITNESS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum RwStatus {
  RW_STATUS_OK = 0,
  RW_STATUS_NULL_POINTER = 1,
  RW_STATUS_INVALID_UTF8 = 2,
  /**
   * Unparseable JSON or a structurally invalid request.
   */
  RW_STATUS_MALFORMED = 3,
  /**
   * Unsupported or oversized field parameters.
   */
  RW_STATUS_INVALID_FIELD = 4,
  /**
   * Division by zero, foreign elements and similar.
   */
  RW_STATUS_ARITHMETIC = 5,
  /**
   * A parameter range or theorem hypothesis does not hold.
   */
  RW_STATUS_HYPOTHESIS = 6,
  RW_STATUS_BUDGET_EXCEEDED = 7,
  /**
   * The call completed but the result did not verify.
   */
  RW_STATUS_VERIFICATION_FAILED = 8,
  RW_STATUS_PANIC = 9,
  RW_STATUS_OTHER = 10,
} RwStatus;

/**
 * An evaluation code.
 */
typedef struct RwCode RwCode;

/**
 * A finite field GF(p^{ell·m}) with σ = x^{q^s}.
 */
typedef struct RwField RwField;

/**
 * A σ-polynomial over an [`RwField`].
 */
typedef struct RwPoly RwPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *rw_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void rw_string_free(char *s);

/**
 * Version of the JSON reports produced by this library.
 */
uint32_t rw_schema_version(void);

/**
 * Builds GF(p^{ell·m}) with σ = x^{q^s}, q = p^ell. Orders above 2^20
 * need `force`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum RwStatus rw_field_new(uint32_t p,
                           uint32_t ell,
                           uint32_t m,
                           uint32_t s,
                           bool force,
                           struct RwField **out_field);

/**
 * # Safety
 * `f` must come from [`rw_field_new`] and not have been freed. Null is ignored.
 */
void rw_field_free(struct RwField *f);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `f` must be null or a live handle.
 */
uint32_t rw_field_order(const struct RwField *f);

/**
 * Size of the base field GF(q), or 0 for a null handle.
 *
 * # Safety
 * `f` must be null or a live handle.
 */
uint64_t rw_field_q(const struct RwField *f);

/**
 * The fixed primitive element.
 *
 * # Safety
 * `f` must be a live handle.
 */
uint32_t rw_field_primitive(const struct RwField *f);

/**
 * # Safety
 * `f` must be a live handle and `res` a valid pointer.
 */
enum RwStatus rw_field_add(const struct RwField *f, uint32_t a, uint32_t b, uint32_t *res);

/**
 * # Safety
 * `f` must be a live handle and `res` a valid pointer.
 */
enum RwStatus rw_field_sub(const struct RwField *f, uint32_t a, uint32_t b, uint32_t *res);

/**
 * # Safety
 * `f` must be a live handle and `res` a valid pointer.
 */
enum RwStatus rw_field_mul(const struct RwField *f, uint32_t a, uint32_t b, uint32_t *res);

/**
 * Fails with `RW_STATUS_ARITHMETIC` when `b` is zero.
 *
 * # Safety
 * `f` must be a live handle and `res` a valid pointer.
 */
enum RwStatus rw_field_div(const struct RwField *f, uint32_t a, uint32_t b, uint32_t *res);

/**
 * Absolute trace to GF(q).
 *
 * # Safety
 * `f` must be a live handle and `res` a valid pointer.
 */
enum RwStatus rw_field_trace(const struct RwField *f, uint32_t a, uint32_t *res);

/**
 * Σ coeffs[i] x^{σ^i}, reduced mod x^{σ^m} − x.
 *
 * # Safety
 * `coeffs` must point to `len` elements (or be null with `len` 0);
 * `out_poly` must be valid.
 */
enum RwStatus rw_poly_new(const struct RwField *f,
                          const uint32_t *coeffs,
                          size_t len,
                          struct RwPoly **out_poly);

/**
 * # Safety
 * `p` must come from this library and not have been freed. Null is ignored.
 */
void rw_poly_free(struct RwPoly *p);

/**
 * # Safety
 * `p` must be a live handle and `res` a valid pointer.
 */
enum RwStatus rw_poly_eval(const struct RwPoly *p, uint32_t x, uint32_t *res);

/**
 * Dimension of the kernel over GF(q).
 *
 * # Safety
 * `p` must be a live handle and `res` a valid pointer.
 */
enum RwStatus rw_poly_kernel_dim(const struct RwPoly *p, uint32_t *res);

/**
 * Monic with kernel dimension equal to its σ-degree.
 *
 * # Safety
 * `p` must be a live handle and `res` a valid pointer.
 */
enum RwStatus rw_poly_is_subspace(const struct RwPoly *p, bool *res);

/**
 * Adjoint under the trace form. Fails on the zero polynomial.
 *
 * # Safety
 * `p` must be a live handle and `out_poly` a valid pointer.
 */
enum RwStatus rw_poly_adjoint(const struct RwPoly *p, struct RwPoly **out_poly);

/**
 * Builds a code from a JSON object with `field`, `code` and `points`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out_code` valid.
 */
enum RwStatus rw_code_from_json(const char *json, bool force, struct RwCode **out_code);

/**
 * # Safety
 * `c` must come from this library and not have been freed. Null is ignored.
 */
void rw_code_free(struct RwCode *c);

/**
 * Code length n, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
uint32_t rw_code_length(const struct RwCode *c);

/**
 * log_q of the number of codewords.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
uint64_t rw_code_size_log_q(const struct RwCode *c);

/**
 * Brute-force minimum rank distance, enumerating at most `budget` words.
 *
 * # Safety
 * `c` must be a live handle and `res` a valid pointer.
 */
enum RwStatus rw_code_min_distance(const struct RwCode *c, uint64_t budget, uint32_t *res);

/**
 * Decodability claims for the code, as the JSON object `analyze` prints.
 *
 * # Safety
 * `c` must be a live handle and `out_json` a valid pointer.
 */
enum RwStatus rw_code_analyze(const struct RwCode *c, uint64_t budget, char **out_json);

/**
 * (m+n)/2 − sqrt((m+n)²/4 − m(n−h+1−ε)) and the first integer radius at
 * or above it. Fails with `RW_STATUS_HYPOTHESIS` on a negative radicand.
 *
 * # Safety
 * `threshold` and `first_radius` must be valid pointers.
 */
enum RwStatus rw_johnson_radius(uint32_t m,
                                uint32_t n,
                                uint32_t h,
                                double epsilon,
                                double *threshold,
                                uint32_t *first_radius);

/**
 * [n r]_q in decimal.
 *
 * # Safety
 * `out_dec` must be a valid pointer.
 */
enum RwStatus rw_gaussian_binomial(uint32_t n, uint32_t r, uint64_t q, char **out_dec);

/**
 * Runs a bundled recipe and returns its JSON run report. The report is
 * returned even when the status is `RW_STATUS_VERIFICATION_FAILED`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out_json` valid.
 */
enum RwStatus rw_run_bundled(const char *name, bool force, char **out_json);

/**
 * Runs a recipe given as JSON text.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out_json` valid.
 */
enum RwStatus rw_run_recipe_json(const char *json, bool force, char **out_json);

/**
 * Rechecks a witness report; with `exhaustive` also scans the whole ball.
 * Writes the checks as JSON.
 *
 * # Safety
 * `report_json` must be a NUL-terminated string and `out_json` valid.
 */
enum RwStatus rw_witness_verify_json(const char *report_json, bool exhaustive, char **out_json);

/**
 * Names of the bundled recipes as a JSON array.
 *
 * # Safety
 * `out_json` must be a valid pointer.
 */
enum RwStatus rw_bundled_recipes(char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RANKWITNESS_H */
