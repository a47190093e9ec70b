#ifndef OCTOLAB_H
#define OCTOLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OctolabStatus {
  OCTOLAB_STATUS_OK = 0,
  OCTOLAB_STATUS_NULL_POINTER = 1,
  OCTOLAB_STATUS_INVALID_UTF8 = 2,
  OCTOLAB_STATUS_PARSE = 3,
  OCTOLAB_STATUS_DOMAIN = 4,
  OCTOLAB_STATUS_NORMALIZATION = 5,
  OCTOLAB_STATUS_DEGENERATE = 6,
  OCTOLAB_STATUS_INTERNAL = 7,
  OCTOLAB_STATUS_NO_MATCH = 8,
  OCTOLAB_STATUS_OVERFLOW = 9,
  OCTOLAB_STATUS_PANIC = 10,
} OctolabStatus;

/**
 * An exact octonion.
 */
typedef struct OctolabOctonion OctolabOctonion;

/**
 * Torsion structure constants at a unit octonion.
 */
typedef struct OctolabTorsion OctolabTorsion;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last non-`OK` status on this thread; empty after success.
 * The pointer stays valid until the next octolab call on the same thread.
 */
const char *octolab_last_error(void);

/**
 * Parses a literal such as `3/5+4/5e4`.
 *
 * # Safety
 * `literal` must be a valid nul-terminated string and `out` a valid pointer.
 */
enum OctolabStatus octolab_octonion_parse(const char *literal, struct OctolabOctonion **out);

/**
 * Builds `sum (num[k]/den[k]) e_k` from eight numerator/denominator pairs.
 *
 * # Safety
 * `num` and `den` must each point to 8 readable values; `out` must be valid.
 */
enum OctolabStatus octolab_octonion_from_ratios(const int64_t *num,
                                                const int64_t *den,
                                                struct OctolabOctonion **out);

/**
 * # Safety
 * `x` must be null or a handle from this library that has not been freed.
 */
void octolab_octonion_free(struct OctolabOctonion *x);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum OctolabStatus octolab_octonion_multiply(const struct OctolabOctonion *a,
                                             const struct OctolabOctonion *b,
                                             struct OctolabOctonion **out);

/**
 * # Safety
 * `x` must be a live handle and `out` a valid pointer.
 */
enum OctolabStatus octolab_octonion_conjugate(const struct OctolabOctonion *x,
                                              struct OctolabOctonion **out);

/**
 * `(xy)z - x(yz)`.
 *
 * # Safety
 * `x`, `y`, `z` must be live handles and `out` a valid pointer.
 */
enum OctolabStatus octolab_octonion_associator(const struct OctolabOctonion *x,
                                               const struct OctolabOctonion *y,
                                               const struct OctolabOctonion *z,
                                               struct OctolabOctonion **out);

/**
 * Squared norm.
 *
 * # Safety
 * `x` must be a live handle; `num`, `den` valid pointers.
 */
enum OctolabStatus octolab_octonion_norm(const struct OctolabOctonion *x,
                                         int64_t *num,
                                         int64_t *den);

/**
 * Coefficient of `e_index` (`index` 0..=7).
 *
 * # Safety
 * `x` must be a live handle; `num`, `den` valid pointers.
 */
enum OctolabStatus octolab_octonion_coefficient(const struct OctolabOctonion *x,
                                                size_t index,
                                                int64_t *num,
                                                int64_t *den);

/**
 * Canonical literal; release with `octolab_string_free`.
 *
 * # Safety
 * `x` must be a live handle and `out` a valid pointer.
 */
enum OctolabStatus octolab_octonion_format(const struct OctolabOctonion *x, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library that has not been freed.
 */
void octolab_string_free(char *s);

/**
 * Torsion tensor at the unit octonion `x`.
 *
 * # Safety
 * `x` must be a live handle and `out` a valid pointer.
 */
enum OctolabStatus octolab_torsion_new(const struct OctolabOctonion *x,
                                       struct OctolabTorsion **out);

/**
 * `T_ijk` with indices in 1..=7.
 *
 * # Safety
 * `t` must be a live handle; `num`, `den` valid pointers.
 */
enum OctolabStatus octolab_torsion_get(const struct OctolabTorsion *t,
                                       size_t i,
                                       size_t j,
                                       size_t k,
                                       int64_t *num,
                                       int64_t *den);

/**
 * # Safety
 * `t` must be null or a handle from this library that has not been freed.
 */
void octolab_torsion_free(struct OctolabTorsion *t);

/**
 * Runs the checks matching `selection` and returns the JSON report in
 * `report` (release with `octolab_string_free`) and the process-style exit
 * code in `exit_code` (0 no failures, 1 some check failed).
 *
 * # Safety
 * `selection` must be a valid nul-terminated string; `report`, `exit_code` valid pointers.
 */
enum OctolabStatus octolab_verify(const char *selection, char **report, int32_t *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OCTOLAB_H */
