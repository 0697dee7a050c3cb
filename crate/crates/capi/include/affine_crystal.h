#ifndef AFFINE_CRYSTAL_H
#define AFFINE_CRYSTAL_H

/* Generated by cbindgen from affine-crystal-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes mirrored from the CLI exit codes.
 */
typedef enum AcStatus {
  AcStatus_Ok = 0,
  /**
   * A pointer argument was null or not valid UTF-8.
   */
  AcStatus_InvalidArgument = 1,
  /**
   * Parse, precondition or unsupported-input errors.
   */
  AcStatus_BadInput = 2,
  /**
   * An internal cross-check or consistency check failed.
   */
  AcStatus_CrossCheck = 3,
  /**
   * A configured combinatorial bound was exceeded.
   */
  AcStatus_ResourceLimit = 4,
} AcStatus;

/**
 * Opaque crystal graph handle.
 */
typedef struct AcCrystal AcCrystal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the most recent error on this thread.  The pointer stays
 * valid until the next failing call on the same thread; do not free it.
 */
const char *ac_last_error(void);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `ptr` must be null or a pointer previously returned through an
 * out-parameter of this library, not yet freed.
 */
void ac_string_free(char *ptr);

/**
 * Build the crystal graph of V(Λ) up to `max_degree`.  `labels` selects the
 * labelling: 0 for highest-lift multipartitions, 1 for tensor factors.
 *
 * # Safety
 * `weight` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum AcStatus ac_crystal_build(uint32_t n,
                               const char *weight,
                               uint32_t max_degree,
                               int labels,
                               struct AcCrystal **out);

/**
 * Release a crystal handle.
 *
 * # Safety
 * `handle` must be null or a pointer from [`ac_crystal_build`], not yet
 * freed.
 */
void ac_crystal_free(struct AcCrystal *handle);

/**
 * Number of vertices in the built graph.
 *
 * # Safety
 * `handle` must be a live pointer from [`ac_crystal_build`].
 */
uint64_t ac_crystal_vertex_count(const struct AcCrystal *handle);

/**
 * Vertex counts per principal degree 0..=max_degree, written into `out`
 * (capacity `len`); returns the number of entries written.
 *
 * # Safety
 * `handle` must be live and `out` must point to at least `len` u64 slots.
 */
uintptr_t ac_crystal_counts_by_degree(const struct AcCrystal *handle, uint64_t *out, uintptr_t len);

/**
 * The deterministic DOT rendering of the graph.
 *
 * # Safety
 * `handle` must be live; `out` receives a string to free with
 * [`ac_string_free`].
 */
enum AcStatus ac_crystal_dot(const struct AcCrystal *handle, char **out);

/**
 * The JSON dump {vertices, edges, …} of the graph.
 *
 * # Safety
 * As for [`ac_crystal_dot`].
 */
enum AcStatus ac_crystal_json(const struct AcCrystal *handle, char **out);

/**
 * Weight multiplicities of V(Λ) to the given principal degree, as a JSON
 * object {"weight string": multiplicity, …}; the crystal and path routes
 * are cross-checked internally.
 *
 * # Safety
 * `weight` must be a valid string, `out` a valid pointer.
 */
enum AcStatus ac_character_json(uint32_t n, const char *weight, uint32_t max_degree, char **out);

/**
 * The branching function b^Λ_{Λ'Λ''} to order `truncation` as JSON
 * {"offset", "coeffs"}.  `method`: 0 multipartitions, 1 paths, 2 theta,
 * 3 all-with-cross-check.
 *
 * # Safety
 * String arguments must be valid; `out` must be a valid pointer.
 */
enum AcStatus ac_branching_json(uint32_t n,
                                const char *lambda_prime,
                                const char *lambda_second,
                                const char *lambda,
                                uint32_t truncation,
                                int method,
                                char **out);

/**
 * The JS generating function for charge profile `i` and condition `j`
 * (comma-separated integer lists), cross-checked internally.
 *
 * # Safety
 * String arguments must be valid; `out` must be a valid pointer.
 */
enum AcStatus ac_js_series_json(uint32_t n,
                                const char *i_profile,
                                const char *j_profile,
                                uint32_t truncation,
                                char **out);

/**
 * The JS(j) module labels of H_m(i) as a JSON array of multipartitions.
 *
 * # Safety
 * String arguments must be valid; `out` must be a valid pointer.
 */
enum AcStatus ac_js_modules_json(uint32_t n,
                                 const char *i_profile,
                                 const char *j_profile,
                                 uint32_t m,
                                 char **out);

/**
 * The ♯ image of a restricted highest-lift multipartition (JSON in, JSON
 * out).
 *
 * # Safety
 * String arguments must be valid; `out` must be a valid pointer.
 */
enum AcStatus ac_sharp_json(const char *multipartition_json, const char *lambda_prime, char **out);

/**
 * The highest-lift multipartition of a path in text form
 * ("steps|weight"), as JSON.
 *
 * # Safety
 * String arguments must be valid; `out` must be a valid pointer.
 */
enum AcStatus ac_highest_lift_json(uint32_t n, const char *path, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AFFINE_CRYSTAL_H */
