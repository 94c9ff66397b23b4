#ifndef SCROLLINK_H
#define SCROLLINK_H

#pragma once

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SlStatus {
  SL_STATUS_OK = 0,
  SL_STATUS_NULL_POINTER = 1,
  /**
   * A documented precondition was violated.
   */
  SL_STATUS_PRECONDITION = 2,
  /**
   * An internal identity failed; indicates a bug.
   */
  SL_STATUS_CONSISTENCY = 3,
  /**
   * A divisor expression did not parse.
   */
  SL_STATUS_PARSE = 4,
  SL_STATUS_INVALID_UTF8 = 5,
  SL_STATUS_PANIC = 6,
} SlStatus;

typedef struct SlParams SlParams;

typedef struct SlProfile SlProfile;

typedef struct SlScroll SlScroll;

typedef struct SlScrollInfo {
  int64_t dim;
  int64_t degree;
  int64_t embedding_dim;
  /**
   * -1 when smooth.
   */
  int64_t vertex_dim;
  /**
   * True when `H ~ f·R` and the class group is cyclic.
   */
  bool cyclic_class_group;
} SlScrollInfo;

typedef struct SlClass {
  int64_t h;
  int64_t r;
} SlClass;

typedef struct SlCurve {
  int64_t degree;
  int64_t genus;
  int64_t ruling_degree;
} SlCurve;

typedef struct SlParamsView {
  int64_t d;
  int64_t n;
  int64_t s;
  int64_t m;
  int64_t eps;
  int64_t w;
  int64_t v;
  int64_t k;
  int64_t delta;
  int64_t e;
  bool in_asymptotic_range;
  bool planar_residual_range;
} SlParamsView;

typedef struct SlRational {
  int64_t num;
  int64_t den;
} SlRational;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or NULL. Owned by the
 * library and valid until the next failing call on the same thread.
 */
const char *sl_last_error(void);

/**
 * # Safety
 * `degrees` must point to `len` readable integers; `out` must be writable.
 */
enum SlStatus sl_scroll_new(const int64_t *degrees, size_t len, struct SlScroll **out);

/**
 * # Safety
 * `scroll` must come from `sl_scroll_new` and not be freed twice. NULL is ignored.
 */
void sl_scroll_free(struct SlScroll *scroll);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_scroll_info(const struct SlScroll *scroll, struct SlScrollInfo *out);

/**
 * Canonical representative of the Weil class `h·H + r·R`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_scroll_normalize_class(const struct SlScroll *scroll,
                                        struct SlClass class_,
                                        struct SlClass *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_scroll_is_reflexive(const struct SlScroll *scroll,
                                     int64_t a,
                                     int64_t b,
                                     bool *out);

/**
 * Intersection number of `len` resolved classes `h·H̃ + r·R̃`.
 *
 * # Safety
 * `classes` must point to `len` readable values.
 */
enum SlStatus sl_intersect(const struct SlScroll *scroll,
                           const struct SlClass *classes,
                           size_t len,
                           int64_t *out);

/**
 * Evaluates a product expression such as `(2H+R)*H*H`.
 *
 * # Safety
 * `expression` must be a NUL-terminated string.
 */
enum SlStatus sl_intersect_expr(const struct SlScroll *scroll,
                                const char *expression,
                                int64_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_ci_invariants(const struct SlScroll *scroll,
                               int64_t a,
                               int64_t b,
                               struct SlCurve *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_total_transform(const struct SlScroll *scroll, int64_t d, struct SlClass *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_proper_transform(const struct SlScroll *scroll,
                                  int64_t cut_degree,
                                  int64_t mult,
                                  struct SlClass *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_vertex_multiplicity_ci(const struct SlScroll *scroll,
                                        int64_t deg1,
                                        int64_t mult1,
                                        int64_t deg2,
                                        int64_t mult2,
                                        int64_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_vertex_multiplicity_in_ruling_plane(const struct SlScroll *scroll,
                                                     int64_t deg1,
                                                     int64_t mult1,
                                                     int64_t *out);

/**
 * Genus of the curve linked to `known` by a complete intersection of type `(a, b)`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_link_genus(const struct SlScroll *scroll,
                            int64_t a,
                            int64_t b,
                            struct SlCurve known,
                            int64_t unknown_degree,
                            int64_t unknown_ruling,
                            struct SlCurve *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum SlStatus sl_params_new(int64_t d, int64_t n, int64_t s, struct SlParams **out);

/**
 * # Safety
 * `params` must come from `sl_params_new`. NULL is ignored.
 */
void sl_params_free(struct SlParams *params);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_params_view(const struct SlParams *params, struct SlParamsView *out);

/**
 * `Δh(r)` of the extremal profile.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_delta_h(const struct SlParams *params, int64_t r, int64_t *out);

/**
 * Maximal genus bound from the profile.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_genus_bound(const struct SlParams *params, int64_t *out);

/**
 * The literal closed-form expression, as a reduced fraction.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_genus_closed_form(const struct SlParams *params, struct SlRational *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_h0_residual(const struct SlParams *params, int64_t i, int64_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SlStatus sl_profile_new(const struct SlParams *params, struct SlProfile **out);

/**
 * Profile from an explicit `Δh` sequence.
 *
 * # Safety
 * `deltas` must point to `len` readable integers.
 */
enum SlStatus sl_profile_from_deltas(const int64_t *deltas, size_t len, struct SlProfile **out);

/**
 * # Safety
 * `profile` must come from `sl_profile_new`. NULL is ignored.
 */
void sl_profile_free(struct SlProfile *profile);

/**
 * Number of stored `Δh` entries; 0 for NULL.
 *
 * # Safety
 * `profile` must be valid or NULL.
 */
size_t sl_profile_len(const struct SlProfile *profile);

/**
 * Copies up to `cap` entries of `Δh` into `buf` and stores the full length in `len_out`.
 *
 * # Safety
 * `buf` must have room for `cap` integers.
 */
enum SlStatus sl_profile_deltas(const struct SlProfile *profile,
                                int64_t *buf,
                                size_t cap,
                                size_t *len_out);

/**
 * Hilbert function `h(k)`, mass, `h^1(I_Z(k))` and ACM genus of a profile.
 *
 * # Safety
 * Output pointers may be NULL to skip a value; `profile` must be valid.
 */
enum SlStatus sl_profile_query(const struct SlProfile *profile,
                               int64_t k,
                               int64_t *cumulative,
                               int64_t *mass,
                               int64_t *h1,
                               int64_t *genus);

/**
 * # Safety
 * `out` must be writable.
 */
enum SlStatus sl_verify_closure(int64_t d, int64_t n, int64_t s, bool *out);

/**
 * Classification report as a JSON object (sorted keys). Free with `sl_string_free`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SlStatus sl_classify_json(int64_t d, int64_t n, int64_t s, char **out);

/**
 * # Safety
 * `s` must come from this library. NULL is ignored.
 */
void sl_string_free(char *s);

/**
 * # Safety
 * `out` must be writable.
 */
enum SlStatus sl_clebsch(int64_t degree, int64_t *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum SlStatus sl_noether_union(int64_t p1, int64_t p2, int64_t t, int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCROLLINK_H */
