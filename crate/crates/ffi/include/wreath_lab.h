#ifndef WREATH_LAB_H
#define WREATH_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WlStatus {
  WL_STATUS_OK = 0,
  WL_STATUS_NULL_POINTER = 1,
  /**
   * Malformed word, JSON or configuration, or an index out of range.
   */
  WL_STATUS_INVALID_INPUT = 2,
  /**
   * A search ran out of its state budget; no answer was computed.
   */
  WL_STATUS_BUDGET = 3,
  WL_STATUS_UNSUPPORTED = 4,
  /**
   * An infinite family whose torsion policy cannot settle the question.
   */
  WL_STATUS_UNDECIDABLE = 5,
  WL_STATUS_PANIC = 6,
} WlStatus;

typedef struct WlElement WlElement;

typedef struct WlFamily WlFamily;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *wl_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *wl_version(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void wl_string_free(char *s);

/**
 * Builds a finite family from a configuration document such as
 * `{"groups":[{"name":"integers"}]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum WlStatus wl_family_from_json(const char *json, struct WlFamily **out);

/**
 * # Safety
 * `fam` must be NULL or a handle from [`wl_family_from_json`], not yet freed.
 */
void wl_family_free(struct WlFamily *fam);

/**
 * Parses a word over `s, F`: token form (`"F s F^-1 s^-1"`) when `compact`
 * is false, one letter per character from `s S f F` otherwise.
 *
 * # Safety
 * `word` must be a NUL-terminated string; `out` must be writable.
 */
enum WlStatus wl_element_parse(const char *word, bool compact, struct WlElement **out);

/**
 * Reads the JSON form `{"factors":[[shift,sign],...],"sExp":n}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum WlStatus wl_element_from_json(const char *json, struct WlElement **out);

/**
 * `Ψ(word)`. With `group = 0` the word uses the global generators of `G`;
 * otherwise it is a word over the generators of `G_group`.
 *
 * # Safety
 * `fam` must be a live handle, `word` a NUL-terminated string, `out` writable.
 */
enum WlStatus wl_embed(const struct WlFamily *fam,
                       size_t group,
                       const char *word,
                       struct WlElement **out);

/**
 * # Safety
 * `e` must be NULL or a live element handle.
 */
void wl_element_free(struct WlElement *e);

/**
 * `*out = a · b` as a new handle.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum WlStatus wl_element_mul(const struct WlElement *a,
                             const struct WlElement *b,
                             struct WlElement **out);

/**
 * JSON form of the collected element.
 *
 * # Safety
 * `e` must be a live handle and `out` writable.
 */
enum WlStatus wl_element_to_json(const struct WlElement *e, char **out);

/**
 * Token-form letter expansion of the collected element.
 *
 * # Safety
 * `e` must be a live handle and `out` writable.
 */
enum WlStatus wl_element_to_word(const struct WlElement *e, char **out);

/**
 * Word problem of `H̃`.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum WlStatus wl_is_trivial(const struct WlFamily *fam, const struct WlElement *e, bool *out);

/**
 * # Safety
 * Handles must be live and `out` writable.
 */
enum WlStatus wl_equal(const struct WlFamily *fam,
                       const struct WlElement *a,
                       const struct WlElement *b,
                       bool *out);

/**
 * Sign in the left-order of `H̃`: -1, 0 or 1.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum WlStatus wl_sign(const struct WlFamily *fam, const struct WlElement *e, int32_t *out);

/**
 * Membership in `Ψ(G_group)` (`group = 0`: in `Ψ(G)`). On success
 * `*is_member` is set, and for members `*preimage` receives the canonical
 * preimage word (otherwise it is set to NULL). `max_states = 0` selects the
 * default budget.
 *
 * # Safety
 * Handles must be live; `is_member` and `preimage` writable.
 */
enum WlStatus wl_membership(const struct WlFamily *fam,
                            size_t group,
                            const struct WlElement *e,
                            size_t max_states,
                            bool *is_member,
                            char **preimage);

/**
 * Word length of `e` over `{s, F}`: `*out` is the length, or -1 when it
 * exceeds `cap`. Returns `WL_STATUS_BUDGET` when `max_states` (0 = default)
 * is too small to decide.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum WlStatus wl_geodesic_length(const struct WlFamily *fam,
                                 const struct WlElement *e,
                                 uint32_t cap,
                                 size_t max_states,
                                 int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WREATH_LAB_H */
