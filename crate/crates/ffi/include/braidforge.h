#ifndef BRAIDFORGE_H
#define BRAIDFORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum BfStatus {
  BF_STATUS_OK = 0,
  BF_STATUS_NULL_POINTER = 1,
  BF_STATUS_INVALID_UTF8 = 2,
  BF_STATUS_PARSE = 3,
  BF_STATUS_INVALID_INPUT = 4,
  BF_STATUS_NOT_POSITIVE = 5,
  BF_STATUS_COMPUTATION = 6,
  BF_STATUS_PANIC = 7,
} BfStatus;

/**
 * Opaque braid word.
 */
typedef struct BfBraid BfBraid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *bf_version(void);

/**
 * Static description of a status code.
 */
const char *bf_status_message(enum BfStatus status);

/**
 * Copy of the message for the last failure on this thread, or NULL.
 * Release with `bf_string_free`.
 */
char *bf_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void bf_string_free(char *s);

/**
 * Parses `"<strands>: g1 g2 ..."`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum BfStatus bf_braid_parse(const char *text, struct BfBraid **out);

/**
 * Builds a braid from `len` signed 1-based generators.
 *
 * # Safety
 * `letters` must point to `len` readable values (may be NULL when
 * `len == 0`); `out` must be writable.
 */
enum BfStatus bf_braid_new(size_t strands,
                           const int32_t *letters,
                           size_t len,
                           struct BfBraid **out);

/**
 * Braid of a T-link literal such as `"T((3,1),(7,3))"`.
 *
 * # Safety
 * `literal` must be a NUL-terminated string; `out` must be writable.
 */
enum BfStatus bf_braid_from_tlink(const char *literal, struct BfBraid **out);

/**
 * Braid of a V-link literal such as `"V((2,~2),(3,3))"`.
 *
 * # Safety
 * `literal` must be a NUL-terminated string; `out` must be writable.
 */
enum BfStatus bf_braid_from_vlink(const char *literal, struct BfBraid **out);

/**
 * # Safety
 * `b` must be NULL or a handle from this library, not yet freed.
 */
void bf_braid_free(struct BfBraid *b);

/**
 * Strand count, or 0 for a NULL handle.
 *
 * # Safety
 * `b` must be NULL or a live handle.
 */
size_t bf_braid_strands(const struct BfBraid *b);

/**
 * Word length, or 0 for a NULL handle.
 *
 * # Safety
 * `b` must be NULL or a live handle.
 */
size_t bf_braid_len(const struct BfBraid *b);

/**
 * The braid in text form.
 *
 * # Safety
 * `b` must be a live handle; `out` must be writable.
 */
enum BfStatus bf_braid_to_string(const struct BfBraid *b, char **out);

/**
 * Largest `k` with the positive braid divisible by `k` full twists.
 *
 * # Safety
 * `b` must be a live handle; `out` must be writable.
 */
enum BfStatus bf_full_twists(const struct BfBraid *b, size_t *out);

/**
 * Number of closure components.
 *
 * # Safety
 * `b` must be a live handle; `out` must be writable.
 */
enum BfStatus bf_component_count(const struct BfBraid *b, size_t *out);

/**
 * Whether two positive braids are equal in the positive braid monoid.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum BfStatus bf_positive_equal(const struct BfBraid *a, const struct BfBraid *b, bool *out);

/**
 * Garside normal form as JSON.
 *
 * # Safety
 * `b` must be a live handle; `out` must be writable.
 */
enum BfStatus bf_normal_form_json(const struct BfBraid *b, char **out);

/**
 * Linking matrix as JSON.
 *
 * # Safety
 * `b` must be a live handle; `out` must be writable.
 */
enum BfStatus bf_linking_json(const struct BfBraid *b, char **out);

/**
 * Component count, Euler characteristic, linking multiset and Alexander
 * polynomial as JSON. Positive braids only.
 *
 * # Safety
 * `b` must be a live handle; `out` must be writable.
 */
enum BfStatus bf_invariants_json(const struct BfBraid *b, char **out);

/**
 * Deletes the closure components with the given ids.
 *
 * # Safety
 * `b` must be a live handle; `ids` must point to `n` readable values;
 * `out` must be writable.
 */
enum BfStatus bf_delete_components(const struct BfBraid *b,
                                   const size_t *ids,
                                   size_t n,
                                   struct BfBraid **out);

/**
 * Adds the braid axis as a new last strand.
 *
 * # Safety
 * `b` must be a live handle; `out` must be writable.
 */
enum BfStatus bf_adjoin_axis(const struct BfBraid *b, struct BfBraid **out);

/**
 * Runs every verification pipeline on the default grid and writes the
 * JSON report; `all_passed` receives whether every check passed.
 *
 * # Safety
 * `out` and `all_passed` must be writable.
 */
enum BfStatus bf_verify_all_json(size_t k_max, char **out, bool *all_passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRAIDFORGE_H */
