#ifndef REGIONGRAY_H
#define REGIONGRAY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RgStatus {
  RG_STATUS_OK = 0,
  /**
   * Malformed or out-of-range input.
   */
  RG_STATUS_INPUT = 1,
  /**
   * An internal structural check failed.
   */
  RG_STATUS_STRUCTURE = 2,
  /**
   * A size guard was exceeded.
   */
  RG_STATUS_REFUSED = 3,
  /**
   * A required pointer was null.
   */
  RG_STATUS_NULL = 4,
  /**
   * A listing failed verification.
   */
  RG_STATUS_INVALID = 5,
  /**
   * Index out of range.
   */
  RG_STATUS_RANGE = 6,
  RG_STATUS_PANIC = 7,
} RgStatus;

/**
 * An arrangement with its optional supersolvable chain.
 */
typedef struct RgArrangement RgArrangement;

/**
 * A finished listing, one object per line.
 */
typedef struct RgListing RgListing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty if none. Valid until
 * the next call that fails.
 */
const char *rg_last_error(void);

/**
 * Generates the Gray code of a built-in family (`binary`, `perm`,
 * `signed-perm`, `acyclic` on the complete graph, `sym-triangulation`).
 *
 * # Safety
 * `family` must be a valid C string and `out` a valid pointer.
 */
enum RgStatus rg_generate(const char *family, uint32_t n, struct RgListing **out);

/**
 * Number of lines in a listing (0 for a null handle).
 *
 * # Safety
 * `l` must be null or a live handle.
 */
size_t rg_listing_len(const struct RgListing *l);

/**
 * Whether the listing closes into a cycle.
 *
 * # Safety
 * `l` must be null or a live handle.
 */
bool rg_listing_is_cyclic(const struct RgListing *l);

/**
 * Line `i` of a listing, owned by the listing; null when out of range.
 *
 * # Safety
 * `l` must be null or a live handle.
 */
const char *rg_listing_line(const struct RgListing *l, size_t i);

/**
 * # Safety
 * `l` must be null or a handle not freed before.
 */
void rg_listing_free(struct RgListing *l);

/**
 * Number of objects in a built-in family.
 *
 * # Safety
 * `family` must be a valid C string and `out` a valid pointer.
 */
enum RgStatus rg_count(const char *family, uint32_t n, uint64_t *out);

/**
 * Checks listing text (header lines optional) against a built-in family.
 * Returns `RG_STATUS_INVALID` with the first violation in the error message
 * when the listing is not a Hamiltonian cycle or path.
 *
 * # Safety
 * `family` and `listing` must be valid C strings.
 */
enum RgStatus rg_verify_text(const char *family, uint32_t n, const char *listing);

/**
 * Parses `{"dim": d, "normals": [...], "chain": [...]}`.
 *
 * # Safety
 * `json` must be a valid C string and `out` a valid pointer.
 */
enum RgStatus rg_arrangement_from_json(const char *json, struct RgArrangement **out);

/**
 * # Safety
 * `a` must be null or a handle not freed before.
 */
void rg_arrangement_free(struct RgArrangement *a);

/**
 * Number of hyperplanes (0 for a null handle).
 *
 * # Safety
 * `a` must be null or a live handle.
 */
size_t rg_arrangement_len(const struct RgArrangement *a);

/**
 * Rank of the normal vectors (0 for a null handle).
 *
 * # Safety
 * `a` must be null or a live handle.
 */
size_t rg_arrangement_rank(const struct RgArrangement *a);

/**
 * Counts the regions by exact enumeration.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum RgStatus rg_arrangement_region_count(const struct RgArrangement *a, uint64_t *out);

/**
 * Hamiltonian cycle of the region graph from the first canonical base
 * region, as sign strings. Needs the chain given in the JSON.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum RgStatus rg_arrangement_ham_cycle(const struct RgArrangement *a, struct RgListing **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* REGIONGRAY_H */
