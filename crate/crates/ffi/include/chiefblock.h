#ifndef CHIEFBLOCK_H
#define CHIEFBLOCK_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum {
  CB_STATUS_OK = 0,
  CB_STATUS_NULL_POINTER = 1,
  CB_STATUS_INVALID_UTF8 = 2,
  CB_STATUS_PARSE = 3,
  CB_STATUS_UNKNOWN_NAME = 4,
  CB_STATUS_CAP_EXCEEDED = 5,
  CB_STATUS_NOT_NORMAL = 6,
  CB_STATUS_INVARIANT = 7,
  CB_STATUS_FAILED = 8,
  CB_STATUS_PANIC = 9,
} CbStatus;

/**
 * Opaque group handle.
 */
typedef struct CbGroup CbGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a built-in group such as `"A5"` or `"SL25"`.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` a valid pointer.
 */
CbStatus cb_group_named(const char *name, CbGroup **out);

/**
 * Builds a group from a JSON description.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
CbStatus cb_group_from_spec(const char *json, CbGroup **out);

/**
 * Releases a group handle. Null is ignored.
 *
 * # Safety
 * `group` must come from this library and not be used afterwards.
 */
void cb_group_free(CbGroup *group);

/**
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
CbStatus cb_group_order(const CbGroup *group, uintptr_t *out);

/**
 * Number of normal subgroups.
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
CbStatus cb_normal_subgroup_count(const CbGroup *group, uintptr_t *out);

/**
 * Number of distinct chief factors.
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
CbStatus cb_chief_factor_count(const CbGroup *group, uintptr_t *out);

/**
 * Number of chief series, counting at most `max_series`.
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
CbStatus cb_chief_series_count(const CbGroup *group, uintptr_t max_series, uintptr_t *out);

/**
 * Number of chief blocks.
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
CbStatus cb_block_count(const CbGroup *group, uintptr_t *out);

/**
 * Number of components.
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
CbStatus cb_component_count(const CbGroup *group, uintptr_t *out);

/**
 * The JSON analysis report (blocks and components included). Release the
 * string with `cb_string_free`.
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
CbStatus cb_analyze_json(const CbGroup *group, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void cb_string_free(char *s);

/**
 * Message for the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *cb_last_error(void);

/**
 * Short name of a status code. The string is static.
 */
const char *cb_status_name(CbStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHIEFBLOCK_H */
