#ifndef STEINBERG_H
#define STEINBERG_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum StStatus {
  ST_STATUS_OK = 0,
  ST_STATUS_NULL_POINTER = 1,
  ST_STATUS_INVALID_UTF8 = 2,
  ST_STATUS_PARSE_ERROR = 3,
  ST_STATUS_INVALID_ARGUMENT = 4,
  ST_STATUS_OUT_OF_RANGE = 5,
  ST_STATUS_PANIC = 6,
} StStatus;

/**
 * Status of a single check, mirroring the report vocabulary.
 */
typedef enum StCheckStatus {
  ST_CHECK_STATUS_PASS = 0,
  ST_CHECK_STATUS_FAIL = 1,
  ST_CHECK_STATUS_SKIPPED = 2,
  ST_CHECK_STATUS_NOT_DECIDABLE = 3,
} StCheckStatus;

/**
 * Weight multiset of a parsed rep expression.
 */
typedef struct StRep StRep;

/**
 * A verification report.
 */
typedef struct StReport StReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *st_version(void);

/**
 * Copies the last error message of this thread into a new string, or
 * writes NULL when there is none.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum StStatus st_last_error(char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void st_string_free(char *s);

/**
 * Parses a rep expression such as `wedge^2(b)*b` and evaluates its weights.
 *
 * # Safety
 * `expr` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum StStatus st_rep_parse(const char *expr, struct StRep **out);

/**
 * # Safety
 * `rep` must be NULL or a handle from [`st_rep_parse`], not yet freed.
 */
void st_rep_free(struct StRep *rep);

/**
 * # Safety
 * `rep` must be a live handle and `out` a valid pointer.
 */
enum StStatus st_rep_dim(const struct StRep *rep, uint64_t *out);

/**
 * Multiplicity of the weight `(a, b)` in fundamental-weight coordinates.
 *
 * # Safety
 * `rep` must be a live handle and `out` a valid pointer.
 */
enum StStatus st_rep_multiplicity(const struct StRep *rep, int64_t a, int64_t b, uint64_t *out);

/**
 * Weights as text, e.g. `{(-1,-1), (0,0)^2}`.
 *
 * # Safety
 * `rep` must be a live handle and `out` a valid pointer.
 */
enum StStatus st_rep_weights(const struct StRep *rep, char **out);

/**
 * Euler characteristic as text, e.g. `2[V(1,1)] + [V(0,0)]`.
 *
 * # Safety
 * `rep` must be a live handle and `out` a valid pointer.
 */
enum StStatus st_rep_euler_char(const struct StRep *rep, char **out);

/**
 * Weights contributing to `H^i` in characteristic `l`, as text.
 *
 * # Safety
 * `rep` must be a live handle and `out` a valid pointer.
 */
enum StStatus st_rep_psupp(const struct StRep *rep, uint32_t i, uint64_t l, char **out);

/**
 * Runs a campaign by name: `bwb-tables`, `identities`, `span`, `dims`,
 * `multiplicities`, `classgroup` or `all`. `l` is the characteristic where
 * the campaign takes one and is ignored otherwise; for `all` it is the
 * number of worker threads.
 *
 * # Safety
 * `campaign` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum StStatus st_verify(const char *campaign, uint64_t l, struct StReport **out);

/**
 * Runs the checks of one ideal case (`n2`, `n3-z`, `n3-x`, `gl-n2`,
 * `gl-n3`, `cnil`) in characteristic `l`, plus its randomized containment
 * test with `trials` points drawn from `seed`.
 *
 * # Safety
 * `case_name` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum StStatus st_verify_ideal(const char *case_name,
                              uint64_t l,
                              uint32_t degree_bound,
                              uint32_t trials,
                              uint64_t seed,
                              struct StReport **out);

/**
 * # Safety
 * `report` must be NULL or a handle from this library, not yet freed.
 */
void st_report_free(struct StReport *report);

/**
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum StStatus st_report_len(const struct StReport *report, size_t *out);

/**
 * Writes 1 when no entry failed, 0 otherwise.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum StStatus st_report_passed(const struct StReport *report, uint8_t *out);

/**
 * # Safety
 * `report` must be a live handle and `status` a valid pointer.
 */
enum StStatus st_report_entry_status(const struct StReport *report,
                                     size_t index,
                                     enum StCheckStatus *status);

/**
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum StStatus st_report_entry_id(const struct StReport *report, size_t index, char **out);

/**
 * The report as schema-1 JSON. With `deterministic` nonzero, timings are
 * written as 0.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum StStatus st_report_json(const struct StReport *report, uint8_t deterministic, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STEINBERG_H */
