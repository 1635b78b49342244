/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef LTLF_H
#define LTLF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum LtlfStatus {
  LTLF_STATUS_OK = 0,
  LTLF_STATUS_NULL_ARGUMENT = 1,
  LTLF_STATUS_INVALID_UTF8 = 2,
  LTLF_STATUS_PARSE_ERROR = 3,
  LTLF_STATUS_TRACE_ERROR = 4,
  LTLF_STATUS_POSITION_OUT_OF_RANGE = 5,
  LTLF_STATUS_PANIC = 6,
} LtlfStatus;

/**
 * Opaque parsed formula.
 */
typedef struct LtlfFormula LtlfFormula;

/**
 * Opaque non-empty finite trace.
 */
typedef struct LtlfTrace LtlfTrace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *ltlf_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string produced by this library, not yet freed.
 */
void ltlf_string_free(char *s);

/**
 * Parses `text` into a new formula handle stored in `*out`.
 *
 * # Safety
 * `text` must be null or a nul-terminated string; `out` must be null or
 * writable.
 */
enum LtlfStatus ltlf_formula_parse(const char *text, struct LtlfFormula **out);

/**
 * Releases a formula handle. Null is ignored.
 *
 * # Safety
 * `f` must be null or a handle from [`ltlf_formula_parse`], not yet freed.
 */
void ltlf_formula_free(struct LtlfFormula *f);

/**
 * Renders the formula's core form; free the result with [`ltlf_string_free`].
 *
 * # Safety
 * `f` must be null or a live handle; `out` must be null or writable.
 */
enum LtlfStatus ltlf_formula_render(const struct LtlfFormula *f, char **out);

/**
 * Decides satisfiability. On success `*out_sat` holds the verdict and,
 * when `out_witness` is non-null, `*out_witness` receives the shortest
 * witness as JSON (null when unsatisfiable).
 *
 * # Safety
 * `f` must be null or a live handle; `out_sat` must be null or writable;
 * `out_witness` may be null, otherwise writable.
 */
enum LtlfStatus ltlf_decide_sat(const struct LtlfFormula *f, bool *out_sat, char **out_witness);

/**
 * Decides validity at every position. On success `*out_valid` holds the
 * verdict and, when `out_countermodel` is non-null, it receives a
 * countermodel as JSON (null when valid).
 *
 * # Safety
 * As for [`ltlf_decide_sat`].
 */
enum LtlfStatus ltlf_decide_valid(const struct LtlfFormula *f,
                                  bool *out_valid,
                                  char **out_countermodel);

/**
 * Parses a trace from JSON: a non-empty array of arrays of variable names.
 *
 * # Safety
 * `json` must be null or a nul-terminated string; `out` must be null or
 * writable.
 */
enum LtlfStatus ltlf_trace_parse(const char *json, struct LtlfTrace **out);

/**
 * Releases a trace handle. Null is ignored.
 *
 * # Safety
 * `t` must be null or a handle from [`ltlf_trace_parse`], not yet freed.
 */
void ltlf_trace_free(struct LtlfTrace *t);

/**
 * Number of states in the trace; 0 for null.
 *
 * # Safety
 * `t` must be null or a live handle.
 */
size_t ltlf_trace_len(const struct LtlfTrace *t);

/**
 * Evaluates `f` at the 1-based `position` of `t`.
 *
 * # Safety
 * `t` and `f` must be null or live handles; `out` must be null or writable.
 */
enum LtlfStatus ltlf_eval(const struct LtlfTrace *t,
                          const struct LtlfFormula *f,
                          size_t position,
                          bool *out);

/**
 * Whether `f` holds at every position of `t`.
 *
 * # Safety
 * As for [`ltlf_eval`].
 */
enum LtlfStatus ltlf_satisfies(const struct LtlfTrace *t, const struct LtlfFormula *f, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LTLF_H */
