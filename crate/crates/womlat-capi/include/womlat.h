/* C interface to the womlat finite-lattice workbench. */

#ifndef WOMLAT_H
#define WOMLAT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes for all fallible entry points.
typedef enum WomlatStatus {
  // Success; for checks this means the property holds.
  WOMLAT_STATUS_OK = 0,
  // The check ran and the property fails; see the report for a witness.
  WOMLAT_STATUS_PROPERTY_FAILS = 1,
  // Null pointer, unknown name, non-UTF-8 input, or missing table.
  WOMLAT_STATUS_INVALID_ARGUMENT = 2,
  // The input text does not parse.
  WOMLAT_STATUS_PARSE_ERROR = 3,
  // Term evaluation failed (unbound variable, missing operation, ...).
  WOMLAT_STATUS_EVAL_ERROR = 4,
  // A theorem precondition does not hold for this algebra.
  WOMLAT_STATUS_PRECONDITION_VIOLATED = 5,
  // The operation would exceed a size or work cap.
  WOMLAT_STATUS_CAP_EXCEEDED = 6,
} WomlatStatus;

// Opaque handle over a parsed lattice document.
typedef struct WomlatHandle WomlatHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses `.lat` text into a handle. Returns null on failure and, when
// `err_out` is non-null, stores the error message there.
//
// # Safety
// `text` must be null or point to a NUL-terminated string; `err_out` must
// be null or valid for writes.
struct WomlatHandle *womlat_parse(const char *text, char **err_out);

// Loads a built-in fixture (`M3A`, `M3B`, `FIG2`, `C2`, `C3`, `C4`, `B4`,
// `B8`) into a handle. Returns null on failure as for `womlat_parse`.
//
// # Safety
// As for `womlat_parse`.
struct WomlatHandle *womlat_fixture(const char *name, char **err_out);

// Releases a handle. Null is a no-op.
//
// # Safety
// `handle` must be null or a pointer previously returned by this library
// that has not been freed yet.
void womlat_handle_free(struct WomlatHandle *handle);

// Releases a string returned by this library. Null is a no-op.
//
// # Safety
// `s` must be null or a string previously returned by this library that
// has not been freed yet.
void womlat_string_free(char *s);

// Number of lattice elements, or -1 for a null handle.
//
// # Safety
// `handle` must be null or a live handle.
int64_t womlat_element_count(const struct WomlatHandle *handle);

// Label of element `index`, or null when out of range.
//
// # Safety
// `handle` must be null or a live handle.
char *womlat_element_name(const struct WomlatHandle *handle, uint64_t index);

// Runs a built-in property check (`wom`, `dwom`, `dnl`, `wdnl`, `comp`,
// `ortho`, `om`, `demorgan`, `antitone`, `involution`, `lemma-bounds`).
// On `Ok`/`PropertyFails` the out-string is the report as JSON.
//
// # Safety
// Pointer arguments must be null or valid as documented on
// `womlat_parse`.
enum WomlatStatus womlat_check(const struct WomlatHandle *handle,
                               const char *property,
                               char **report_json_out);

// Runs a theorem verification (`d-bijection`, `family-bijection`,
// `w-bijection`, `sasaki`, `half-adjunction`, `weak-dnl-residuation`,
// `residuation`, `converse`, `measures`, `d-properties`, `w-properties`).
//
// # Safety
// As for `womlat_check`.
enum WomlatStatus womlat_verify(const struct WomlatHandle *handle,
                                const char *theorem,
                                char **report_json_out);

// Checks a formula of the term language against the handle's tables.
//
// # Safety
// As for `womlat_check`.
enum WomlatStatus womlat_holds(const struct WomlatHandle *handle,
                               const char *formula,
                               char **report_json_out);

// Evaluates a term under an assignment like `x=a,y=b` and stores the
// resulting element label.
//
// # Safety
// As for `womlat_check`.
enum WomlatStatus womlat_eval(const struct WomlatHandle *handle,
                              const char *term_text,
                              const char *assignment,
                              char **label_out);

// Serializes the handle back to `.lat` text.
//
// # Safety
// As for `womlat_check`.
enum WomlatStatus womlat_to_text(const struct WomlatHandle *handle, char **text_out);

// Stores the Hasse diagram as DOT text.
//
// # Safety
// As for `womlat_check`.
enum WomlatStatus womlat_dot(const struct WomlatHandle *handle, char **dot_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WOMLAT_H */
