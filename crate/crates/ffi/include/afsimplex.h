/* C interface to the afsimplex linear programming solver. */

#ifndef AFSIMPLEX_H
#define AFSIMPLEX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>
#include <stdbool.h>

/**
 * Result code of every fallible call.
 */
typedef enum AfsError {
  AFS_ERROR_OK = 0,
  AFS_ERROR_NULL_POINTER = 1,
  AFS_ERROR_INVALID_UTF8 = 2,
  AFS_ERROR_PARSE = 3,
  AFS_ERROR_INVALID_ARGUMENT = 4,
  AFS_ERROR_INDEX_OUT_OF_RANGE = 5,
  AFS_ERROR_NO_VALUE = 6,
  AFS_ERROR_SOLVER = 7,
  AFS_ERROR_PANIC = 8,
} AfsError;

typedef enum AfsMethod {
  AFS_METHOD_ARTIFICIAL_FREE = 0,
  AFS_METHOD_TRADITIONAL = 1,
} AfsMethod;

typedef enum AfsSolveStatus {
  AFS_SOLVE_STATUS_OPTIMAL = 0,
  AFS_SOLVE_STATUS_INFEASIBLE = 1,
  AFS_SOLVE_STATUS_UNBOUNDED = 2,
  AFS_SOLVE_STATUS_CYCLE_DETECTED = 3,
  AFS_SOLVE_STATUS_ITERATION_LIMIT = 4,
} AfsSolveStatus;

typedef enum AfsTieBreak {
  AFS_TIE_BREAK_SMALLEST_LABEL = 0,
  AFS_TIE_BREAK_SMALLEST_ABS_PIVOT = 1,
  AFS_TIE_BREAK_LARGEST_ABS_PIVOT = 2,
} AfsTieBreak;

/**
 * Opaque result of a solve.
 */
typedef struct AfsOutcome AfsOutcome;

/**
 * Opaque LP in standard form.
 */
typedef struct AfsProblem AfsProblem;

/**
 * Solver options. Obtain defaults from [`afs_options_default`].
 */
typedef struct AfsOptions {
  enum AfsMethod method;
  enum AfsTieBreak tie_break;
  /**
   * 0 selects the default cap.
   */
  size_t max_iterations;
  bool conjugate_slack_trick;
} AfsOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *afs_version(void);

/**
 * Message of the last failed call on this thread, or an empty string. The
 * pointer stays valid until the next call into this library on the thread.
 */
const char *afs_last_error_message(void);

struct AfsOptions afs_options_default(void);

/**
 * Parses LP text into a new problem handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a writable pointer.
 */
enum AfsError afs_problem_parse(const char *text, struct AfsProblem **out);

/**
 * Builds a problem `max c·x, A x <= b, x >= 0` from integer data; `a` is
 * row-major with `rows * cols` entries.
 *
 * # Safety
 * `a`, `b`, `c` must point to `rows * cols`, `rows` and `cols` readable
 * values; `out` must be writable.
 */
enum AfsError afs_problem_from_dense(size_t rows,
                                     size_t cols,
                                     const int64_t *a,
                                     const int64_t *b,
                                     const int64_t *c,
                                     struct AfsProblem **out);

/**
 * # Safety
 * `problem` must be null or a handle from this library not yet freed.
 */
void afs_problem_free(struct AfsProblem *problem);

/**
 * Number of standard-form rows and structural columns.
 *
 * # Safety
 * `problem` must be a live handle; `rows` and `cols` writable.
 */
enum AfsError afs_problem_dimensions(const struct AfsProblem *problem, size_t *rows, size_t *cols);

/**
 * Solves in exact rational arithmetic. `options` may be null for defaults.
 *
 * # Safety
 * `problem` must be a live handle, `options` null or readable, `out`
 * writable.
 */
enum AfsError afs_solve(const struct AfsProblem *problem,
                        const struct AfsOptions *options,
                        struct AfsOutcome **out);

/**
 * Runs both phase 1 methods and writes the comparison report as JSON.
 *
 * # Safety
 * `problem` must be a live handle, `options` null or readable, `json`
 * writable. The string must be released with [`afs_string_free`].
 */
enum AfsError afs_compare_json(const struct AfsProblem *problem,
                               const struct AfsOptions *options,
                               char **json);

/**
 * # Safety
 * `outcome` must be null or a handle from this library not yet freed.
 */
void afs_outcome_free(struct AfsOutcome *outcome);

/**
 * # Safety
 * `outcome` must be a live handle and `status` writable.
 */
enum AfsError afs_outcome_status(const struct AfsOutcome *outcome, enum AfsSolveStatus *status);

/**
 * Objective value in the problem's own sense, as exact text (`"36"`,
 * `"-9/2"`). Fails with `NoValue` when phase 1 did not reach feasibility.
 *
 * # Safety
 * `outcome` must be a live handle and `text` writable. Release the string
 * with [`afs_string_free`].
 */
enum AfsError afs_outcome_objective(const struct AfsOutcome *outcome, char **text);

/**
 * Value of structural variable `index` (0-based) as a double.
 *
 * # Safety
 * `outcome` must be a live handle and `value` writable.
 */
enum AfsError afs_outcome_variable(const struct AfsOutcome *outcome, size_t index, double *value);

/**
 * Phase 1 pivot counts.
 *
 * # Safety
 * `outcome` must be a live handle; `pivots` and `degenerate` writable.
 */
enum AfsError afs_outcome_phase1_pivots(const struct AfsOutcome *outcome,
                                        size_t *pivots,
                                        size_t *degenerate);

/**
 * Full outcome (solution, traces, certificates) as JSON.
 *
 * # Safety
 * `outcome` must be a live handle and `json` writable. Release the string
 * with [`afs_string_free`].
 */
enum AfsError afs_outcome_json(const struct AfsOutcome *outcome, char **json);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void afs_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* AFSIMPLEX_H */
