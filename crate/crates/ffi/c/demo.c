/* Solves an LP file (or the built-in example) through the C interface.
 *
 *   cc demo.c -I../include ../../../target/debug/libafsimplex_ffi.a -lpthread -ldl -lm
 */
#include <stdio.h>
#include <stdlib.h>

#include "afsimplex.h"

static const char *EXAMPLE =
    "max: 3 x1 + 5 x2;\n"
    "c1: x1 <= 4;\n"
    "c2: x2 >= 6;\n"
    "c3: 3x1 + 2x2 >= 18;\n"
    "c4: x1 + x2 >= 8;\n"
    "c5: 5x1 + 4x2 >= 32;\n";

static char *slurp(const char *path) {
    FILE *f = fopen(path, "rb");
    if (!f) return NULL;
    fseek(f, 0, SEEK_END);
    long n = ftell(f);
    rewind(f);
    char *buf = malloc((size_t)n + 1);
    if (buf && fread(buf, 1, (size_t)n, f) != (size_t)n) {
        free(buf);
        buf = NULL;
    }
    if (buf) buf[n] = '\0';
    fclose(f);
    return buf;
}

static const char *status_name(AfsSolveStatus s) {
    switch (s) {
    case AFS_SOLVE_STATUS_OPTIMAL: return "optimal";
    case AFS_SOLVE_STATUS_INFEASIBLE: return "infeasible";
    case AFS_SOLVE_STATUS_UNBOUNDED: return "unbounded";
    case AFS_SOLVE_STATUS_CYCLE_DETECTED: return "cycle_detected";
    default: return "iteration_limit";
    }
}

int main(int argc, char **argv) {
    char *owned = argc > 1 ? slurp(argv[1]) : NULL;
    if (argc > 1 && !owned) {
        fprintf(stderr, "cannot read %s\n", argv[1]);
        return 64;
    }
    AfsProblem *problem = NULL;
    if (afs_problem_parse(owned ? owned : EXAMPLE, &problem) != AFS_ERROR_OK) {
        fprintf(stderr, "parse: %s\n", afs_last_error_message());
        free(owned);
        return 65;
    }
    free(owned);

    AfsOptions options = afs_options_default();
    options.tie_break = AFS_TIE_BREAK_SMALLEST_ABS_PIVOT;
    AfsOutcome *outcome = NULL;
    if (afs_solve(problem, &options, &outcome) != AFS_ERROR_OK) {
        fprintf(stderr, "solve: %s\n", afs_last_error_message());
        afs_problem_free(problem);
        return 70;
    }

    AfsSolveStatus status;
    size_t pivots = 0, degenerate = 0;
    afs_outcome_status(outcome, &status);
    afs_outcome_phase1_pivots(outcome, &pivots, &degenerate);
    printf("status %s\n", status_name(status));
    printf("phase1 %zu pivots %zu degenerate\n", pivots, degenerate);

    char *z = NULL;
    if (afs_outcome_objective(outcome, &z) == AFS_ERROR_OK) {
        printf("objective %s\n", z);
        afs_string_free(z);
    }

    afs_outcome_free(outcome);
    afs_problem_free(problem);
    return (int)status;
}
