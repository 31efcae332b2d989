/* symtrace: trace-polynomial identities, positive maps, and verification
 * suites built on the symmetric-group algebra.
 *
 * Plain-C surface over the C++ core.  All returned strings are malloc()-ed
 * and must be released with symtrace_free().  On failure, *errptr (when
 * non-NULL) receives a malloc()-ed message; it is left untouched on success.
 */
#ifndef SYMTRACE_SYMTRACE_H_
#define SYMTRACE_SYMTRACE_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Exported types */

typedef struct symtrace_poly_t symtrace_poly_t;

/* Status codes; mirrored by the CLI exit codes. */
enum {
    SYMTRACE_OK = 0,
    SYMTRACE_VERIFY_FAILED = 1,
    SYMTRACE_INVALID_ARGUMENT = 2,
    SYMTRACE_NO_CANDIDATE = 3,
    SYMTRACE_INTERNAL_ERROR = 4
};

extern const char* symtrace_version(void);

/* Releases any buffer returned through a char** out-parameter. */
extern void symtrace_free(char* ptr);

/* Polarized Cayley-Hamilton tables for degree k (2..5).
 * format: "text" or "json". */
extern int symtrace_tables(int k, const char* format, char** out, char** errptr);

/* Runs a verification suite described by a JSON config:
 *   {"suite": "positivity", "d": 3, "k": 4, "n": 3, "t": 2,
 *    "lambda": [2,1], "trials": 200, "seed": 42,
 *    "tol_zero": 1e-10, "tol_psd": 1e-9}
 * Every key except "suite" is optional.  *out receives the report (single
 * JSON object, or an array for "all"; "text" gives the printable form).
 * Returns SYMTRACE_OK when every report passes, SYMTRACE_VERIFY_FAILED when
 * at least one fails, SYMTRACE_INVALID_ARGUMENT on a bad config. */
extern int symtrace_verify_run(const char* config_json, const char* format, char** out,
                               char** errptr);

/* Builds a certified identity/positivity construction:
 *   kind: "polynomial" | "weak" | "central" | "permutation" | "tensor_identity"
 * k and t may be 0 to accept the kind's defaults.  Emits the group-algebra
 * element, its symbolic tensor form, and the numeric verification report.
 * Returns SYMTRACE_NO_CANDIDATE when the structural search finds nothing. */
extern int symtrace_construct(const char* kind, int d, int k, int t, const char* format,
                              char** out, char** errptr);

/* Trace-polynomial handles */

/* f_lambda for a partition given by its parts (weakly decreasing). */
extern symtrace_poly_t* symtrace_poly_flambda(const int* parts, int nparts, char** errptr);

/* The optimal-witness polynomial in k-1 variables. */
extern symtrace_poly_t* symtrace_poly_witness(int k, char** errptr);

extern symtrace_poly_t* symtrace_poly_from_json(const char* json_text, char** errptr);

extern int symtrace_poly_nvars(const symtrace_poly_t* poly);

/* Integer-normalized table-style rendering (A, B, C variables). */
extern int symtrace_poly_print(const symtrace_poly_t* poly, char** out, char** errptr);

extern int symtrace_poly_to_json(const symtrace_poly_t* poly, char** out, char** errptr);

/* Evaluates on nvars complex d x d matrices packed row-major as
 * re,im pairs (nvars * d * d * 2 doubles).  out receives d * d * 2 doubles. */
extern int symtrace_poly_eval(const symtrace_poly_t* poly, int d, const double* vars,
                              int nvars, double* out, char** errptr);

extern void symtrace_poly_free(symtrace_poly_t* poly);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SYMTRACE_SYMTRACE_H_ */
