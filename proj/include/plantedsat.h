#ifndef PLANTEDSAT_H
#define PLANTEDSAT_H

/* C interface to the planted-SAT local-search laboratory.
 *
 * Conventions:
 *  - every function returns a PSAT_* status; outputs go through pointers
 *  - on any non-PSAT_OK return, psat_last_error() describes the failure
 *    (thread-local; valid until the next call on the same thread)
 *  - char** outputs receive a NUL-terminated heap string owned by the
 *    caller; release it with psat_free_string
 *  - assignments cross the boundary as strings of '0'/'1', one character
 *    per variable, index 0 first
 *  - structured results are JSON documents, the same shape the psat CLI
 *    prints
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define PSAT_OK 0
#define PSAT_EINVAL 1    /* bad argument or contract violation */
#define PSAT_EPARSE 2    /* malformed DIMACS or JSON input */
#define PSAT_EIO 3       /* file open/read/write failure */
#define PSAT_ELIMIT 4    /* size guard on an exact-oracle operation */
#define PSAT_EINTERNAL 5 /* broken internal invariant; always a bug */

typedef struct psat_formula psat_formula;
typedef struct psat_trace psat_trace;

const char *psat_version(void);
const char *psat_last_error(void);
void psat_free_string(char *s);

/* ---- formulas ---------------------------------------------------------- */

/* spec_json: {"n":..., one of "m"/"kappa"/"rho", "mode":"uniform"|"planted"} */
int psat_formula_generate(const char *spec_json, uint64_t seed, psat_formula **out);
int psat_formula_parse_dimacs(const char *text, psat_formula **out);
int psat_formula_read_dimacs(const char *path, psat_formula **out);
int psat_formula_dimacs(const psat_formula *f, char **text_out);
int psat_formula_write_dimacs(const psat_formula *f, const char *path);
int psat_formula_n(const psat_formula *f, int32_t *n_out);
int psat_formula_m(const psat_formula *f, int64_t *m_out);
/* {"sat":..,"unsat":..,"ones":..,"improving":[vars]} for the given bits */
int psat_formula_eval(const psat_formula *f, const char *bits, char **json_out);
void psat_formula_free(psat_formula *f);

/* ---- solvers ----------------------------------------------------------- */

/* solver: "LS", "MLS" or "SD". initial_bits NULL draws the initial
 * assignment from the run's own seed stream. step_budget < 0 selects the
 * default valve (ignored by SD). */
int psat_solve(const psat_formula *f, const char *solver, const char *initial_bits,
               uint64_t seed, int64_t step_budget, int record_steps, psat_trace **out);
int psat_trace_json(const psat_trace *t, int full, char **json_out);
void psat_trace_free(psat_trace *t);

/* SD and LS driven by one shared pick stream from a common initial point */
int psat_coupled_run(const psat_formula *f, const char *initial_bits, uint64_t seed,
                     int full, char **json_out);

/* bucket the step-t SD vector by ones-count over `trials` runs; n <= 16 */
int psat_uniformity_probe(int32_t n, int32_t m0, int64_t t, int64_t trials,
                          uint64_t seed, char **json_out);

/* ---- structure census and exact oracle --------------------------------- */

/* counts of caps, crowns, isolated pairs, degree stats; include_structures
 * lists the witnesses; d1, d2 <= 0 skips the isolation scan */
int psat_census(const psat_formula *f, int include_structures, int64_t d1, int64_t d2,
                char **json_out);
/* exhaustive ground truth: MAX-SAT optimum plus the local-minima census
 * over all 2^n assignments (n <= 20) */
int psat_verify(const psat_formula *f, char **json_out);
/* exact expected cap/crown counts for m i.i.d. clauses; mode as in generate */
int psat_structure_expectations(int32_t n, int64_t m, const char *mode, char **json_out);

/* ---- sweeps ------------------------------------------------------------ */

/* spec_json: experiment spec (see README); format: "csv" or "json" (JSONL);
 * resume != 0 keeps whole cells already present in path.
 * summary: {"cells":..,"records_total":..,"records_written":..,"records_reused":..} */
int psat_sweep(const char *spec_json, const char *path, const char *format, int resume,
               char **summary_json_out);
/* the CSV header line for an experiment kind name */
int psat_sweep_columns(const char *kind, char **header_out);

#ifdef __cplusplus
}
#endif

#endif /* PLANTEDSAT_H */
