#ifndef NSLA_H
#define NSLA_H

/* C interface to the n-Lie superalgebra library.
 *
 * Algebras are opaque handles created by the parse/load/catalog constructors
 * and released with nsla_algebra_free. Every function returns NSLA_OK (0) on
 * success or an NSLA_ERR_* code; nsla_last_error() describes the most recent
 * failure on the calling thread. Strings returned through char** are heap
 * allocations owned by the caller; release them with nsla_string_free.
 *
 * Algebra files use the line-oriented "nsla-v1" format (see docs/format.md).
 * Machine reports are canonical JSON: identical input, budget and seed yield
 * byte-identical output. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum nsla_status {
  NSLA_OK = 0,
  NSLA_ERR_FIELD_MISMATCH,
  NSLA_ERR_DIVISION_BY_ZERO,
  NSLA_ERR_BAD_FIELD,
  NSLA_ERR_PARSE,
  NSLA_ERR_BAD_ARITY,
  NSLA_ERR_ARITY_MISMATCH,
  NSLA_ERR_PARITY_OBSTRUCTION,
  NSLA_ERR_AMBIENT_MISMATCH,
  NSLA_ERR_NOT_AN_IDEAL,
  NSLA_ERR_NOT_A_SUBALGEBRA,
  NSLA_ERR_NOT_BRACKET_CLOSED,
  NSLA_ERR_BAD_DECOMPOSITION,
  NSLA_ERR_INCOMPATIBLE_ALGEBRAS,
  NSLA_ERR_INVALID_REPRESENTATION,
  NSLA_ERR_HYPOTHESIS_NOT_MET,
  NSLA_ERR_BUDGET_EXCEEDED,
  NSLA_ERR_FINITE_FIELD_REQUIRED,
  NSLA_ERR_INTERNAL,
  NSLA_ERR_IO,
  NSLA_ERR_NULL_ARGUMENT
};

typedef struct nsla_algebra nsla_algebra;

/* Resource caps for enumerative computations. seed fixes the sampling RNG so
 * reports are reproducible. */
typedef struct nsla_budget {
  uint64_t max_subspaces;   /* lattice enumeration cap */
  uint64_t max_tuples;      /* operator-tuple / chain scan cap */
  uint64_t samples;         /* random tuples when a scan is not exhaustive */
  uint64_t max_assignments; /* structure-constant assignments when enumerating */
  uint64_t seed;
} nsla_budget;

const char* nsla_version(void);

/* Message for the most recent failure on this thread; empty when none.
 * The pointer stays valid until the next failing call on the same thread. */
const char* nsla_last_error(void);
const char* nsla_status_name(int status);

void nsla_string_free(char* s);
void nsla_budget_default(nsla_budget* out);

/* ---- construction and serialization ---- */

int nsla_algebra_parse(const char* text, nsla_algebra** out);
int nsla_algebra_load(const char* path, nsla_algebra** out);
int nsla_algebra_serialize(const nsla_algebra* a, char** out);
int nsla_algebra_save(const nsla_algebra* a, const char* path);
void nsla_algebra_free(nsla_algebra* a);

/* Field name: "Q" or "F<p>". */
int nsla_algebra_field(const nsla_algebra* a, char** out);
int nsla_algebra_arity(const nsla_algebra* a, int* out);
int nsla_algebra_dims(const nsla_algebra* a, size_t* dim_even, size_t* dim_odd);

/* Newline-separated list of built-in family names. */
int nsla_catalog_names(char** out);
/* Build a built-in family member over the named field. */
int nsla_catalog_build(const char* name, const long long* params, size_t nparams,
                       const char* field, nsla_algebra** out);

/* ---- reports (machine != 0 selects canonical JSON) ---- */

/* Grading, skew storage and the defining identity; *ok reports validity. */
int nsla_validate(const nsla_algebra* a, int machine, char** report, int* ok);

/* Structural survey: series, nilpotency class, operator scans, conditions,
 * radicals and invariance number when the lattice is enumerable. */
int nsla_analyze(const nsla_algebra* a, const nsla_budget* budget, int machine, char** report);

/* Every graded subspace with its structural flags (finite fields only). */
int nsla_lattice(const nsla_algebra* a, const nsla_budget* budget, int machine, char** report);

/* Runs every structural law against the algebra; *all_ok is 1 when no law
 * failed (skipped and not-applicable laws do not count as failures). */
int nsla_conformance(const nsla_algebra* a, const nsla_budget* budget, int machine, char** report,
                     int* all_ok);

/* Same suite over every *.nsla file in a directory (sorted by name). */
int nsla_conformance_corpus(const char* dir, const nsla_budget* budget, int machine, char** report,
                            int* all_ok);

/* ---- enumeration ---- */

/* Called once per valid algebra with its serialized text and the index of the
 * structure-constant assignment that produced it. */
typedef void (*nsla_enum_callback)(const char* algebra_text, uint64_t assignment_index,
                                   void* user);

/* Enumerate every valid algebra with the given graded dimension and arity
 * over F<prime>, up to budget->max_assignments candidate assignments. The
 * stats out-parameters may be NULL. */
int nsla_enumerate(size_t dim_even, size_t dim_odd, int arity, unsigned prime,
                   const nsla_budget* budget, nsla_enum_callback cb, void* user,
                   uint64_t* constants, uint64_t* assignments, uint64_t* valid);

#ifdef __cplusplus
}
#endif

#endif /* NSLA_H */
