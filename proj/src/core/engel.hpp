#pragma once
#include <optional>
#include <vector>

#include "core/budget.hpp"
#include "core/lattice.hpp"

namespace nsla {

/* Are all left multiplication operators D(a_1,...,a_{n-1}) nilpotent?
 * Finite field with projective tuple count within budget.max_tuples: each slot
 * runs over nonzero vectors up to scaling (scaling an argument scales the
 * operator and cannot change nilpotency; a zero slot gives D = 0), so the scan
 * is exhaustive and the verdict definitive either way. Otherwise: canonical
 * basis tuples plus budget.samples seeded random tuples — a witness is still
 * definitive, a clean pass is only `unknown`. */
struct EngelReport {
  bool exhaustive = false;
  Tri verdict = Tri::unknown;
  std::vector<Vec> witness;  // tuple whose operator is not nilpotent
  Matrix witness_operator;
  uint64_t tuple_count = 0;
};
EngelReport engel_scan(const NLieSuperalgebra& A, const Budget& budget);

/* A_0(D(tuple)) = {x : D^r(x) = 0 for some r}, the Fitting null component of
 * the left multiplication. The tuple must be homogeneous so the operator
 * respects the grading (HypothesisNotMet otherwise; ArityMismatch unless
 * exactly n-1 arguments). */
GradedSubspace fitting_zero_component(const NLieSuperalgebra& A, const std::vector<Vec>& tuple);

/* x in A_0(D(tuple)) for an arbitrary (possibly inhomogeneous) tuple:
 * D^dim(x) = 0. */
bool in_fitting_zero(const NLieSuperalgebra& A, const std::vector<Vec>& tuple, const Vec& x);

/* Sum condition: the only subalgebra K with K + A^2 = A is K = A. Evaluated
 * literally over the catalog's subalgebras. */
struct StarReport {
  Tri verdict = Tri::unknown;
  std::optional<GradedSubspace> witness;  // proper K with K + A^2 = A
};
StarReport condition_star(const NLieSuperalgebra& A, const LatticeCatalog& cat);

/* Null-component condition: for every (n-1)-tuple, some slot element lies in
 * A_0(D(tuple)). Purely even algebras over char != 2 satisfy it identically
 * (a repeated argument kills the bracket, so every slot is in the kernel).
 * Otherwise scanned like engel_scan: projective-exhaustive within budget,
 * sampled with `unknown` on a clean pass beyond it. */
struct StarStarReport {
  bool exhaustive = false;
  Tri verdict = Tri::unknown;
  std::vector<Vec> witness;  // tuple with every slot outside the null component
  uint64_t tuple_count = 0;
};
StarStarReport condition_star_star(const NLieSuperalgebra& A, const Budget& budget);

}  // namespace nsla
