#pragma once
#include <optional>
#include <string>
#include <vector>

#include "core/budget.hpp"
#include "core/lattice.hpp"

namespace nsla {

/* Action of an algebra on a graded module by (n-1)-slot operators. Only
 * canonical (non-decreasing) index tuples are stored; other orders are reached
 * through the same sign rules as the bracket. Operators are square matrices on
 * the module coordinates. */
struct Representation {
  NLieSuperalgebra algebra;  // own copy
  std::vector<std::string> module_names;
  std::vector<int> module_parities;
  ParityLayout module_layout;
  TupleIndexer idx;           // (n-1)-tuples over algebra.dim()
  std::vector<Matrix> table;  // rank -> operator

  size_t mdim() const { return module_names.size(); }
  GradedDims mdims() const { return module_layout.dims(); }
};

Representation zero_representation(const NLieSuperalgebra& A, GradedDims mdims);
Representation regular_representation(const NLieSuperalgebra& A);

/* Operator of a basis-index tuple in any order (signed canonical lookup). */
Matrix rho_basis(const Representation& R, const Tuple& t);
/* Operator of n-1 coordinate vectors of the algebra (multilinear expansion). */
Matrix rho_eval(const Representation& R, const std::vector<Vec>& args);

struct RepWitness {
  std::string relation;  // "storage" | "commutation" | "bracket" | "parity"
  Tuple outer, inner;
  std::string detail;
};

/* The four defining relations, each exhaustive over basis tuples:
 * storage: canonical tuples repeating an even index store zero (char != 2);
 * commutation: rho(b) rho(a) against the signed rho(a) rho(b) plus the sum of
 *   slot-derivation terms, over all pairs of (n-1)-index tuples;
 * bracket: rho(a_1..a_{n-2}, [b_1..b_n]) as the signed sum of
 *   rho(b minus slot i) rho(a, b_i), over all index tuples;
 * parity: each stored operator shifts module parity by alpha plus the tuple
 *   parity sum. */
struct RepValidation {
  bool storage_ok = true, commutation_ok = true, bracket_ok = true, parity_ok = true;
  std::vector<RepWitness> witnesses;
  bool ok() const { return storage_ok && commutation_ok && bracket_ok && parity_ok; }
};
RepValidation validate_representation(const Representation& R);

/* Algebra on module + algebra coordinates: the algebra embeds as a subalgebra
 * on the leading coordinates, the module as an abelian ideal on the trailing
 * ones, and [a_1,...,a_{n-1},v] = rho(a)(v). InvalidRepresentation unless
 * validate_representation passes. */
NLieSuperalgebra semidirect_sum(const Representation& R);

/* Inverse construction: given B with a subalgebra part and an abelian-ideal
 * part forming a direct sum, read the action off B's bracket. Both parts keep
 * their coordinate order, so applying this to semidirect_sum(R) (algebra =
 * leading coordinates, module = trailing) reproduces R's table exactly.
 * BadDecomposition when the parts fail those roles. */
Representation representation_from_module(const NLieSuperalgebra& B, const GradedSubspace& apart,
                                          const GradedSubspace& vpart);

/* ker rho = {x : rho(A,...,A,x) = 0}, a graded subspace; faithful iff zero. */
struct KernelReport {
  GradedSubspace kernel;
  bool faithful = false;
};
KernelReport kernel_and_faithful(const Representation& R);

/* Nilpotency transfer along a representation: S must be bracket-closed
 * (NotHMC otherwise). Scans rho over tuples of homogeneous elements of S
 * (projective per slot over finite fields — exhaustive within budget; basis
 * rows with an `unknown` fallback otherwise). When all scanned operators are
 * nilpotent, reports envelope nilpotency of the operator span; when the
 * representation is also faithful, reports whether S is nilpotent as an
 * algebra. */
struct SRhoReport {
  bool exhaustive = false;
  Tri operators_nilpotent = Tri::unknown;
  std::vector<Vec> witness;  // tuple with a non-nilpotent operator
  EnvelopeReport envelope;   // meaningful when operators_nilpotent == yes
  bool faithful = false;
  std::optional<bool> span_nilpotent;  // set when faithful
  uint64_t tuple_count = 0;
};
SRhoReport s_star_rho_check(const Representation& R, const GradedSubspace& S,
                            const Budget& budget);

}  // namespace nsla
