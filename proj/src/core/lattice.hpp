#pragma once
#include <optional>
#include <string>
#include <vector>

#include "core/budget.hpp"
#include "core/series.hpp"

namespace nsla {

// All graded subspaces of A's ambient space, in a fixed deterministic order
// (per parity: dimension ascending, pivot columns lexicographic, free entries
// lexicographic; then even-part-major pairing). Finite fields only
// (FiniteFieldRequired); count capped by budget.max_subspaces (BudgetExceeded).
std::vector<GradedSubspace> enumerate_graded_subspaces(const NLieSuperalgebra& A,
                                                       const Budget& budget);

struct SubspaceInfo {
  GradedSubspace space;
  bool subalgebra = false, ideal = false, weak_ideal = false, abelian_ideal = false;
  bool maximal_subalgebra = false;  // maximal among proper subalgebras
  bool maximal_ideal = false;       // maximal among proper ideals
  bool subinvariant = false;        // subalgebras only
};

struct LatticeCatalog {
  std::vector<SubspaceInfo> items;
  std::vector<size_t> subalgebras, ideals;  // indices into items
  std::vector<size_t> maximal_subalgebras, maximal_ideals;
  GradedSubspace frattini;        // intersection of all maximal subalgebras
  GradedSubspace frattini_ideal;  // largest ideal inside frattini
  GradedSubspace jacobson;        // intersection of all maximal ideals
};

LatticeCatalog build_lattice(const NLieSuperalgebra& A, const Budget& budget);

// Smallest subalgebra containing the graded span of the generators
// (mixed-parity generators contribute their homogeneous components).
GradedSubspace generated_subalgebra(const NLieSuperalgebra& A, const std::vector<Vec>& gens);

// Smallest ideal of A containing S.
GradedSubspace normal_closure(const NLieSuperalgebra& A, const GradedSubspace& S);
// Smallest T >= S with [X,...,X,T] <= T (the closure inside an ambient subalgebra).
GradedSubspace normal_closure_in(const NLieSuperalgebra& A, const GradedSubspace& X,
                                 const GradedSubspace& S);
// Intersection of every ideal flagged in the catalog that contains S; equals
// normal_closure on enumerable instances and serves as its oracle.
GradedSubspace smallest_ideal_containing(const NLieSuperalgebra& A, const GradedSubspace& S,
                                         const LatticeCatalog& cat);

// N(M) = {x : [x, M, A, ..., A] <= M}, computed per parity as a kernel.
GradedSubspace normalizer(const NLieSuperalgebra& A, const GradedSubspace& M);

// T subinvariant in X: some chain T = U_t, each U_i an ideal of U_{i-1}, up to
// U_0 = X. Decided by iterating relative normal closures (X_{i+1} = closure of
// T in X_i), which descends at least as fast as any witness chain.
bool is_subinvariant_in(const NLieSuperalgebra& A, const GradedSubspace& X,
                        const GradedSubspace& T);
bool is_subinvariant(const NLieSuperalgebra& A, const GradedSubspace& T);

// Oracle for the fast path: explicit memoized search over all chains of
// relative ideals drawn from the catalog's subalgebras.
bool is_subinvariant_exhaustive(const NLieSuperalgebra& A, const GradedSubspace& T,
                                const LatticeCatalog& cat);

// v(U): chains U = W_0 > W_1 > ... > W_k with each W_i maximal in W_{i-1};
// s(C_k) = #{1 <= i <= k-1 : W_i subinvariant in U}; v(C_k) = k - s if s != 0
// else k; v(U) = max over chains (0 for the zero algebra). The report carries
// an extremal chain. Chain count capped by budget.max_tuples.
struct InvarianceReport {
  size_t v = 0;
  std::vector<GradedSubspace> chain;
};
InvarianceReport invariance_number_within(const NLieSuperalgebra& A, const GradedSubspace& U,
                                          const LatticeCatalog& cat, const Budget& budget);
InvarianceReport invariance_number(const NLieSuperalgebra& A, const LatticeCatalog& cat,
                                   const Budget& budget);

// S-star dichotomy over every non-abelian subalgebra H (the full algebra
// included): dim(H/H^2) >= 2, or H nilpotent and generated by one homogeneous
// element. Exhaustive over finite fields; over the rationals the one-generator
// search falls back to basis vectors and the verdict may be unknown.
struct SStarReport {
  Tri verdict = Tri::unknown;
  std::optional<GradedSubspace> violator;
  std::string note;
};
SStarReport is_s_star(const NLieSuperalgebra& A, const LatticeCatalog& cat,
                      const Budget& budget);

// Smallest-dimension nonzero subalgebra N, nilpotent as an algebra, whose
// normal closure is all of A; nullopt when none exists.
std::optional<GradedSubspace> full_closure_nilpotent_subalgebra(const NLieSuperalgebra& A,
                                                                const LatticeCatalog& cat);

}  // namespace nsla
