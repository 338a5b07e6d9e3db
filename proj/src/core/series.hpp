#pragma once
#include <optional>
#include <string>
#include <vector>

#include "core/algebra.hpp"

namespace nsla {

// Span of [u1,...,un] over all homogeneous basis choices ui from the factors.
// Exactly n factors (ArityMismatch otherwise), each over A's ambient dims.
GradedSubspace product_space(const NLieSuperalgebra& A,
                             const std::vector<GradedSubspace>& factors);

GradedSubspace derived_subspace(const NLieSuperalgebra& A);  // A^2 = [A,...,A]

bool is_subalgebra(const NLieSuperalgebra& A, const GradedSubspace& U);
bool is_ideal(const NLieSuperalgebra& A, const GradedSubspace& I);        // [A,...,A,I] in I
bool is_weak_ideal(const NLieSuperalgebra& A, const GradedSubspace& I);   // [A,I,...,I] in I
bool is_abelian_ideal(const NLieSuperalgebra& A, const GradedSubspace& I);// ideal, [A,..,A,I,I] = 0

// A descending chain of graded subspaces.  terms[0] is the first term of the
// series; the chain stops at the first zero term (reaches_zero) or at the
// first term equal to an earlier one (stabilized nonzero).
struct SeriesReport {
  std::string kind;
  std::vector<GradedSubspace> terms;
  bool reaches_zero = false;
};

// I^1 = I, I^{s+1} = [A,...,A,I,I^s].  Requires I to be an ideal unless
// allow_nonideal is set (NotAnIdeal otherwise).
SeriesReport ideal_power_series(const NLieSuperalgebra& A, const GradedSubspace& I,
                                bool allow_nonideal = false);

// Lower central series of a subalgebra in ambient coordinates:
// U^1 = U, U^{s+1} = [U,...,U,U^s].  Requires U closed (NotASubalgebra).
SeriesReport lower_central_series(const NLieSuperalgebra& A, const GradedSubspace& U);

// k-derived series: I^{(0)} = I, I^{(s+1)} = [I^{(s)},...,I^{(s)},A,...,A]
// with k copies of I^{(s)}.  Requires 2 <= k <= n (BadArity otherwise).
SeriesReport derived_series(const NLieSuperalgebra& A, const GradedSubspace& I, size_t k);

// Class t with A^{t+1} = 0 != A^t (zero algebra: 0); nullopt if not nilpotent.
std::optional<size_t> nilpotency_class(const NLieSuperalgebra& A);

// Same notion for a subalgebra, via its lower central series in ambient coords.
std::optional<size_t> subalgebra_class(const NLieSuperalgebra& A, const GradedSubspace& U);

bool is_k_solvable(const NLieSuperalgebra& A, size_t k);

// A^j N^i: the i-th ideal power of N, then j applications of X -> [A,...,A,X].
GradedSubspace mixed_power(const NLieSuperalgebra& A, const GradedSubspace& N,
                           size_t j, size_t i);

// Checks A^u N^r <= N^{r+1} with u = (r-1)(n-1)(m-1) + m (clamped at 0) for
// every r with N^r nonzero, where m is minimal with A^{m+1} <= N^2.
// Applicable when N is an ideal and the m above exists.
struct MixedPowerCheck {
  bool applicable = false;
  std::string reason;  // when not applicable
  size_t m = 0;
  struct Row {
    size_t r = 0, u = 0;
    bool holds = false;
  };
  std::vector<Row> rows;
  bool all_hold = true;
};
MixedPowerCheck mixed_power_containments(const NLieSuperalgebra& A, const GradedSubspace& N);

// For a nonzero ideal N whose ideal power series reaches zero (N^{t+1} = 0,
// N^t != 0) with A/N^2 nilpotent (minimal m with A^{m+1} <= N^2): checks that
// A is nilpotent of class at most tm + t(t-1)(m-1)(n-1)/2.
struct ClassBoundCheck {
  bool applicable = false;
  std::string reason;
  size_t t = 0, m = 0, bound = 0;
  std::optional<size_t> cls;
  bool holds = false;
};
ClassBoundCheck class_bound_check(const NLieSuperalgebra& A, const GradedSubspace& N);

// Quotient A/I on the coset representatives of A's basis vectors that fall
// outside I's pivot coordinates.  Requires I to be an ideal (NotAnIdeal).
struct Quotient {
  NLieSuperalgebra algebra;
  std::vector<size_t> kept;  // indices of A's basis kept as representatives
};
Quotient quotient_algebra(const NLieSuperalgebra& A, const GradedSubspace& I);

// A subalgebra re-expressed as a standalone algebra on its homogeneous basis
// (gs_basis order).  Requires closure (NotASubalgebra).
struct Induced {
  NLieSuperalgebra algebra;
  std::vector<Vec> basis;  // ambient coordinates of each new basis vector
};
Induced induced_algebra(const NLieSuperalgebra& A, const GradedSubspace& U,
                        const std::string& prefix = "u");

}  // namespace nsla
