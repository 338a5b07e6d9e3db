#pragma once
#include <functional>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/budget.hpp"

namespace nsla {

/* Dims (1|1) with b odd, c even and [b,...,b] = c. The grading forces even
 * arity: the value parity n*p(b) must match p(c) = 0 (ParityObstruction). */
NLieSuperalgebra paper_bc(int n, Field f);

/* Zero bracket on d0 even and d1 odd generators. */
NLieSuperalgebra abelian_algebra(size_t d0, size_t d1, int n, int alpha, Field f);

/* Ternary on dims (2|1): [x1,x2,y] = y. The smallest non-nilpotent specimen. */
NLieSuperalgebra act3(Field f);

/* Purely even simple n-ary algebra on n+1 generators:
 * [e_1,...,^e_i,...,e_{n+1}] = (-1)^i e_i (1-based slots). */
NLieSuperalgebra vector_product(int n, Field f);

/* Componentwise brackets, everything across summands zero.
 * IncompatibleAlgebras unless field, arity and alpha agree. */
NLieSuperalgebra direct_sum(const NLieSuperalgebra& A, const NLieSuperalgebra& B);

/* Builder by name for the CLI: "paper_bc" [n], "abelian" [d0 d1 n alpha],
 * "act3" [], "vector_product" [n]. Unknown name or bad parameter list: Parse. */
NLieSuperalgebra build_catalog(const std::string& name, const std::vector<long long>& params,
                               Field f);
std::vector<std::string> catalog_names();

/* Every structure-constant assignment on canonical tuples compatible with the
 * grading (and with skew storage: a repeated even index forces zero away from
 * characteristic 2), filtered by validate_algebra. alpha = 0. Assignments are
 * scanned in lexicographic order and the passing ones passed to emit with
 * their assignment index; p^(#constants) must fit budget.max_assignments
 * (BudgetExceeded). The returned counts are deterministic. */
struct EnumerationStats {
  uint64_t constants = 0;    // free structure coefficients
  uint64_t assignments = 0;  // tables scanned
  uint64_t valid = 0;        // algebras emitted
};
EnumerationStats brute_force_enumerate(
    size_t d0, size_t d1, int n, uint32_t p, const Budget& budget,
    const std::function<void(const NLieSuperalgebra&, uint64_t)>& emit);

}  // namespace nsla
