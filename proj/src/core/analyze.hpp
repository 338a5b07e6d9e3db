#pragma once
#include <string>

#include "core/algebra.hpp"
#include "core/budget.hpp"

namespace nsla {

// Validation rendered for humans / machines. The JSON form is canonical:
// identical input yields identical bytes.
std::string validation_text(const NLieSuperalgebra& A);
std::string validation_json(const NLieSuperalgebra& A);

/* Full structural survey: validation, derived subspace, lower central and
 * k-derived series, nilpotency class, the Engel scan, the null-component
 * condition, and — when the subspace lattice is enumerable within budget —
 * radicals, the sum condition, the subalgebra dichotomy, and the invariance
 * number. Sections that need an unavailable enumeration report themselves as
 * skipped instead of failing. Identical input, budget and seed yield
 * byte-identical JSON. */
std::string analyze_text(const NLieSuperalgebra& A, const Budget& budget);
std::string analyze_json(const NLieSuperalgebra& A, const Budget& budget);

// Every graded subspace with its structural flags, plus the radicals.
// Needs the full enumeration: FiniteFieldRequired / BudgetExceeded propagate.
std::string lattice_text(const NLieSuperalgebra& A, const Budget& budget);
std::string lattice_json(const NLieSuperalgebra& A, const Budget& budget);

}  // namespace nsla
