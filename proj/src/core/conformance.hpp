#pragma once
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/budget.hpp"

namespace nsla {

/* One structural law checked on one concrete algebra.
 *   pass            hypothesis held on at least one instance, conclusion held on all
 *   fail            some instance satisfied the hypothesis but broke the conclusion
 *   not_applicable  no instance satisfied the hypothesis
 *   skipped         a needed computation was unavailable within budget */
struct ConformanceItem {
  std::string id;
  std::string status;
  std::string detail;
};

struct ConformanceReport {
  std::vector<ConformanceItem> items;
  size_t passed = 0, failed = 0, not_applicable = 0, skipped = 0;
  bool all_ok() const { return failed == 0; }
};

/* Runs every structural law the library promises against one algebra:
 * radical containments, maximal-subalgebra laws, the sum / null-component
 * conditions and their nilpotency consequences, invariance-number laws, the
 * subalgebra dichotomy, derivation power laws, mixed-power and class bounds,
 * envelope nilpotency, representation round-trips, and the closure /
 * subinvariance oracles. Deterministic for a fixed input, budget and seed. */
ConformanceReport check_conformance(const NLieSuperalgebra& A, const Budget& budget);

std::string conformance_json(const NLieSuperalgebra& A, const ConformanceReport& r);
std::string conformance_text(const NLieSuperalgebra& A, const ConformanceReport& r);

}  // namespace nsla
