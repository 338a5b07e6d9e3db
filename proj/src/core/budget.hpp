#pragma once
#include <cstdint>

namespace nsla {

// Resource caps for enumeration-heavy operations, plus the RNG seed used by
// the sampling fallbacks over the rationals.  Defaults fit every bundled
// example comfortably; callers raise them explicitly when they mean it.
// Three-valued verdict for properties that sampling cannot decide.
enum class Tri { yes, no, unknown };
inline const char* tri_name(Tri t) {
  return t == Tri::yes ? "yes" : t == Tri::no ? "no" : "unknown";
}

struct Budget {
  std::uint64_t max_subspaces = 1000000;    // graded subspaces per lattice walk
  std::uint64_t max_tuples = 1000000;       // element tuples per exhaustive scan
  std::uint64_t samples = 10000;            // random tuples when exhaustion is impossible
  std::uint64_t max_assignments = 10000000; // structure-constant assignments per enumeration
  std::uint64_t seed = 0;
};

}  // namespace nsla
