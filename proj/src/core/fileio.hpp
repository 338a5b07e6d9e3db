#pragma once
#include <iosfwd>
#include <string>

#include "core/represent.hpp"

namespace nsla {

/* "nsla-v1", line-oriented. In order: the format tag; `field Q|F<p>`;
 * `arity N`; `alpha 0|1`; one `basis NAME even|odd` per generator; then
 * `bracket NAME... = NAME:COEFF ...` entries (argument names non-decreasing in
 * declared order, value `0` for an explicit zero). `#` starts a comment.
 * Parse errors carry the 1-based line number. */
NLieSuperalgebra parse_algebra(std::istream& in);
NLieSuperalgebra load_algebra(const std::string& path);
std::string serialize_algebra(const NLieSuperalgebra& A);
void save_algebra(const NLieSuperalgebra& A, const std::string& path);

/* "nsla-rep-v1": the same algebra sections plus `module NAME even|odd` lines
 * and `rho NAME... on MODULE_NAME = MODULE_NAME:COEFF ...` operator columns. */
Representation parse_representation(std::istream& in);
Representation load_representation(const std::string& path);
std::string serialize_representation(const Representation& R);
void save_representation(const Representation& R, const std::string& path);

}  // namespace nsla
