#pragma once
#include "core/linalg.hpp"

#include <functional>
#include <string>

namespace nsla {

using Tuple = std::vector<int>;  // basis indices

/* Rank of non-decreasing index tuples in lexicographic order, used to store
 * the structure-constant table densely (one slot per multiset). */
struct TupleIndexer {
  int d = 0, n = 0;
  std::vector<std::vector<uint64_t>> binom;

  TupleIndexer() = default;
  TupleIndexer(int dim, int arity);
  size_t size() const;
  size_t rank(const Tuple& t) const;  // t canonical (non-decreasing)
};

/* Visit all non-decreasing tuples of length n over [0,d) in lex order; the
 * running index equals TupleIndexer::rank. */
void for_each_canonical(int d, int n, const std::function<void(const Tuple&, size_t)>& fn);
bool is_canonical(const Tuple& t);

/* Finite-dimensional n-Lie superalgebra by structure constants. Only canonical
 * (sorted) tuples are stored; everything else is reached through the sign rules. */
struct NLieSuperalgebra {
  Field field;
  int n = 2;      // bracket arity
  int alpha = 0;  // bracket parity
  std::vector<std::string> names;
  std::vector<int> parities;
  ParityLayout layout;
  TupleIndexer idx;
  std::vector<Vec> table;  // rank -> value; empty slot means zero

  size_t dim() const { return names.size(); }
  GradedDims gdims() const { return layout.dims(); }
  const Vec& value(size_t rank) const;
  bool entry_is_zero(size_t rank) const;
  void set_entry(const Tuple& canon, const Vec& v);
  bool operator==(const NLieSuperalgebra& o) const;
  bool char2() const { return field.char2(); }
};

NLieSuperalgebra make_algebra(Field f, int n, int alpha,
                              const std::vector<std::pair<std::string, int>>& basis);

/* Sort a tuple by adjacent swaps, accumulating the sign -(-1)^{p(a)p(b)} per
 * swap: +1 when both entries are odd, -1 otherwise. Returns sign 0 when the
 * sorted tuple repeats an even index and the characteristic is not 2. */
struct CanonTuple {
  Tuple t;
  int sign = 1;  // 0, +1 or -1
};
CanonTuple canonicalize_tuple(const NLieSuperalgebra& A, Tuple t);

/* Bracket of basis elements by index tuple (any order). */
Vec bracket_basis(const NLieSuperalgebra& A, const Tuple& t);
/* Bracket with basis indices in all slots except `slot`, which holds v. */
Vec bracket_slot_vec(const NLieSuperalgebra& A, const Tuple& others, size_t slot, const Vec& v);
/* Fully general multilinear bracket of n coordinate vectors. */
Vec bracket_eval(const NLieSuperalgebra& A, const std::vector<Vec>& args);

/* D(a_1,...,a_{n-1}) x = [a_1,...,a_{n-1},x]. Parity tag is alpha plus the
 * argument parity sum when all arguments are homogeneous, -1 otherwise. */
LinearOperator left_mult(const NLieSuperalgebra& A, const std::vector<Vec>& args);
LinearOperator left_mult_basis(const NLieSuperalgebra& A, const Tuple& t);

struct ValidationWitness {
  std::string kind;  // "grading" | "skew" | "filippov_jacobi"
  Tuple outer, inner;
  std::string detail;
};

struct ValidationReport {
  bool grading_ok = true, skew_ok = true, fj_ok = true;
  bool char2_caveat = false;
  std::vector<ValidationWitness> witnesses;
  bool ok() const { return grading_ok && skew_ok && fj_ok; }
};

/* Grading of every stored entry, storage-form skew invariants, and the
 * Filippov-Jacobi identity over all basis tuples (d^(2n-1) instances; the
 * identity is multilinear, so basis tuples decide it). Witnesses are the
 * lexicographically least failing tuples. */
ValidationReport validate_algebra(const NLieSuperalgebra& A);

/* Signed Leibniz rule for a homogeneous operator. The weight of the sign is
 * (parity(f) + alpha) mod 2, which for a left multiplication equals the
 * argument parity sum, making every left_mult of a valid algebra pass. */
bool check_derivation(const NLieSuperalgebra& A, const LinearOperator& f, std::string* why = nullptr);

/* f^k applied to a bracket lies in the span of brackets of f-powers of the
 * arguments with total power k; checked for all canonical basis tuples. */
bool derivation_power_membership(const NLieSuperalgebra& A, const LinearOperator& f, int k,
                                 std::string* why = nullptr);

}  // namespace nsla
