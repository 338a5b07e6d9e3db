#pragma once
#include "core/field.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

namespace nsla {

/* Dense exact matrix, row-major, column-vector convention: apply(x)_i = sum_j a[i][j] x_j. */
struct Matrix {
  Field f;
  size_t rows = 0, cols = 0;
  std::vector<Scalar> a;

  Matrix() = default;
  Matrix(Field fld, size_t r, size_t c) : f(fld), rows(r), cols(c), a(r * c, Scalar::zero(fld)) {}

  Scalar& at(size_t r, size_t c) { return a[r * cols + c]; }
  const Scalar& at(size_t r, size_t c) const { return a[r * cols + c]; }

  static Matrix identity(Field fld, size_t n);

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  Matrix mul(const Matrix& o) const;
  Matrix add(const Matrix& o) const;
  Matrix sub(const Matrix& o) const;
  Matrix scale(const Scalar& c) const;
  Matrix transpose() const;
  Matrix pow(uint64_t k) const;  // square matrices
  Vec apply(const Vec& x) const;
  Vec row(size_t r) const;
  std::string str() const;
};

/* In-place reduced row echelon form; returns the pivot columns in order. */
std::vector<size_t> rref_inplace(Matrix& m);
size_t rank_of(Matrix m);

/* Canonical row-space basis: RREF with zero rows dropped. Two spans are equal
 * iff these matrices are identical, which is what makes subspace equality
 * a syntactic check everywhere downstream. */
Matrix row_space(const Matrix& m);
Matrix kernel(const Matrix& m);  // RREF basis of {x : m x = 0}, rows in F^cols
std::optional<Vec> solve(const Matrix& A, const Vec& b);

/* Row-space subspace helpers. All matrices must be canonical (row_space output)
 * with a common column count. */
bool space_contains(const Matrix& space, const Vec& v);
bool space_leq(const Matrix& a, const Matrix& b);
Matrix space_sum(const Matrix& a, const Matrix& b);
Matrix space_intersect(const Matrix& a, const Matrix& b);
Matrix space_zero(Field f, size_t cols);
std::optional<Vec> coords_in_rows(const Matrix& space, const Vec& v);
Vec reduce_mod_rows(const Matrix& space, Vec v);  // canonical representative mod the row space

struct GradedDims {
  size_t d0 = 0, d1 = 0;
  size_t total() const { return d0 + d1; }
  bool operator==(const GradedDims&) const = default;
};

/* Which positions of the underlying coordinate space are even/odd. Basis files
 * may interleave parities, so subspace matrices live over the parity-filtered
 * coordinates and this table translates back and forth. */
struct ParityLayout {
  std::vector<int> parity;  // 0/1 per position
  std::vector<size_t> even_pos, odd_pos;

  static ParityLayout from(const std::vector<int>& parities);
  GradedDims dims() const { return GradedDims{even_pos.size(), odd_pos.size()}; }
  size_t total() const { return parity.size(); }

  Vec embed(const Vec& compact, int par, Field f) const;
  std::pair<Vec, Vec> split(const Vec& full) const;   // (even compact, odd compact)
  int homogeneous_parity(const Vec& full) const;      // 0, 1, or -1 if mixed; 0 for zero
};

/* Z2-graded subspace in unique form: one RREF basis per parity over the
 * parity-filtered coordinates. Equality of subspaces is operator==. */
struct GradedSubspace {
  Matrix even, odd;

  GradedDims ambient() const { return GradedDims{even.cols, odd.cols}; }
  size_t dim() const { return even.rows + odd.rows; }
  bool is_zero() const { return dim() == 0; }
  bool operator==(const GradedSubspace&) const = default;
  bool contains(const GradedSubspace& o) const;
  bool contains_vec(const ParityLayout& layout, const Vec& full) const;
  std::string key() const;  // deterministic ordering/serialization key
};

GradedSubspace gs_zero(Field f, GradedDims d);
GradedSubspace gs_full(Field f, GradedDims d);
GradedSubspace gs_sum(const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace gs_intersect(const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace gs_from_vectors(Field f, const ParityLayout& layout, const std::vector<Vec>& vecs);
/* homogeneous spanning vectors in full coordinates: even rows then odd rows */
std::vector<std::pair<Vec, int>> gs_basis(const GradedSubspace& s, const ParityLayout& layout);

// Coordinates of a full-width vector in gs_basis order (even rows, then odd);
// nullopt when the vector lies outside the subspace.
std::optional<Vec> gs_coords(const GradedSubspace& s, const ParityLayout& layout, const Vec& full);

/* Operator on the full coordinate space with a parity tag (how it shifts the
 * grading; only meaningful when the matrix respects it). */
struct LinearOperator {
  Matrix m;
  int parity = 0;
};

bool matrix_respects_parity(const Matrix& m, const ParityLayout& layout, int parity);

/* Fitting decomposition V = ker f^N + im f^N for an even power N >= dim.
 * Even powers of homogeneous operators preserve parity, so both components
 * are graded even when f itself is odd. */
struct FittingResult {
  GradedSubspace zero_part, one_part;
  size_t power = 0;
};
FittingResult fitting_components(const Matrix& f, const ParityLayout& layout);
Matrix nilspace(const Matrix& f);  // ker f^dim for arbitrary (possibly mixed) operators

bool matrix_nilpotent(const Matrix& f);
size_t nilpotency_index(const Matrix& f);  // minimal k with f^k = 0; requires nilpotent

/* Associative envelope of a set of operators, graded by word length:
 * W_1 = span(gens), W_{k+1} = span(W_1 . W_k). A nil algebra of operators on a
 * d-dimensional space has index <= d, so W_d = 0 decides nilpotency. */
struct EnvelopeReport {
  bool nilpotent = false;
  size_t index = 0;  // minimal k with W_k = 0 when nilpotent
};
EnvelopeReport envelope_nilpotency(Field f, size_t dim, const std::vector<Matrix>& gens);

/* Visit one representative of every nonzero vector of the row space up to
 * scaling (first nonzero coefficient fixed to 1): (p^r - 1)/(p - 1) visits for
 * r rows. Stops early when fn returns false. Finite fields only. */
void for_each_projective(const Matrix& rows, const std::function<bool(const Vec&)>& fn);

}  // namespace nsla
