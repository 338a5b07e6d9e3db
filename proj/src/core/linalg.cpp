#include "core/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace nsla {

Matrix Matrix::identity(Field fld, size_t n) {
  Matrix m(fld, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(fld);
  return m;
}

bool Matrix::is_zero() const {
  for (auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols || !(f == o.f)) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != o.a[i]) return false;
  return true;
}

Matrix Matrix::mul(const Matrix& o) const {
  if (cols != o.rows) throw Error(Err::Internal, "matrix product shape mismatch");
  Matrix r(f, rows, o.cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.cols; ++j) r.at(i, j) = r.at(i, j) + x * o.at(k, j);
    }
  return r;
}

Matrix Matrix::add(const Matrix& o) const {
  Matrix r(*this);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

Matrix Matrix::sub(const Matrix& o) const {
  Matrix r(*this);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

Matrix Matrix::scale(const Scalar& c) const {
  Matrix r(*this);
  for (auto& x : r.a) x = c * x;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(f, cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::pow(uint64_t k) const {
  if (rows != cols) throw Error(Err::Internal, "pow needs a square matrix");
  Matrix acc = identity(f, rows), base = *this;
  while (k) {
    if (k & 1) acc = acc.mul(base);
    k >>= 1;
    if (k) base = base.mul(base);
  }
  return acc;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols) throw Error(Err::Internal, "apply shape mismatch");
  Vec r = zero_vec(f, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) r[i] = r[i] + at(i, j) * x[j];
  return r;
}

Vec Matrix::row(size_t r) const { return Vec(a.begin() + r * cols, a.begin() + (r + 1) * cols); }

std::string Matrix::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows; ++i) {
    os << "[";
    for (size_t j = 0; j < cols; ++j) os << (j ? " " : "") << at(i, j).str();
    os << "]";
  }
  return os.str();
}

std::vector<size_t> rref_inplace(Matrix& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t sel = r;
    while (sel < m.rows && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows) continue;
    if (sel != r)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    Scalar piv = m.at(r, c).inv();
    for (size_t j = c; j < m.cols; ++j) m.at(r, j) = piv * m.at(r, j);
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar k = m.at(i, c);
      for (size_t j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - k * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank_of(Matrix m) { return rref_inplace(m).size(); }

Matrix row_space(const Matrix& m) {
  Matrix t = m;
  size_t rank = rref_inplace(t).size();
  Matrix r(m.f, rank, m.cols);
  for (size_t i = 0; i < rank; ++i)
    for (size_t j = 0; j < m.cols; ++j) r.at(i, j) = t.at(i, j);
  return r;
}

Matrix kernel(const Matrix& m) {
  Matrix t = m;
  std::vector<size_t> piv = rref_inplace(t);
  std::vector<bool> is_piv(m.cols, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<size_t> free;
  for (size_t c = 0; c < m.cols; ++c)
    if (!is_piv[c]) free.push_back(c);
  Matrix k(m.f, free.size(), m.cols);
  for (size_t fi = 0; fi < free.size(); ++fi) {
    k.at(fi, free[fi]) = Scalar::one(m.f);
    for (size_t pi = 0; pi < piv.size(); ++pi) k.at(fi, piv[pi]) = -t.at(pi, free[fi]);
  }
  // the free-column basis is not canonical (leading entries sit at pivot
  // columns and need not be 1), so re-reduce to keep subspace equality syntactic
  return row_space(k);
}

std::optional<Vec> solve(const Matrix& A, const Vec& b) {
  if (b.size() != A.rows) throw Error(Err::Internal, "solve shape mismatch");
  Matrix aug(A.f, A.rows, A.cols + 1);
  for (size_t i = 0; i < A.rows; ++i) {
    for (size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<size_t> piv = rref_inplace(aug);
  if (!piv.empty() && piv.back() == A.cols) return std::nullopt;  // inconsistent
  Vec x = zero_vec(A.f, A.cols);
  for (size_t pi = 0; pi < piv.size(); ++pi) x[piv[pi]] = aug.at(pi, A.cols);
  return x;
}

bool space_contains(const Matrix& space, const Vec& v) {
  Vec r = v;
  for (size_t i = 0; i < space.rows; ++i) {
    // pivot column of row i is its first nonzero entry
    size_t pc = 0;
    while (pc < space.cols && space.at(i, pc).is_zero()) ++pc;
    if (pc == space.cols) continue;
    if (!r[pc].is_zero()) {
      Scalar k = r[pc];
      for (size_t j = 0; j < space.cols; ++j) r[j] = r[j] - k * space.at(i, j);
    }
  }
  return vec_is_zero(r);
}

bool space_leq(const Matrix& a, const Matrix& b) {
  for (size_t i = 0; i < a.rows; ++i)
    if (!space_contains(b, a.row(i))) return false;
  return true;
}

Matrix space_sum(const Matrix& a, const Matrix& b) {
  Matrix st(a.f, a.rows + b.rows, a.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < a.cols; ++j) st.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows; ++i)
    for (size_t j = 0; j < b.cols; ++j) st.at(a.rows + i, j) = b.at(i, j);
  return row_space(st);
}

Matrix space_zero(Field f, size_t cols) { return Matrix(f, 0, cols); }

Matrix space_intersect(const Matrix& a, const Matrix& b) {
  // (a^perp + b^perp)^perp with perp via the standard dot pairing
  Matrix pa = kernel(a), pb = kernel(b);
  return kernel(space_sum(pa, pb));
}

std::optional<Vec> coords_in_rows(const Matrix& space, const Vec& v) {
  return solve(space.transpose(), v);
}

Vec reduce_mod_rows(const Matrix& space, Vec v) {
  for (size_t i = 0; i < space.rows; ++i) {
    size_t p = space.cols;
    for (size_t j = 0; j < space.cols; ++j)
      if (!space.at(i, j).is_zero()) {
        p = j;
        break;
      }
    if (p == space.cols || v[p].is_zero()) continue;
    Scalar c = v[p];
    for (size_t j = 0; j < space.cols; ++j) v[j] = v[j] - c * space.at(i, j);
  }
  return v;
}

ParityLayout ParityLayout::from(const std::vector<int>& parities) {
  ParityLayout l;
  l.parity = parities;
  for (size_t i = 0; i < parities.size(); ++i)
    (parities[i] == 0 ? l.even_pos : l.odd_pos).push_back(i);
  return l;
}

Vec ParityLayout::embed(const Vec& compact, int par, Field f) const {
  const auto& pos = par == 0 ? even_pos : odd_pos;
  if (compact.size() != pos.size()) throw Error(Err::Internal, "embed size mismatch");
  Vec full = zero_vec(f, parity.size());
  for (size_t i = 0; i < pos.size(); ++i) full[pos[i]] = compact[i];
  return full;
}

std::pair<Vec, Vec> ParityLayout::split(const Vec& full) const {
  if (full.size() != parity.size()) throw Error(Err::Internal, "split size mismatch");
  Vec ev, od;
  ev.reserve(even_pos.size());
  od.reserve(odd_pos.size());
  for (size_t p : even_pos) ev.push_back(full[p]);
  for (size_t p : odd_pos) od.push_back(full[p]);
  return {ev, od};
}

int ParityLayout::homogeneous_parity(const Vec& full) const {
  bool has_even = false, has_odd = false;
  for (size_t i = 0; i < full.size(); ++i)
    if (!full[i].is_zero()) (parity[i] == 0 ? has_even : has_odd) = true;
  if (has_even && has_odd) return -1;
  return has_odd ? 1 : 0;
}

bool GradedSubspace::contains(const GradedSubspace& o) const {
  return space_leq(o.even, even) && space_leq(o.odd, odd);
}

bool GradedSubspace::contains_vec(const ParityLayout& layout, const Vec& full) const {
  auto [ev, od] = layout.split(full);
  return space_contains(even, ev) && space_contains(odd, od);
}

std::string GradedSubspace::key() const {
  std::ostringstream os;
  os << even.rows << "|" << even.str() << "||" << odd.rows << "|" << odd.str();
  return os.str();
}

GradedSubspace gs_zero(Field f, GradedDims d) {
  return GradedSubspace{Matrix(f, 0, d.d0), Matrix(f, 0, d.d1)};
}

GradedSubspace gs_full(Field f, GradedDims d) {
  return GradedSubspace{Matrix::identity(f, d.d0), Matrix::identity(f, d.d1)};
}

GradedSubspace gs_sum(const GradedSubspace& a, const GradedSubspace& b) {
  return GradedSubspace{space_sum(a.even, b.even), space_sum(a.odd, b.odd)};
}

GradedSubspace gs_intersect(const GradedSubspace& a, const GradedSubspace& b) {
  return GradedSubspace{space_intersect(a.even, b.even), space_intersect(a.odd, b.odd)};
}

GradedSubspace gs_from_vectors(Field f, const ParityLayout& layout, const std::vector<Vec>& vecs) {
  GradedDims d = layout.dims();
  Matrix ev(f, vecs.size(), d.d0), od(f, vecs.size(), d.d1);
  for (size_t i = 0; i < vecs.size(); ++i) {
    auto [e, o] = layout.split(vecs[i]);
    for (size_t j = 0; j < d.d0; ++j) ev.at(i, j) = e[j];
    for (size_t j = 0; j < d.d1; ++j) od.at(i, j) = o[j];
  }
  return GradedSubspace{row_space(ev), row_space(od)};
}

std::vector<std::pair<Vec, int>> gs_basis(const GradedSubspace& s, const ParityLayout& layout) {
  std::vector<std::pair<Vec, int>> out;
  for (size_t i = 0; i < s.even.rows; ++i) out.emplace_back(layout.embed(s.even.row(i), 0, s.even.f), 0);
  for (size_t i = 0; i < s.odd.rows; ++i) out.emplace_back(layout.embed(s.odd.row(i), 1, s.odd.f), 1);
  return out;
}

std::optional<Vec> gs_coords(const GradedSubspace& s, const ParityLayout& layout, const Vec& full) {
  auto [e, o] = layout.split(full);
  auto ce = coords_in_rows(s.even, e);
  auto co = coords_in_rows(s.odd, o);
  if (!ce || !co) return std::nullopt;
  Vec out = *ce;
  out.insert(out.end(), co->begin(), co->end());
  return out;
}

bool matrix_respects_parity(const Matrix& m, const ParityLayout& layout, int parity) {
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero() && layout.parity[i] != ((layout.parity[j] + parity) & 1)) return false;
  return true;
}

FittingResult fitting_components(const Matrix& f, const ParityLayout& layout) {
  size_t d = f.rows;
  if (f.cols != d || d != layout.total()) throw Error(Err::Internal, "fitting shape mismatch");
  size_t N = d + (d & 1);  // smallest even exponent >= dim; parity-preserving power
  Matrix g = N == 0 ? Matrix::identity(f.f, 0) : f.pow(N);
  Matrix ker = kernel(g);
  Matrix img = row_space(g.transpose());
  auto to_graded = [&](const Matrix& rows) {
    std::vector<Vec> vs;
    for (size_t i = 0; i < rows.rows; ++i) {
      Vec v = rows.row(i);
      if (layout.homogeneous_parity(v) < 0)
        throw Error(Err::Internal, "fitting component row not homogeneous");
      vs.push_back(v);
    }
    return gs_from_vectors(f.f, layout, vs);
  };
  return FittingResult{to_graded(ker), to_graded(img), N};
}

Matrix nilspace(const Matrix& f) {
  size_t d = f.rows;
  return kernel(d == 0 ? Matrix::identity(f.f, 0) : f.pow(d));
}

bool matrix_nilpotent(const Matrix& f) {
  size_t d = f.rows;
  if (d == 0) return true;
  return f.pow(d).is_zero();
}

size_t nilpotency_index(const Matrix& f) {
  size_t d = f.rows;
  Matrix acc = Matrix::identity(f.f, d);
  for (size_t k = 1; k <= d || d == 0; ++k) {
    acc = acc.mul(f);
    if (acc.is_zero()) return k;
    if (d == 0) return 0;
  }
  throw Error(Err::HypothesisNotMet, "operator is not nilpotent");
}

EnvelopeReport envelope_nilpotency(Field f, size_t dim, const std::vector<Matrix>& gens) {
  size_t n2 = dim * dim;
  auto flatten = [&](const std::vector<Matrix>& ms) {
    Matrix rows(f, ms.size(), n2);
    for (size_t i = 0; i < ms.size(); ++i)
      for (size_t k = 0; k < n2; ++k) rows.a[i * n2 + k] = ms[i].a[k];
    return row_space(rows);
  };
  auto unflatten = [&](const Matrix& rows) {
    std::vector<Matrix> ms;
    for (size_t i = 0; i < rows.rows; ++i) {
      Matrix m(f, dim, dim);
      for (size_t k = 0; k < n2; ++k) m.a[k] = rows.at(i, k);
      ms.push_back(m);
    }
    return ms;
  };
  Matrix w1 = flatten(gens);
  if (w1.rows == 0) return EnvelopeReport{true, 1};
  std::vector<Matrix> basis1 = unflatten(w1);
  Matrix wk = w1;
  for (size_t k = 1; k <= dim; ++k) {
    if (wk.rows == 0) return EnvelopeReport{true, k};
    if (k == dim) break;
    std::vector<Matrix> prod;
    for (const Matrix& g : basis1)
      for (const Matrix& b : unflatten(wk)) prod.push_back(g.mul(b));
    wk = flatten(prod);
  }
  return EnvelopeReport{false, 0};
}

void for_each_projective(const Matrix& rows, const std::function<bool(const Vec&)>& fn) {
  if (rows.f.p == 0)
    throw Error(Err::FiniteFieldRequired, "projective enumeration needs a finite field");
  size_t r = rows.rows;
  for (size_t lead = 0; lead < r; ++lead) {
    std::vector<uint64_t> coef(r, 0);
    coef[lead] = 1;
    for (;;) {
      Vec v = zero_vec(rows.f, rows.cols);
      for (size_t i = lead; i < r; ++i)
        if (coef[i]) vec_add_scaled(v, Scalar::from_residue(rows.f, coef[i]), rows.row(i));
      if (!fn(v)) return;
      size_t t = r;
      while (t > lead + 1) {
        if (++coef[t - 1] < rows.f.p) break;
        coef[t - 1] = 0;
        --t;
      }
      if (t == lead + 1) break;
    }
  }
}

}  // namespace nsla
