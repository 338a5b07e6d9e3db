#include "core/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace nsla {

TupleIndexer::TupleIndexer(int dim, int arity) : d(dim), n(arity) {
  int m = d + n + 1;
  binom.assign(m, std::vector<uint64_t>(m, 0));
  for (int i = 0; i < m; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
}

static uint64_t choose(const TupleIndexer& ix, int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  return ix.binom[a][b];
}

size_t TupleIndexer::size() const { return (size_t)choose(*this, d + n - 1, n); }

size_t TupleIndexer::rank(const Tuple& t) const {
  // lex position: for slot k, count tails where the slot takes a smaller value
  uint64_t r = 0;
  int lo = 0;
  for (int k = 0; k < n; ++k) {
    for (int w = lo; w < t[k]; ++w) r += choose(*this, (d - w) + (n - k - 1) - 1, n - k - 1);
    lo = t[k];
  }
  return (size_t)r;
}

void for_each_canonical(int d, int n, const std::function<void(const Tuple&, size_t)>& fn) {
  if (d == 0) return;
  Tuple t(n, 0);
  size_t rank = 0;
  while (true) {
    fn(t, rank++);
    int k = n - 1;
    while (k >= 0 && t[k] == d - 1) --k;
    if (k < 0) return;
    int v = t[k] + 1;
    for (int j = k; j < n; ++j) t[j] = v;
  }
}

bool is_canonical(const Tuple& t) {
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] > t[i]) return false;
  return true;
}

const Vec& NLieSuperalgebra::value(size_t rank) const { return table.at(rank); }

bool NLieSuperalgebra::entry_is_zero(size_t rank) const {
  return table[rank].empty() || vec_is_zero(table[rank]);
}

void NLieSuperalgebra::set_entry(const Tuple& canon, const Vec& v) {
  if ((int)canon.size() != n) throw Error(Err::ArityMismatch, "entry tuple arity mismatch");
  if (!is_canonical(canon)) throw Error(Err::Parse, "entry tuple not in non-decreasing order");
  for (int i : canon)
    if (i < 0 || (size_t)i >= dim()) throw Error(Err::Parse, "entry index out of range");
  if (v.size() != dim()) throw Error(Err::Internal, "entry value length mismatch");
  table[idx.rank(canon)] = v;
}

bool NLieSuperalgebra::operator==(const NLieSuperalgebra& o) const {
  if (!(field == o.field) || n != o.n || alpha != o.alpha || names != o.names ||
      parities != o.parities)
    return false;
  for (size_t r = 0; r < table.size(); ++r) {
    bool za = entry_is_zero(r), zb = o.entry_is_zero(r);
    if (za != zb) return false;
    if (!za && table[r] != o.table[r]) return false;
  }
  return true;
}

NLieSuperalgebra make_algebra(Field f, int n, int alpha,
                              const std::vector<std::pair<std::string, int>>& basis) {
  if (n < 2) throw Error(Err::BadArity, "bracket arity must be at least 2");
  NLieSuperalgebra A;
  A.field = f;
  A.n = n;
  A.alpha = alpha & 1;
  for (auto& [name, par] : basis) {
    for (auto& other : A.names)
      if (other == name) throw Error(Err::Parse, "duplicate basis name '" + name + "'");
    A.names.push_back(name);
    A.parities.push_back(par & 1);
  }
  A.layout = ParityLayout::from(A.parities);
  A.idx = TupleIndexer((int)A.names.size(), n);
  A.table.assign(A.idx.size(), Vec{});
  return A;
}

CanonTuple canonicalize_tuple(const NLieSuperalgebra& A, Tuple t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i)
    for (size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
      bool both_odd = A.parities[t[j - 1]] == 1 && A.parities[t[j]] == 1;
      sign = both_odd ? sign : -sign;
      std::swap(t[j - 1], t[j]);
    }
  if (!A.char2()) {
    for (size_t i = 1; i < t.size(); ++i)
      if (t[i - 1] == t[i] && A.parities[t[i]] == 0) return CanonTuple{t, 0};
  }
  return CanonTuple{t, sign};
}

static Scalar sign_scalar(Field f, int sign) {
  return sign >= 0 ? Scalar::from_int(f, sign) : -Scalar::from_int(f, -sign);
}

Vec bracket_basis(const NLieSuperalgebra& A, const Tuple& t) {
  CanonTuple c = canonicalize_tuple(A, t);
  Vec out = zero_vec(A.field, A.dim());
  if (c.sign == 0) return out;
  size_t r = A.idx.rank(c.t);
  if (A.entry_is_zero(r)) return out;
  vec_add_scaled(out, sign_scalar(A.field, c.sign), A.table[r]);
  return out;
}

Vec bracket_slot_vec(const NLieSuperalgebra& A, const Tuple& others, size_t slot, const Vec& v) {
  if (others.size() + 1 != (size_t)A.n) throw Error(Err::ArityMismatch, "bracket arity mismatch");
  Vec out = zero_vec(A.field, A.dim());
  Tuple full(A.n);
  for (size_t i = 0, k = 0; i < (size_t)A.n; ++i)
    if (i != slot) full[i] = others[k++];
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    full[slot] = (int)j;
    CanonTuple c = canonicalize_tuple(A, full);
    if (c.sign == 0) continue;
    size_t r = A.idx.rank(c.t);
    if (A.entry_is_zero(r)) continue;
    vec_add_scaled(out, v[j] * sign_scalar(A.field, c.sign), A.table[r]);
  }
  return out;
}

Vec bracket_eval(const NLieSuperalgebra& A, const std::vector<Vec>& args) {
  if (args.size() != (size_t)A.n) throw Error(Err::ArityMismatch, "bracket arity mismatch");
  std::vector<std::vector<int>> supp(A.n);
  for (int i = 0; i < A.n; ++i) {
    if (args[i].size() != A.dim()) throw Error(Err::AmbientMismatch, "argument dimension mismatch");
    for (size_t j = 0; j < args[i].size(); ++j)
      if (!args[i][j].is_zero()) supp[i].push_back((int)j);
  }
  Vec out = zero_vec(A.field, A.dim());
  for (int i = 0; i < A.n; ++i)
    if (supp[i].empty()) return out;
  std::vector<size_t> pos(A.n, 0);
  Tuple t(A.n);
  while (true) {
    Scalar coeff = Scalar::one(A.field);
    for (int i = 0; i < A.n; ++i) {
      t[i] = supp[i][pos[i]];
      coeff = coeff * args[i][t[i]];
    }
    CanonTuple c = canonicalize_tuple(A, t);
    if (c.sign != 0) {
      size_t r = A.idx.rank(c.t);
      if (!A.entry_is_zero(r)) vec_add_scaled(out, coeff * sign_scalar(A.field, c.sign), A.table[r]);
    }
    int k = A.n - 1;
    while (k >= 0 && pos[k] + 1 == supp[k].size()) pos[k--] = 0;
    if (k < 0) break;
    ++pos[k];
  }
  return out;
}

LinearOperator left_mult(const NLieSuperalgebra& A, const std::vector<Vec>& args) {
  if (args.size() + 1 != (size_t)A.n) throw Error(Err::ArityMismatch, "left multiplication needs n-1 arguments");
  size_t d = A.dim();
  LinearOperator op{Matrix(A.field, d, d), 0};
  int psum = A.alpha;
  bool homog = true;
  for (auto& a : args) {
    int p = A.layout.homogeneous_parity(a);
    if (p < 0) homog = false;
    else psum += p;
  }
  op.parity = homog ? (psum & 1) : -1;
  std::vector<Vec> full = args;
  full.push_back(zero_vec(A.field, d));
  for (size_t j = 0; j < d; ++j) {
    full.back() = zero_vec(A.field, d);
    full.back()[j] = Scalar::one(A.field);
    Vec col = bracket_eval(A, full);
    for (size_t i = 0; i < d; ++i) op.m.at(i, j) = col[i];
  }
  return op;
}

LinearOperator left_mult_basis(const NLieSuperalgebra& A, const Tuple& t) {
  std::vector<Vec> args;
  for (int i : t) {
    Vec v = zero_vec(A.field, A.dim());
    v[i] = Scalar::one(A.field);
    args.push_back(v);
  }
  return left_mult(A, args);
}

/* All index tuples of a given length in lex order. */
static bool next_tuple(Tuple& t, int d) {
  int k = (int)t.size() - 1;
  while (k >= 0 && t[k] == d - 1) t[k--] = 0;
  if (k < 0) return false;
  ++t[k];
  return true;
}

ValidationReport validate_algebra(const NLieSuperalgebra& A) {
  ValidationReport rep;
  rep.char2_caveat = A.char2();
  int d = (int)A.dim();
  if (d == 0) return rep;

  for_each_canonical(d, A.n, [&](const Tuple& t, size_t rank) {
    if (A.entry_is_zero(rank)) return;
    const Vec& v = A.table[rank];
    int want = A.alpha;
    for (int i : t) want ^= A.parities[i];
    for (int j = 0; j < d; ++j)
      if (!v[j].is_zero() && A.parities[j] != want) {
        if (rep.grading_ok)
          rep.witnesses.push_back({"grading", t, {}, "value hits '" + A.names[j] + "' of wrong parity"});
        rep.grading_ok = false;
      }
    if (!A.char2()) {
      for (size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] == t[i] && A.parities[t[i]] == 0) {
          if (rep.skew_ok)
            rep.witnesses.push_back({"skew", t, {}, "repeated even argument must bracket to zero"});
          rep.skew_ok = false;
          break;
        }
    }
  });

  // Filippov-Jacobi over all basis tuples, lexicographic, first failure kept
  Tuple a(A.n - 1, 0);
  bool stop = false;
  do {
    int P = 0;
    for (int i : a) P ^= A.parities[i];
    Tuple b(A.n, 0);
    do {
      Vec inner = bracket_basis(A, b);
      Vec lhs = bracket_slot_vec(A, a, A.n - 1, inner);
      Vec rhs = zero_vec(A.field, d);
      int prefix = 0;
      for (int i = 0; i < A.n; ++i) {
        Tuple ai = a;
        ai.push_back(b[i]);
        Vec inner_i = bracket_basis(A, ai);
        Tuple rest;
        for (int j = 0; j < A.n; ++j)
          if (j != i) rest.push_back(b[j]);
        Vec term = bracket_slot_vec(A, rest, i, inner_i);
        int sgn = ((P & prefix & 1) ? -1 : 1);
        vec_add_scaled(rhs, sign_scalar(A.field, sgn), term);
        prefix ^= A.parities[b[i]];
      }
      if (A.alpha && P) rhs = vec_scale(-Scalar::one(A.field), rhs);
      if (lhs != rhs) {
        rep.fj_ok = false;
        std::ostringstream os;
        os << "outer (";
        for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << A.names[a[i]];
        os << ") inner (";
        for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << A.names[b[i]];
        os << ")";
        rep.witnesses.push_back({"filippov_jacobi", a, b, os.str()});
        stop = true;
      }
    } while (!stop && next_tuple(b, d));
  } while (!stop && next_tuple(a, d));

  return rep;
}

bool check_derivation(const NLieSuperalgebra& A, const LinearOperator& f, std::string* why) {
  if (f.parity < 0) throw Error(Err::HypothesisNotMet, "derivation check needs a homogeneous operator");
  int w = (f.parity + A.alpha) & 1;
  int d = (int)A.dim();
  if (d == 0) return true;
  std::vector<Vec> fim(d);
  for (int j = 0; j < d; ++j) {
    Vec e = zero_vec(A.field, d);
    e[j] = Scalar::one(A.field);
    fim[j] = f.m.apply(e);
  }
  Tuple x(A.n, 0);
  do {
    Vec lhs = f.m.apply(bracket_basis(A, x));
    Vec rhs = zero_vec(A.field, d);
    int prefix = A.alpha;
    for (int i = 0; i < A.n; ++i) {
      Tuple rest;
      for (int j = 0; j < A.n; ++j)
        if (j != i) rest.push_back(x[j]);
      Vec term = bracket_slot_vec(A, rest, i, fim[x[i]]);
      int sgn = (w & prefix & 1) ? -1 : 1;
      vec_add_scaled(rhs, sign_scalar(A.field, sgn), term);
      prefix ^= A.parities[x[i]];
    }
    if (lhs != rhs) {
      if (why) {
        std::ostringstream os;
        os << "leibniz rule fails on (";
        for (int i = 0; i < A.n; ++i) os << (i ? "," : "") << A.names[x[i]];
        os << ")";
        *why = os.str();
      }
      return false;
    }
  } while (next_tuple(x, d));
  return true;
}

/* compositions of k into n nonnegative parts */
static void for_each_composition(int k, int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(n, 0);
  c[n - 1] = k;
  while (true) {
    fn(c);
    // next composition in colex-ish order: move one unit left of the last nonzero tail
    int i = n - 1;
    while (i >= 0 && c[i] == 0) --i;
    if (i <= 0) return;
    int tail = c[i];
    c[i] = 0;
    c[i - 1] += 1;
    c[n - 1] = tail - 1;
  }
}

bool derivation_power_membership(const NLieSuperalgebra& A, const LinearOperator& f, int k,
                                 std::string* why) {
  int d = (int)A.dim();
  if (d == 0) return true;
  std::vector<Matrix> pw(k + 1, Matrix::identity(A.field, d));
  for (int i = 1; i <= k; ++i) pw[i] = pw[i - 1].mul(f.m);
  bool ok = true;
  for_each_canonical(d, A.n, [&](const Tuple& t, size_t) {
    if (!ok) return;
    Vec lhs = pw[k].apply(bracket_basis(A, t));
    std::vector<Vec> span_vecs;
    for_each_composition(k, A.n, [&](const std::vector<int>& comp) {
      std::vector<Vec> args(A.n);
      for (int i = 0; i < A.n; ++i) {
        Vec e = zero_vec(A.field, d);
        e[t[i]] = Scalar::one(A.field);
        args[i] = pw[comp[i]].apply(e);
      }
      span_vecs.push_back(bracket_eval(A, args));
    });
    Matrix rows(A.field, span_vecs.size(), d);
    for (size_t i = 0; i < span_vecs.size(); ++i)
      for (int j = 0; j < d; ++j) rows.at(i, j) = span_vecs[i][j];
    if (!space_contains(row_space(rows), lhs)) {
      ok = false;
      if (why) {
        std::ostringstream os;
        os << "power " << k << " image leaves the span on (";
        for (int i = 0; i < A.n; ++i) os << (i ? "," : "") << A.names[t[i]];
        os << ")";
        *why = os.str();
      }
    }
  });
  return ok;
}

}  // namespace nsla
