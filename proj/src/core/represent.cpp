#include "core/represent.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace nsla {

namespace {

Scalar sign_scalar(Field f, int sign) {
  return sign >= 0 ? Scalar::from_int(f, sign) : -Scalar::from_int(f, -sign);
}

/* All index tuples of the given length (every order, repeats allowed). */
void for_each_tuple(size_t d, size_t len, const std::function<void(const Tuple&)>& fn) {
  if (d == 0 && len > 0) return;
  Tuple t(len, 0);
  for (;;) {
    fn(t);
    size_t k = len;
    while (k > 0) {
      if (size_t(++t[k - 1]) < d) break;
      t[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
}

int tuple_parity_sum(const NLieSuperalgebra& A, const Tuple& t) {
  int s = 0;
  for (int j : t) s += A.parities[size_t(j)];
  return s;
}

/* rho with slot `slot` holding a coordinate vector instead of a basis index. */
Matrix rho_slot(const Representation& R, Tuple t, size_t slot, const Vec& w) {
  size_t m = R.mdim();
  Matrix out(R.algebra.field, m, m);
  for (size_t k = 0; k < R.algebra.dim(); ++k) {
    if (w[k].is_zero()) continue;
    t[slot] = int(k);
    out = out.add(rho_basis(R, t).scale(w[k]));
  }
  return out;
}

}  // namespace

Representation zero_representation(const NLieSuperalgebra& A, GradedDims mdims) {
  Representation R;
  R.algebra = A;
  for (size_t i = 0; i < mdims.d0 + mdims.d1; ++i) {
    R.module_names.push_back("v" + std::to_string(i));
    R.module_parities.push_back(i < mdims.d0 ? 0 : 1);
  }
  R.module_layout = ParityLayout::from(R.module_parities);
  R.idx = TupleIndexer(int(A.dim()), A.n - 1);
  size_t m = R.module_names.size();
  R.table.assign(R.idx.size(), Matrix(A.field, m, m));
  return R;
}

Representation regular_representation(const NLieSuperalgebra& A) {
  Representation R;
  R.algebra = A;
  R.module_names = A.names;
  R.module_parities = A.parities;
  R.module_layout = A.layout;
  R.idx = TupleIndexer(int(A.dim()), A.n - 1);
  for_each_canonical(int(A.dim()), A.n - 1,
                     [&](const Tuple& t, size_t) { R.table.push_back(left_mult_basis(A, t).m); });
  return R;
}

Matrix rho_basis(const Representation& R, const Tuple& t) {
  if (t.size() + 1 != size_t(R.algebra.n))
    throw Error(Err::ArityMismatch, "operator tuples take n-1 indices");
  CanonTuple c = canonicalize_tuple(R.algebra, t);
  size_t m = R.mdim();
  if (c.sign == 0) return Matrix(R.algebra.field, m, m);
  const Matrix& stored = R.table[R.idx.rank(c.t)];
  return c.sign < 0 ? stored.scale(Scalar::from_int(R.algebra.field, -1)) : stored;
}

Matrix rho_eval(const Representation& R, const std::vector<Vec>& args) {
  size_t n1 = size_t(R.algebra.n) - 1;
  if (args.size() != n1)
    throw Error(Err::ArityMismatch, "operator evaluation takes n-1 vectors");
  size_t d = R.algebra.dim(), m = R.mdim();
  Matrix out(R.algebra.field, m, m);
  Tuple t(n1, 0);
  std::function<void(size_t, const Scalar&)> rec = [&](size_t slot, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    if (slot == n1) {
      out = out.add(rho_basis(R, t).scale(coeff));
      return;
    }
    for (size_t k = 0; k < d; ++k) {
      t[slot] = int(k);
      rec(slot + 1, coeff * args[slot][k]);
    }
  };
  rec(0, Scalar::one(R.algebra.field));
  return out;
}

RepValidation validate_representation(const Representation& R) {
  RepValidation rep;
  const NLieSuperalgebra& A = R.algebra;
  Field f = A.field;
  size_t d = A.dim(), n1 = size_t(A.n) - 1;

  for_each_canonical(int(d), int(n1), [&](const Tuple& t, size_t rank) {
    const Matrix& M = R.table[rank];
    if (!A.char2()) {
      bool repeated_even = false;
      for (size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] == t[i] && A.parities[size_t(t[i])] == 0) repeated_even = true;
      if (repeated_even && !M.is_zero()) {
        rep.storage_ok = false;
        rep.witnesses.push_back({"storage", t, {}, "repeated even index must store zero"});
      }
    }
    int beta = (A.alpha + tuple_parity_sum(A, t)) & 1;
    if (!matrix_respects_parity(M, R.module_layout, beta)) {
      rep.parity_ok = false;
      rep.witnesses.push_back(
          {"parity", t, {}, "operator must shift module parity by " + std::to_string(beta)});
    }
  });

  for_each_tuple(d, n1, [&](const Tuple& bt) {
    Matrix rb = rho_basis(R, bt);
    Matrix Db = left_mult_basis(A, bt).m;
    int pb = tuple_parity_sum(A, bt);
    for_each_tuple(d, n1, [&](const Tuple& at) {
      Matrix ra = rho_basis(R, at);
      int pa = tuple_parity_sum(A, at);
      int s1 = ((pb & 1) && ((pa + A.alpha) & 1)) ? -1 : 1;
      Matrix rhs = ra.mul(rb).scale(sign_scalar(f, s1));
      int prefix = 0;
      for (size_t i = 0; i < n1; ++i) {
        Vec w = zero_vec(f, d);
        for (size_t r = 0; r < d; ++r) w[r] = Db.at(r, size_t(at[i]));
        int s = ((pb & 1) && ((prefix + A.alpha) & 1)) ? -1 : 1;
        rhs = rhs.add(rho_slot(R, at, i, w).scale(sign_scalar(f, s)));
        prefix += A.parities[size_t(at[i])];
      }
      if (!(rb.mul(ra) == rhs)) {
        rep.commutation_ok = false;
        rep.witnesses.push_back({"commutation", bt, at, "operator commutation relation fails"});
      }
    });
  });

  size_t n2 = n1 - 1;
  for_each_tuple(d, n2, [&](const Tuple& at) {
    int pa = tuple_parity_sum(A, at);
    for_each_tuple(d, size_t(A.n), [&](const Tuple& bt) {
      Vec br = bracket_basis(A, bt);
      Tuple slotted = at;
      slotted.push_back(0);
      Matrix lhs = rho_slot(R, slotted, n2, br);
      Matrix rhs(f, R.mdim(), R.mdim());
      int total_pb = tuple_parity_sum(A, bt);
      int suffix = total_pb;
      for (size_t i = 0; i < size_t(A.n); ++i) {
        int pbi = A.parities[size_t(bt[i])];
        suffix -= pbi;  // sum of parities after slot i
        int e = int(size_t(A.n) - i - 1) + pa * (total_pb - pbi) + (pbi + A.alpha) * suffix +
                A.alpha * pa;
        Tuple bminus;
        for (size_t j = 0; j < size_t(A.n); ++j)
          if (j != i) bminus.push_back(bt[j]);
        Tuple abi = at;
        abi.push_back(bt[i]);
        rhs = rhs.add(
            rho_basis(R, bminus).mul(rho_basis(R, abi)).scale(sign_scalar(f, (e & 1) ? -1 : 1)));
      }
      if (!(lhs == rhs)) {
        rep.bracket_ok = false;
        rep.witnesses.push_back({"bracket", at, bt, "bracket compatibility relation fails"});
      }
    });
  });
  return rep;
}

NLieSuperalgebra semidirect_sum(const Representation& R) {
  RepValidation v = validate_representation(R);
  if (!v.ok())
    throw Error(Err::InvalidRepresentation,
                "defining relations fail (" + v.witnesses.front().relation + ")");
  const NLieSuperalgebra& A = R.algebra;
  size_t d = A.dim(), m = R.mdim();
  std::vector<std::pair<std::string, int>> basis;
  std::set<std::string> used(A.names.begin(), A.names.end());
  for (size_t i = 0; i < d; ++i) basis.push_back({A.names[i], A.parities[i]});
  for (size_t j = 0; j < m; ++j) {
    std::string nm = R.module_names[j];
    while (used.count(nm)) nm += "_v";
    used.insert(nm);
    basis.push_back({nm, R.module_parities[j]});
  }
  NLieSuperalgebra B = make_algebra(A.field, A.n, A.alpha, basis);
  for_each_canonical(int(d), A.n, [&](const Tuple& t, size_t rank) {
    if (A.entry_is_zero(rank)) return;
    const Vec& v0 = A.value(rank);
    Vec w = zero_vec(A.field, d + m);
    for (size_t i = 0; i < d; ++i) w[i] = v0[i];
    B.set_entry(t, w);
  });
  for_each_canonical(int(d), A.n - 1, [&](const Tuple& t, size_t rank) {
    const Matrix& M = R.table[rank];
    for (size_t j = 0; j < m; ++j) {
      Vec w = zero_vec(A.field, d + m);
      bool nonzero = false;
      for (size_t r = 0; r < m; ++r) {
        w[d + r] = M.at(r, j);
        nonzero = nonzero || !M.at(r, j).is_zero();
      }
      if (!nonzero) continue;
      Tuple full = t;
      full.push_back(int(d + j));
      B.set_entry(full, w);
    }
  });
  return B;
}

namespace {

/* Homogeneous basis of a graded subspace sorted by leading full coordinate, so
 * coordinate subspaces keep their original order. */
struct PositionedBasis {
  std::vector<Vec> vecs;
  std::vector<int> parities;
  std::vector<size_t> perm;  // positioned index -> gs_basis index
};

PositionedBasis positioned(const GradedSubspace& S, const ParityLayout& layout) {
  auto rows = gs_basis(S, layout);
  std::vector<size_t> order(rows.size());
  std::iota(order.begin(), order.end(), size_t(0));
  auto leading = [&](size_t i) {
    const Vec& v = rows[i].first;
    for (size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) return k;
    return v.size();
  };
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return leading(a) < leading(b); });
  PositionedBasis pb;
  for (size_t i : order) {
    pb.vecs.push_back(rows[i].first);
    pb.parities.push_back(rows[i].second);
    pb.perm.push_back(i);
  }
  return pb;
}

Vec positioned_coords(const GradedSubspace& S, const ParityLayout& layout,
                      const PositionedBasis& pb, const Vec& w, const char* what) {
  auto c = gs_coords(S, layout, w);
  if (!c) throw Error(Err::Internal, std::string("bracket value escapes the ") + what + " part");
  Vec out(pb.perm.size(), Scalar::zero(w.empty() ? Field{} : w[0].field()));
  for (size_t i = 0; i < pb.perm.size(); ++i) out[i] = (*c)[pb.perm[i]];
  return out;
}

}  // namespace

Representation representation_from_module(const NLieSuperalgebra& B, const GradedSubspace& apart,
                                          const GradedSubspace& vpart) {
  if (apart.ambient() != B.gdims() || vpart.ambient() != B.gdims())
    throw Error(Err::AmbientMismatch, "decomposition parts live in a different ambient space");
  if (!is_subalgebra(B, apart))
    throw Error(Err::BadDecomposition, "algebra part is not a subalgebra");
  if (!is_abelian_ideal(B, vpart))
    throw Error(Err::BadDecomposition, "module part is not an abelian ideal");
  if (apart.dim() + vpart.dim() != B.dim() || !gs_intersect(apart, vpart).is_zero())
    throw Error(Err::BadDecomposition, "parts do not form a direct sum");

  PositionedBasis ab = positioned(apart, B.layout);
  PositionedBasis vb = positioned(vpart, B.layout);
  size_t da = ab.vecs.size(), mv = vb.vecs.size();

  std::vector<std::pair<std::string, int>> names;
  for (size_t i = 0; i < da; ++i) names.push_back({"a" + std::to_string(i), ab.parities[i]});
  NLieSuperalgebra A = make_algebra(B.field, B.n, B.alpha, names);
  for_each_canonical(int(da), B.n, [&](const Tuple& t, size_t) {
    std::vector<Vec> args;
    for (int j : t) args.push_back(ab.vecs[size_t(j)]);
    A.set_entry(t, positioned_coords(apart, B.layout, ab, bracket_eval(B, args), "algebra"));
  });

  Representation R;
  R.algebra = std::move(A);
  for (size_t j = 0; j < mv; ++j) {
    R.module_names.push_back("v" + std::to_string(j));
    R.module_parities.push_back(vb.parities[j]);
  }
  R.module_layout = ParityLayout::from(R.module_parities);
  R.idx = TupleIndexer(int(da), B.n - 1);
  for_each_canonical(int(da), B.n - 1, [&](const Tuple& t, size_t) {
    Matrix M(B.field, mv, mv);
    for (size_t j = 0; j < mv; ++j) {
      std::vector<Vec> args;
      for (int k : t) args.push_back(ab.vecs[size_t(k)]);
      args.push_back(vb.vecs[j]);
      Vec c = positioned_coords(vpart, B.layout, vb, bracket_eval(B, args), "module");
      for (size_t r = 0; r < mv; ++r) M.at(r, j) = c[r];
    }
    R.table.push_back(std::move(M));
  });
  return R;
}

KernelReport kernel_and_faithful(const Representation& R) {
  const NLieSuperalgebra& A = R.algebra;
  Field f = A.field;
  size_t d = A.dim(), m = R.mdim(), n2 = size_t(A.n) - 2;
  GradedDims gd = A.gdims();
  std::vector<Tuple> tuples;
  for_each_canonical(int(d), int(n2), [&](const Tuple& t, size_t) { tuples.push_back(t); });
  Matrix parts[2];
  for (int par = 0; par < 2; ++par) {
    size_t c = par == 0 ? gd.d0 : gd.d1;
    Matrix K(f, tuples.size() * m * m, c);
    for (size_t k = 0; k < c; ++k) {
      Vec unit = zero_vec(f, c);
      unit[k] = Scalar::one(f);
      Vec x = A.layout.embed(unit, par, f);
      for (size_t ti = 0; ti < tuples.size(); ++ti) {
        Tuple slotted = tuples[ti];
        slotted.push_back(0);
        Matrix M = rho_slot(R, slotted, n2, x);
        for (size_t r = 0; r < m; ++r)
          for (size_t s = 0; s < m; ++s) K.at(ti * m * m + r * m + s, k) = M.at(r, s);
      }
    }
    parts[par] = kernel(K);
  }
  KernelReport out;
  out.kernel = GradedSubspace{parts[0], parts[1]};
  out.faithful = out.kernel.is_zero();
  return out;
}

SRhoReport s_star_rho_check(const Representation& R, const GradedSubspace& S,
                            const Budget& budget) {
  const NLieSuperalgebra& A = R.algebra;
  if (S.ambient() != A.gdims())
    throw Error(Err::AmbientMismatch, "S lives in a different ambient space");
  if (!is_subalgebra(A, S)) throw Error(Err::NotHMC, "S is not closed under the bracket");

  SRhoReport rep;
  size_t n1 = size_t(A.n) - 1, m = R.mdim();
  auto sbasis = gs_basis(S, A.layout);

  std::vector<Matrix> gens;  // operators of basis multisets span every rho(S-tuple)
  {
    std::vector<size_t> pick(n1, 0);
    if (!sbasis.empty()) {
      for (;;) {
        std::vector<Vec> args;
        for (size_t i = 0; i < n1; ++i) args.push_back(sbasis[pick[i]].first);
        gens.push_back(rho_eval(R, args));
        int k = int(n1) - 1;
        while (k >= 0 && pick[size_t(k)] == sbasis.size() - 1) --k;
        if (k < 0) break;
        size_t v = pick[size_t(k)] + 1;
        for (size_t j = size_t(k); j < n1; ++j) pick[j] = v;
      }
    }
  }
  rep.envelope = envelope_nilpotency(A.field, m, gens);

  std::vector<Vec> pts;
  rep.exhaustive = false;
  if (A.field.finite()) {
    BigInt cnt = 0;
    for (const Matrix* part : {&S.even, &S.odd})
      if (part->rows > 0)
        cnt += (boost::multiprecision::pow(BigInt(A.field.p), unsigned(part->rows)) - 1) /
               (A.field.p - 1);
    BigInt num = 1, den = 1;
    for (size_t i = 0; i < n1; ++i) {
      num *= cnt + BigInt(i);
      den *= BigInt(i + 1);
    }
    if (num / den <= BigInt(budget.max_tuples)) {
      rep.exhaustive = true;
      for (int par = 0; par < 2; ++par)
        for_each_projective(par == 0 ? S.even : S.odd, [&](const Vec& compact) {
          pts.push_back(A.layout.embed(compact, par, A.field));
          return true;
        });
    }
  }
  if (!rep.exhaustive)
    for (const auto& [vec, par] : sbasis) {
      (void)par;
      pts.push_back(vec);
    }

  rep.operators_nilpotent = Tri::yes;
  if (!pts.empty()) {
    std::vector<size_t> pick(n1, 0);
    for (;;) {
      std::vector<Vec> args;
      for (size_t i = 0; i < n1; ++i) args.push_back(pts[pick[i]]);
      ++rep.tuple_count;
      if (!matrix_nilpotent(rho_eval(R, args))) {
        rep.operators_nilpotent = Tri::no;
        rep.witness = args;
        break;
      }
      int k = int(n1) - 1;
      while (k >= 0 && pick[size_t(k)] == pts.size() - 1) --k;
      if (k < 0) break;
      size_t v = pick[size_t(k)] + 1;
      for (size_t j = size_t(k); j < n1; ++j) pick[j] = v;
    }
  }
  if (rep.operators_nilpotent == Tri::yes && !rep.exhaustive) {
    // the operators scanned span every rho(S-tuple), so a nilpotent envelope
    // still settles the question over the rationals
    rep.operators_nilpotent = rep.envelope.nilpotent ? Tri::yes : Tri::unknown;
  }

  rep.faithful = kernel_and_faithful(R).faithful;
  if (rep.faithful) rep.span_nilpotent = subalgebra_class(A, S).has_value();
  return rep;
}

}  // namespace nsla
