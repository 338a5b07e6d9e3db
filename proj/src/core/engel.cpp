#include "core/engel.hpp"

#include <random>

namespace nsla {

namespace {

Vec basis_vec(const NLieSuperalgebra& A, int j) {
  Vec e = zero_vec(A.field, A.dim());
  e[size_t(j)] = Scalar::one(A.field);
  return e;
}

/* Multisets of projective points, (s + n1 - 1 choose n1) of them. */
std::optional<BigInt> exhaustive_tuple_count(const NLieSuperalgebra& A, size_t n1) {
  if (!A.field.finite()) return std::nullopt;
  BigInt s =
      (boost::multiprecision::pow(BigInt(A.field.p), unsigned(A.dim())) - 1) / (A.field.p - 1);
  BigInt num = 1, den = 1;
  for (size_t i = 0; i < n1; ++i) {
    num *= s + BigInt(i);
    den *= BigInt(i + 1);
  }
  return num / den;
}

/* Drive fn over (n-1)-tuples until it returns false. Returns true when the
 * pass was exhaustive: every tuple of field elements is a scaled permutation
 * of a visited one (fn's property must be invariant under both, and must hold
 * automatically when a slot is zero). Non-exhaustive mode visits canonical
 * basis tuples, then budget.samples seeded random tuples. */
bool scan_tuples(const NLieSuperalgebra& A, const Budget& budget, uint64_t& count,
                 const std::function<bool(const std::vector<Vec>&)>& fn) {
  size_t n1 = size_t(A.n) - 1;
  auto total = exhaustive_tuple_count(A, n1);
  if (total && *total <= BigInt(budget.max_tuples)) {
    std::vector<Vec> pts;
    for_each_projective(Matrix::identity(A.field, A.dim()), [&](const Vec& v) {
      pts.push_back(v);
      return true;
    });
    std::vector<size_t> pick(n1, 0);
    std::vector<Vec> args(n1);
    for (;;) {
      for (size_t i = 0; i < n1; ++i) args[i] = pts[pick[i]];
      ++count;
      if (!fn(args)) return true;
      int k = int(n1) - 1;
      while (k >= 0 && pick[size_t(k)] == pts.size() - 1) --k;
      if (k < 0) break;
      size_t v = pick[size_t(k)] + 1;
      for (size_t j = size_t(k); j < n1; ++j) pick[j] = v;
    }
    return true;
  }
  bool stopped = false;
  for_each_canonical(int(A.dim()), int(n1), [&](const Tuple& t, size_t) {
    if (stopped) return;
    std::vector<Vec> args;
    for (int j : t) args.push_back(basis_vec(A, j));
    ++count;
    if (!fn(args)) stopped = true;
  });
  if (stopped) return false;
  std::mt19937_64 rng(budget.seed);
  for (uint64_t smp = 0; smp < budget.samples; ++smp) {
    std::vector<Vec> args(n1);
    for (Vec& v : args) {
      v = zero_vec(A.field, A.dim());
      for (Scalar& x : v)
        x = A.field.finite() ? Scalar::from_residue(A.field, rng() % A.field.p)
                             : Scalar::from_int(A.field, int64_t(rng() % 7) - 3);
    }
    ++count;
    if (!fn(args)) return false;
  }
  return false;
}

}  // namespace

EngelReport engel_scan(const NLieSuperalgebra& A, const Budget& budget) {
  EngelReport rep;
  if (A.dim() == 0) {
    rep.exhaustive = true;
    rep.verdict = Tri::yes;
    return rep;
  }
  rep.exhaustive = scan_tuples(A, budget, rep.tuple_count, [&](const std::vector<Vec>& args) {
    Matrix D = left_mult(A, args).m;
    if (matrix_nilpotent(D)) return true;
    rep.verdict = Tri::no;
    rep.witness = args;
    rep.witness_operator = std::move(D);
    return false;
  });
  if (rep.verdict != Tri::no) rep.verdict = rep.exhaustive ? Tri::yes : Tri::unknown;
  return rep;
}

GradedSubspace fitting_zero_component(const NLieSuperalgebra& A, const std::vector<Vec>& tuple) {
  if (tuple.size() + 1 != size_t(A.n))
    throw Error(Err::ArityMismatch, "left multiplication takes n-1 arguments");
  LinearOperator D = left_mult(A, tuple);
  if (D.parity < 0)
    throw Error(Err::HypothesisNotMet, "Fitting components need a homogeneous tuple");
  return fitting_components(D.m, A.layout).zero_part;
}

bool in_fitting_zero(const NLieSuperalgebra& A, const std::vector<Vec>& tuple, const Vec& x) {
  Matrix P = left_mult(A, tuple).m.pow(A.dim());
  return vec_is_zero(P.apply(x));
}

StarReport condition_star(const NLieSuperalgebra& A, const LatticeCatalog& cat) {
  StarReport rep;
  GradedSubspace a2 = derived_subspace(A);
  GradedSubspace full = gs_full(A.field, A.gdims());
  for (size_t i : cat.subalgebras) {
    const GradedSubspace& K = cat.items[i].space;
    if (K.dim() == full.dim()) continue;
    if (gs_sum(K, a2) == full) {
      rep.verdict = Tri::no;
      rep.witness = K;
      return rep;
    }
  }
  rep.verdict = Tri::yes;
  return rep;
}

StarStarReport condition_star_star(const NLieSuperalgebra& A, const Budget& budget) {
  StarStarReport rep;
  if (A.dim() == 0 || (A.gdims().d1 == 0 && !A.field.char2())) {
    // A repeated even argument kills the bracket away from characteristic 2,
    // so every slot of every tuple lies in the kernel of its own operator.
    rep.exhaustive = true;
    rep.verdict = Tri::yes;
    return rep;
  }
  rep.exhaustive = scan_tuples(A, budget, rep.tuple_count, [&](const std::vector<Vec>& args) {
    Matrix P = left_mult(A, args).m.pow(A.dim());
    for (const Vec& a : args)
      if (vec_is_zero(P.apply(a))) return true;
    rep.verdict = Tri::no;
    rep.witness = args;
    return false;
  });
  if (rep.verdict != Tri::no) rep.verdict = rep.exhaustive ? Tri::yes : Tri::unknown;
  return rep;
}

}  // namespace nsla
