#include "core/series.hpp"

#include <algorithm>
#include <set>

namespace nsla {

GradedSubspace product_space(const NLieSuperalgebra& A,
                             const std::vector<GradedSubspace>& factors) {
  if (factors.size() != (size_t)A.n)
    throw Error(Err::ArityMismatch, "product_space needs exactly n factors");
  for (const auto& f : factors)
    if (f.ambient() != A.gdims()) throw Error(Err::AmbientMismatch, "factor ambient mismatch");

  std::vector<std::vector<Vec>> bases(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    for (auto& [v, par] : gs_basis(factors[i], A.layout)) bases[i].push_back(v);
    if (bases[i].empty()) return gs_zero(A.field, A.gdims());
  }

  std::vector<Vec> rows;
  std::vector<size_t> pick(factors.size(), 0);
  std::vector<Vec> args(factors.size());
  for (;;) {
    for (size_t i = 0; i < pick.size(); ++i) args[i] = bases[i][pick[i]];
    Vec w = bracket_eval(A, args);
    if (!vec_is_zero(w)) rows.push_back(w);
    size_t i = pick.size();
    while (i > 0) {
      if (++pick[i - 1] < bases[i - 1].size()) break;
      pick[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return gs_from_vectors(A.field, A.layout, rows);
}

GradedSubspace derived_subspace(const NLieSuperalgebra& A) {
  return product_space(A, std::vector<GradedSubspace>(A.n, gs_full(A.field, A.gdims())));
}

bool is_subalgebra(const NLieSuperalgebra& A, const GradedSubspace& U) {
  return U.contains(product_space(A, std::vector<GradedSubspace>(A.n, U)));
}

bool is_ideal(const NLieSuperalgebra& A, const GradedSubspace& I) {
  std::vector<GradedSubspace> fs(A.n, gs_full(A.field, A.gdims()));
  fs.back() = I;
  return I.contains(product_space(A, fs));
}

bool is_weak_ideal(const NLieSuperalgebra& A, const GradedSubspace& I) {
  std::vector<GradedSubspace> fs(A.n, I);
  fs.front() = gs_full(A.field, A.gdims());
  return I.contains(product_space(A, fs));
}

bool is_abelian_ideal(const NLieSuperalgebra& A, const GradedSubspace& I) {
  if (!is_ideal(A, I)) return false;
  std::vector<GradedSubspace> fs(A.n, gs_full(A.field, A.gdims()));
  fs[A.n - 1] = I;
  fs[A.n - 2] = I;
  return product_space(A, fs).is_zero();
}

/* Iterate term -> step(term) until zero, a fixed point, or a cycle. */
static SeriesReport iterate_series(
    std::string kind, GradedSubspace first,
    const std::function<GradedSubspace(const GradedSubspace&)>& step) {
  SeriesReport rep;
  rep.kind = std::move(kind);
  rep.terms.push_back(std::move(first));
  std::set<std::string> seen{rep.terms.back().key()};
  size_t cap = 64 + 4 * rep.terms.back().ambient().total();
  while (!rep.terms.back().is_zero()) {
    GradedSubspace next = step(rep.terms.back());
    if (!seen.insert(next.key()).second) return rep;  // stabilized nonzero
    rep.terms.push_back(std::move(next));
    if (rep.terms.size() > cap) throw Error(Err::Internal, "series did not stabilize");
  }
  rep.reaches_zero = true;
  return rep;
}

SeriesReport ideal_power_series(const NLieSuperalgebra& A, const GradedSubspace& I,
                                bool allow_nonideal) {
  if (!allow_nonideal && !is_ideal(A, I))
    throw Error(Err::NotAnIdeal, "ideal power series of a non-ideal");
  GradedSubspace full = gs_full(A.field, A.gdims());
  return iterate_series("ideal_power", I, [&](const GradedSubspace& cur) {
    std::vector<GradedSubspace> fs((size_t)A.n, full);
    fs[A.n - 2] = I;
    fs[A.n - 1] = cur;
    return product_space(A, fs);
  });
}

SeriesReport lower_central_series(const NLieSuperalgebra& A, const GradedSubspace& U) {
  if (!is_subalgebra(A, U))
    throw Error(Err::NotASubalgebra, "lower central series of a non-subalgebra");
  return iterate_series("lower_central", U, [&](const GradedSubspace& cur) {
    std::vector<GradedSubspace> fs((size_t)A.n, U);
    fs[A.n - 1] = cur;
    return product_space(A, fs);
  });
}

SeriesReport derived_series(const NLieSuperalgebra& A, const GradedSubspace& I, size_t k) {
  if (k < 2 || k > (size_t)A.n)
    throw Error(Err::BadArity, "derived series order must be between 2 and n");
  GradedSubspace full = gs_full(A.field, A.gdims());
  auto rep = iterate_series("derived_" + std::to_string(k), I, [&](const GradedSubspace& cur) {
    std::vector<GradedSubspace> fs((size_t)A.n, full);
    for (size_t i = 0; i < k; ++i) fs[i] = cur;
    return product_space(A, fs);
  });
  return rep;
}

std::optional<size_t> nilpotency_class(const NLieSuperalgebra& A) {
  return subalgebra_class(A, gs_full(A.field, A.gdims()));
}

std::optional<size_t> subalgebra_class(const NLieSuperalgebra& A, const GradedSubspace& U) {
  SeriesReport rep = lower_central_series(A, U);
  if (!rep.reaches_zero) return std::nullopt;
  return rep.terms.size() - 1;
}

bool is_k_solvable(const NLieSuperalgebra& A, size_t k) {
  return derived_series(A, gs_full(A.field, A.gdims()), k).reaches_zero;
}

/* N^i read off a computed ideal-power report, extending past the last term. */
static GradedSubspace nth_term(const SeriesReport& rep, Field f, GradedDims d, size_t i) {
  if (i == 0) throw Error(Err::BadArity, "series terms are indexed from 1");
  if (i <= rep.terms.size()) return rep.terms[i - 1];
  return rep.reaches_zero ? gs_zero(f, d) : rep.terms.back();
}

GradedSubspace mixed_power(const NLieSuperalgebra& A, const GradedSubspace& N,
                           size_t j, size_t i) {
  if (i == 0) throw Error(Err::BadArity, "mixed power needs i >= 1");
  GradedSubspace full = gs_full(A.field, A.gdims());
  GradedSubspace cur = N;
  for (size_t s = 2; s <= i && !cur.is_zero(); ++s) {
    std::vector<GradedSubspace> fs((size_t)A.n, full);
    fs[A.n - 2] = N;
    fs[A.n - 1] = cur;
    cur = product_space(A, fs);
  }
  for (size_t s = 0; s < j && !cur.is_zero(); ++s) {
    std::vector<GradedSubspace> fs((size_t)A.n, full);
    fs[A.n - 1] = cur;
    cur = product_space(A, fs);
  }
  return cur;
}

/* Minimal m with A^{m+1} <= S, read off the lower central series of A. */
static std::optional<size_t> min_power_below(const SeriesReport& lcs, const GradedSubspace& S) {
  for (size_t i = 0; i < lcs.terms.size(); ++i)
    if (S.contains(lcs.terms[i])) return i;
  return std::nullopt;
}

MixedPowerCheck mixed_power_containments(const NLieSuperalgebra& A, const GradedSubspace& N) {
  MixedPowerCheck out;
  if (!is_ideal(A, N)) {
    out.reason = "N is not an ideal";
    return out;
  }
  SeriesReport nser = ideal_power_series(A, N);
  SeriesReport lcs = lower_central_series(A, gs_full(A.field, A.gdims()));
  GradedSubspace n2 = nth_term(nser, A.field, A.gdims(), 2);
  auto m = min_power_below(lcs, n2);
  if (!m) {
    out.reason = "A/N^2 is not nilpotent";
    return out;
  }
  out.applicable = true;
  out.m = *m;
  for (size_t r = 1; r <= nser.terms.size(); ++r) {
    GradedSubspace nr = nth_term(nser, A.field, A.gdims(), r);
    if (nr.is_zero()) break;
    long long uu = (long long)*m +
                   (long long)(r - 1) * (long long)(A.n - 1) * ((long long)*m - 1);
    size_t u = uu < 0 ? 0 : (size_t)uu;
    MixedPowerCheck::Row row;
    row.r = r;
    row.u = u;
    GradedSubspace lhs = mixed_power(A, N, u, r);
    row.holds = nth_term(nser, A.field, A.gdims(), r + 1).contains(lhs);
    out.all_hold = out.all_hold && row.holds;
    out.rows.push_back(row);
  }
  return out;
}

ClassBoundCheck class_bound_check(const NLieSuperalgebra& A, const GradedSubspace& N) {
  ClassBoundCheck out;
  if (!is_ideal(A, N)) {
    out.reason = "N is not an ideal";
    return out;
  }
  if (N.is_zero()) {
    out.reason = "N = 0: the bound needs a nonzero ideal";
    return out;
  }
  SeriesReport nser = ideal_power_series(A, N);
  if (!nser.reaches_zero) {
    out.reason = "N is not a nilpotent ideal";
    return out;
  }
  out.t = nser.terms.size() - 1;
  SeriesReport lcs = lower_central_series(A, gs_full(A.field, A.gdims()));
  auto m = min_power_below(lcs, nth_term(nser, A.field, A.gdims(), 2));
  if (!m) {
    out.reason = "A/N^2 is not nilpotent";
    return out;
  }
  out.applicable = true;
  out.m = *m;
  long long b = (long long)out.t * (long long)out.m +
                (long long)out.t * (long long)(out.t - 1) * ((long long)out.m - 1) *
                    (long long)(A.n - 1) / 2;
  out.bound = b < 0 ? 0 : (size_t)b;
  out.cls = lcs.reaches_zero ? std::optional<size_t>(lcs.terms.size() - 1) : std::nullopt;
  out.holds = out.cls && *out.cls <= out.bound;
  return out;
}

/* Pivot columns of a canonical RREF row basis. */
static std::vector<size_t> pivot_cols(const Matrix& rows) {
  std::vector<size_t> out;
  for (size_t i = 0; i < rows.rows; ++i)
    for (size_t j = 0; j < rows.cols; ++j)
      if (!rows.at(i, j).is_zero()) {
        out.push_back(j);
        break;
      }
  return out;
}

Quotient quotient_algebra(const NLieSuperalgebra& A, const GradedSubspace& I) {
  if (!is_ideal(A, I)) throw Error(Err::NotAnIdeal, "quotient by a non-ideal");
  auto piv_e = pivot_cols(I.even);
  auto piv_o = pivot_cols(I.odd);
  auto is_pivot = [](const std::vector<size_t>& piv, size_t c) {
    for (size_t p : piv)
      if (p == c) return true;
    return false;
  };

  std::vector<size_t> kept;
  for (size_t c = 0; c < A.layout.even_pos.size(); ++c)
    if (!is_pivot(piv_e, c)) kept.push_back(A.layout.even_pos[c]);
  for (size_t c = 0; c < A.layout.odd_pos.size(); ++c)
    if (!is_pivot(piv_o, c)) kept.push_back(A.layout.odd_pos[c]);
  std::sort(kept.begin(), kept.end());

  std::vector<std::pair<std::string, int>> basis;
  for (size_t k : kept) basis.emplace_back(A.names[k], A.parities[k]);
  NLieSuperalgebra Q = make_algebra(A.field, A.n, A.alpha, basis);

  // position of each kept full coordinate inside the quotient coordinate list
  std::vector<int> pos(A.dim(), -1);
  for (size_t i = 0; i < kept.size(); ++i) pos[kept[i]] = (int)i;

  auto project = [&](const Vec& w) {
    auto [we, wo] = A.layout.split(w);
    Vec re = reduce_mod_rows(I.even, we);
    Vec ro = reduce_mod_rows(I.odd, wo);
    Vec full = vec_add(A.layout.embed(re, 0, A.field), A.layout.embed(ro, 1, A.field));
    Vec out = zero_vec(A.field, kept.size());
    for (size_t i = 0; i < A.dim(); ++i)
      if (!full[i].is_zero()) {
        if (pos[i] < 0) throw Error(Err::Internal, "quotient reduction left an ideal component");
        out[pos[i]] = full[i];
      }
    return out;
  };

  for_each_canonical((int)kept.size(), A.n, [&](const Tuple& t, size_t) {
    Tuple full_t(t.size());
    for (size_t i = 0; i < t.size(); ++i) full_t[i] = (int)kept[t[i]];
    Vec w = bracket_basis(A, full_t);
    if (vec_is_zero(w)) return;
    Vec q = project(w);
    if (!vec_is_zero(q)) Q.set_entry(t, q);
  });
  return Quotient{std::move(Q), std::move(kept)};
}

Induced induced_algebra(const NLieSuperalgebra& A, const GradedSubspace& U,
                        const std::string& prefix) {
  if (!is_subalgebra(A, U)) throw Error(Err::NotASubalgebra, "induced algebra of a non-subalgebra");
  auto b = gs_basis(U, A.layout);
  std::vector<std::pair<std::string, int>> basis;
  std::vector<Vec> vecs;
  for (size_t i = 0; i < b.size(); ++i) {
    basis.emplace_back(prefix + std::to_string(i), b[i].second);
    vecs.push_back(b[i].first);
  }
  NLieSuperalgebra S = make_algebra(A.field, A.n, A.alpha, basis);
  for_each_canonical((int)b.size(), A.n, [&](const Tuple& t, size_t) {
    std::vector<Vec> args;
    for (int i : t) args.push_back(vecs[i]);
    Vec w = bracket_eval(A, args);
    if (vec_is_zero(w)) return;
    auto c = gs_coords(U, A.layout, w);
    if (!c) throw Error(Err::NotASubalgebra, "bracket escapes the subspace");
    if (!vec_is_zero(*c)) S.set_entry(t, *c);
  });
  return Induced{std::move(S), std::move(vecs)};
}

}  // namespace nsla
