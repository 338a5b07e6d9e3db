#include "core/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace nsla {

namespace {

BigInt subspace_count(uint32_t p, size_t d) {
  BigInt total = 0;
  for (size_t k = 0; k <= d; ++k) {
    BigInt num = 1, den = 1;
    for (size_t i = 0; i < k; ++i) {
      num *= boost::multiprecision::pow(BigInt(p), unsigned(d - i)) - 1;
      den *= boost::multiprecision::pow(BigInt(p), unsigned(i + 1)) - 1;
    }
    total += num / den;
  }
  return total;
}

/* All RREF bases over F_p in F^d: dimension ascending, pivot-column sets in
 * lexicographic order, free entries filled by a lexicographic odometer. The
 * output matrices coincide with row_space() of themselves, so spans produced
 * elsewhere compare equal to these syntactically. */
std::vector<Matrix> all_rref_bases(Field f, size_t d) {
  std::vector<Matrix> out;
  out.push_back(Matrix(f, 0, d));
  for (size_t k = 1; k <= d; ++k) {
    std::vector<size_t> piv(k);
    for (size_t i = 0; i < k; ++i) piv[i] = i;
    for (;;) {
      std::vector<std::pair<size_t, size_t>> free_pos;
      for (size_t i = 0; i < k; ++i)
        for (size_t j = piv[i] + 1; j < d; ++j) {
          bool is_pivot = false;
          for (size_t t = 0; t < k; ++t)
            if (piv[t] == j) { is_pivot = true; break; }
          if (!is_pivot) free_pos.push_back({i, j});
        }
      std::vector<uint64_t> val(free_pos.size(), 0);
      for (;;) {
        Matrix m(f, k, d);
        for (size_t i = 0; i < k; ++i) m.at(i, piv[i]) = Scalar::one(f);
        for (size_t t = 0; t < free_pos.size(); ++t)
          if (val[t]) m.at(free_pos[t].first, free_pos[t].second) = Scalar::from_residue(f, val[t]);
        out.push_back(std::move(m));
        size_t t = val.size();
        while (t > 0) {
          if (++val[t - 1] < f.p) break;
          val[t - 1] = 0;
          --t;
        }
        if (t == 0) break;
      }
      bool advanced = false;
      for (size_t i = k; i-- > 0;) {
        if (piv[i] < d - k + i) {
          ++piv[i];
          for (size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return out;
}

std::vector<std::vector<int>> canonical_tuples(size_t d, size_t len) {
  std::vector<std::vector<int>> out;
  if (len == 0) {
    out.push_back({});
    return out;
  }
  for_each_canonical(int(d), int(len),
                     [&](const std::vector<int>& t, size_t) { out.push_back(t); });
  return out;
}

}  // namespace

std::vector<GradedSubspace> enumerate_graded_subspaces(const NLieSuperalgebra& A,
                                                       const Budget& budget) {
  if (!A.field.finite())
    throw Error(Err::FiniteFieldRequired, "subspace enumeration needs a finite field");
  GradedDims gd = A.gdims();
  BigInt total = subspace_count(A.field.p, gd.d0) * subspace_count(A.field.p, gd.d1);
  if (total > BigInt(budget.max_subspaces))
    throw Error(Err::BudgetExceeded, "ambient space has " + total.str() +
                                         " graded subspaces; budget allows " +
                                         std::to_string(budget.max_subspaces));
  std::vector<Matrix> even = all_rref_bases(A.field, gd.d0);
  std::vector<Matrix> odd = all_rref_bases(A.field, gd.d1);
  std::vector<GradedSubspace> out;
  out.reserve(even.size() * odd.size());
  for (const Matrix& e : even)
    for (const Matrix& o : odd) out.push_back(GradedSubspace{e, o});
  return out;
}

LatticeCatalog build_lattice(const NLieSuperalgebra& A, const Budget& budget) {
  LatticeCatalog cat;
  GradedDims gd = A.gdims();
  size_t full_dim = gd.total();
  for (GradedSubspace& s : enumerate_graded_subspaces(A, budget)) {
    SubspaceInfo info;
    info.space = std::move(s);
    info.subalgebra = is_subalgebra(A, info.space);
    info.ideal = is_ideal(A, info.space);
    info.weak_ideal = is_weak_ideal(A, info.space);
    if (info.ideal) {
      std::vector<GradedSubspace> fs(A.n, gs_full(A.field, gd));
      fs[A.n - 1] = info.space;
      fs[A.n - 2] = info.space;
      info.abelian_ideal = product_space(A, fs).is_zero();
    }
    cat.items.push_back(std::move(info));
  }
  for (size_t i = 0; i < cat.items.size(); ++i) {
    if (cat.items[i].subalgebra) cat.subalgebras.push_back(i);
    if (cat.items[i].ideal) cat.ideals.push_back(i);
  }
  auto mark_maximal = [&](const std::vector<size_t>& idxs, auto flag) {
    std::vector<size_t> maximal;
    for (size_t i : idxs) {
      const GradedSubspace& x = cat.items[i].space;
      if (x.dim() == full_dim) continue;
      bool is_max = true;
      for (size_t j : idxs) {
        const GradedSubspace& z = cat.items[j].space;
        if (z.dim() <= x.dim() || z.dim() == full_dim) continue;
        if (z.contains(x)) { is_max = false; break; }
      }
      if (is_max) {
        maximal.push_back(i);
        cat.items[i].*flag = true;
      }
    }
    return maximal;
  };
  cat.maximal_subalgebras = mark_maximal(cat.subalgebras, &SubspaceInfo::maximal_subalgebra);
  cat.maximal_ideals = mark_maximal(cat.ideals, &SubspaceInfo::maximal_ideal);
  for (size_t i : cat.subalgebras)
    cat.items[i].subinvariant = is_subinvariant(A, cat.items[i].space);

  cat.frattini = gs_full(A.field, gd);
  for (size_t i : cat.maximal_subalgebras)
    cat.frattini = gs_intersect(cat.frattini, cat.items[i].space);
  cat.frattini_ideal = gs_zero(A.field, gd);
  for (size_t i : cat.ideals)
    if (cat.frattini.contains(cat.items[i].space))
      cat.frattini_ideal = gs_sum(cat.frattini_ideal, cat.items[i].space);
  cat.jacobson = gs_full(A.field, gd);
  for (size_t i : cat.maximal_ideals)
    cat.jacobson = gs_intersect(cat.jacobson, cat.items[i].space);
  return cat;
}

GradedSubspace generated_subalgebra(const NLieSuperalgebra& A, const std::vector<Vec>& gens) {
  GradedSubspace cur = gs_from_vectors(A.field, A.layout, gens);
  for (;;) {
    GradedSubspace next = gs_sum(cur, product_space(A, std::vector<GradedSubspace>(A.n, cur)));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

GradedSubspace normal_closure(const NLieSuperalgebra& A, const GradedSubspace& S) {
  return normal_closure_in(A, gs_full(A.field, A.gdims()), S);
}

GradedSubspace normal_closure_in(const NLieSuperalgebra& A, const GradedSubspace& X,
                                 const GradedSubspace& S) {
  GradedSubspace cur = S;
  for (;;) {
    std::vector<GradedSubspace> fs(A.n, X);
    fs[A.n - 1] = cur;
    GradedSubspace next = gs_sum(cur, product_space(A, fs));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

GradedSubspace smallest_ideal_containing(const NLieSuperalgebra& A, const GradedSubspace& S,
                                         const LatticeCatalog& cat) {
  GradedSubspace out = gs_full(A.field, A.gdims());
  for (size_t i : cat.ideals)
    if (cat.items[i].space.contains(S)) out = gs_intersect(out, cat.items[i].space);
  return out;
}

GradedSubspace normalizer(const NLieSuperalgebra& A, const GradedSubspace& M) {
  GradedDims gd = A.gdims();
  auto mbasis = gs_basis(M, A.layout);
  auto tuples = canonical_tuples(A.dim(), A.n - 2);
  Matrix parts[2];
  for (int par = 0; par < 2; ++par) {
    size_t c = par == 0 ? gd.d0 : gd.d1;
    std::vector<Matrix> blocks;
    for (const auto& [mvec, mpar] : mbasis) {
      (void)mpar;
      for (const auto& tup : tuples) {
        Matrix block(A.field, A.dim(), c);
        for (size_t k = 0; k < c; ++k) {
          Vec unit = zero_vec(A.field, c);
          unit[k] = Scalar::one(A.field);
          std::vector<Vec> args;
          args.push_back(A.layout.embed(unit, par, A.field));
          args.push_back(mvec);
          for (int j : tup) {
            Vec e = zero_vec(A.field, A.dim());
            e[size_t(j)] = Scalar::one(A.field);
            args.push_back(std::move(e));
          }
          Vec w = bracket_eval(A, args);
          auto [we, wo] = A.layout.split(w);
          we = reduce_mod_rows(M.even, std::move(we));
          wo = reduce_mod_rows(M.odd, std::move(wo));
          Vec r = vec_add(A.layout.embed(we, 0, A.field), A.layout.embed(wo, 1, A.field));
          for (size_t i = 0; i < A.dim(); ++i) block.at(i, k) = r[i];
        }
        blocks.push_back(std::move(block));
      }
    }
    Matrix stacked(A.field, 0, c);
    size_t rows = 0;
    for (const Matrix& b : blocks) rows += b.rows;
    stacked = Matrix(A.field, rows, c);
    size_t at = 0;
    for (const Matrix& b : blocks) {
      for (size_t i = 0; i < b.rows; ++i)
        for (size_t j = 0; j < c; ++j) stacked.at(at + i, j) = b.at(i, j);
      at += b.rows;
    }
    parts[par] = kernel(stacked);
  }
  return GradedSubspace{parts[0], parts[1]};
}

bool is_subinvariant_in(const NLieSuperalgebra& A, const GradedSubspace& X,
                        const GradedSubspace& T) {
  if (!X.contains(T)) return false;
  GradedSubspace cur = X;
  for (;;) {
    if (cur == T) return true;
    GradedSubspace next = normal_closure_in(A, cur, T);
    if (next == cur) return false;
    cur = std::move(next);
  }
}

bool is_subinvariant(const NLieSuperalgebra& A, const GradedSubspace& T) {
  return is_subinvariant_in(A, gs_full(A.field, A.gdims()), T);
}

bool is_subinvariant_exhaustive(const NLieSuperalgebra& A, const GradedSubspace& T,
                                const LatticeCatalog& cat) {
  std::map<std::string, bool> memo;
  std::function<bool(const GradedSubspace&)> reach = [&](const GradedSubspace& X) -> bool {
    if (X == T) return true;
    auto it = memo.find(X.key());
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (size_t i : cat.subalgebras) {
      const GradedSubspace& Y = cat.items[i].space;
      if (Y.dim() >= X.dim() || !X.contains(Y) || !Y.contains(T)) continue;
      std::vector<GradedSubspace> fs(A.n, X);
      fs[A.n - 1] = Y;
      if (!Y.contains(product_space(A, fs))) continue;
      if (reach(Y)) { ok = true; break; }
    }
    memo[X.key()] = ok;
    return ok;
  };
  return reach(gs_full(A.field, A.gdims()));
}

InvarianceReport invariance_number_within(const NLieSuperalgebra& A, const GradedSubspace& U,
                                          const LatticeCatalog& cat, const Budget& budget) {
  InvarianceReport rep;
  if (U.is_zero()) return rep;
  std::vector<size_t> subs;  // catalog indices of subalgebras inside U
  size_t upos = SIZE_MAX;
  for (size_t i : cat.subalgebras)
    if (U.contains(cat.items[i].space)) {
      if (cat.items[i].space == U) upos = subs.size();
      subs.push_back(i);
    }
  if (upos == SIZE_MAX)
    throw Error(Err::Internal, "chain start is not a catalog subalgebra");
  size_t cnt = subs.size(), words = (cnt + 63) / 64;
  auto bit = [&](std::vector<uint64_t>& row, size_t j) { row[j >> 6] |= uint64_t(1) << (j & 63); };
  // leq[i] holds the set {j : space_j <= space_i}; geq[j] the transpose
  std::vector<std::vector<uint64_t>> leq(cnt, std::vector<uint64_t>(words, 0)), geq = leq;
  for (size_t i = 0; i < cnt; ++i)
    for (size_t j = 0; j < cnt; ++j)
      if (cat.items[subs[i]].space.contains(cat.items[subs[j]].space)) {
        bit(leq[i], j);
        bit(geq[j], i);
      }
  std::vector<std::vector<size_t>> max_in(cnt);
  std::vector<bool> max_in_done(cnt, false);
  auto maximals_in = [&](size_t wi) -> const std::vector<size_t>& {
    if (max_in_done[wi]) return max_in[wi];
    max_in_done[wi] = true;
    for (size_t xi = 0; xi < cnt; ++xi) {
      if (xi == wi || !(leq[wi][xi >> 6] >> (xi & 63) & 1)) continue;
      // strictly between = below W and above X, other than the two themselves
      bool strict = false;
      for (size_t w = 0; w < words && !strict; ++w) {
        uint64_t between = leq[wi][w] & geq[xi][w];
        if (w == (xi >> 6)) between &= ~(uint64_t(1) << (xi & 63));
        if (w == (wi >> 6)) between &= ~(uint64_t(1) << (wi & 63));
        strict = between != 0;
      }
      if (!strict) max_in[wi].push_back(xi);
    }
    return max_in[wi];
  };
  std::vector<int> subinv(cnt, -1);
  auto subinvariant_in_u = [&](size_t xi) {
    if (subinv[xi] < 0)
      subinv[xi] = is_subinvariant_in(A, U, cat.items[subs[xi]].space) ? 1 : 0;
    return subinv[xi] == 1;
  };

  std::vector<size_t> chain{upos};
  uint64_t visited = 0;
  size_t true_count = 0;
  std::function<void(size_t)> walk = [&](size_t wi) {
    for (size_t xi : maximals_in(wi)) {
      if (++visited > budget.max_tuples)
        throw Error(Err::BudgetExceeded, "maximal-chain enumeration exceeded the tuple budget");
      bool f = subinvariant_in_u(xi);
      chain.push_back(xi);
      true_count += f ? 1 : 0;
      size_t k = chain.size() - 1;
      size_t s = true_count - (f ? 1 : 0);  // the chain's last member does not count
      size_t v = s != 0 ? k - s : k;
      if (v > rep.v) {
        rep.v = v;
        rep.chain.clear();
        for (size_t ci : chain) rep.chain.push_back(cat.items[subs[ci]].space);
      }
      walk(xi);
      true_count -= f ? 1 : 0;
      chain.pop_back();
    }
  };
  walk(upos);
  return rep;
}

InvarianceReport invariance_number(const NLieSuperalgebra& A, const LatticeCatalog& cat,
                                   const Budget& budget) {
  return invariance_number_within(A, gs_full(A.field, A.gdims()), cat, budget);
}

namespace {

/* Is H generated (as a subalgebra of A) by a single homogeneous element?
 * Finite fields: exhaustive over projective homogeneous vectors of H.
 * Rationals: basis vectors only; a miss is inconclusive. */
Tri one_generated(const NLieSuperalgebra& A, const GradedSubspace& H) {
  bool hit = false;
  auto try_vec = [&](const Vec& full) {
    if (generated_subalgebra(A, {full}) == H) { hit = true; return false; }
    return true;
  };
  if (A.field.finite()) {
    for (int par = 0; par < 2 && !hit; ++par) {
      const Matrix& rows = par == 0 ? H.even : H.odd;
      for_each_projective(rows, [&](const Vec& compact) {
        return try_vec(A.layout.embed(compact, par, A.field));
      });
    }
    return hit ? Tri::yes : Tri::no;
  }
  for (const auto& [vec, par] : gs_basis(H, A.layout)) {
    (void)par;
    if (!try_vec(vec)) break;
  }
  return hit ? Tri::yes : Tri::unknown;
}

}  // namespace

SStarReport is_s_star(const NLieSuperalgebra& A, const LatticeCatalog& cat,
                      const Budget& budget) {
  (void)budget;
  SStarReport out;
  out.verdict = Tri::yes;
  for (size_t i : cat.subalgebras) {
    const GradedSubspace& H = cat.items[i].space;
    GradedSubspace h2 = product_space(A, std::vector<GradedSubspace>(A.n, H));
    if (h2.is_zero()) continue;  // abelian
    if (H.dim() - h2.dim() >= 2) continue;
    if (!subalgebra_class(A, H).has_value()) {
      out.verdict = Tri::no;
      out.violator = H;
      out.note = "non-abelian, dim(H/H^2) < 2, and not nilpotent";
      return out;
    }
    Tri gen = one_generated(A, H);
    if (gen == Tri::yes) continue;
    if (gen == Tri::no) {
      out.verdict = Tri::no;
      out.violator = H;
      out.note = "nilpotent with dim(H/H^2) < 2 but not generated by one homogeneous element";
      return out;
    }
    if (out.verdict != Tri::unknown) {
      out.verdict = Tri::unknown;
      out.violator = H;
      out.note = "one-generator search over the rationals is inconclusive";
    }
  }
  return out;
}

std::optional<GradedSubspace> full_closure_nilpotent_subalgebra(const NLieSuperalgebra& A,
                                                                const LatticeCatalog& cat) {
  GradedSubspace full = gs_full(A.field, A.gdims());
  std::vector<size_t> order = cat.subalgebras;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return cat.items[a].space.dim() < cat.items[b].space.dim();
  });
  for (size_t i : order) {
    const GradedSubspace& N = cat.items[i].space;
    if (N.is_zero()) continue;
    if (!subalgebra_class(A, N).has_value()) continue;
    if (normal_closure(A, N) == full) return N;
  }
  return std::nullopt;
}

}  // namespace nsla
