#include "core/catalog.hpp"

#include <set>

#include "core/algebra.hpp"

namespace nsla {

NLieSuperalgebra paper_bc(int n, Field f) {
  if (n % 2 != 0)
    throw Error(Err::ParityObstruction,
                "[b,...,b] = c needs even arity: the value parity n*p(b) must be even");
  NLieSuperalgebra A = make_algebra(f, n, 0, {{"b", 1}, {"c", 0}});
  Vec c = zero_vec(f, 2);
  c[1] = Scalar::one(f);
  A.set_entry(Tuple(size_t(n), 0), c);
  return A;
}

NLieSuperalgebra abelian_algebra(size_t d0, size_t d1, int n, int alpha, Field f) {
  std::vector<std::pair<std::string, int>> basis;
  for (size_t i = 0; i < d0 + d1; ++i)
    basis.push_back({"e" + std::to_string(i), i < d0 ? 0 : 1});
  return make_algebra(f, n, alpha, basis);
}

NLieSuperalgebra act3(Field f) {
  NLieSuperalgebra A = make_algebra(f, 3, 0, {{"x1", 0}, {"x2", 0}, {"y", 1}});
  Vec y = zero_vec(f, 3);
  y[2] = Scalar::one(f);
  A.set_entry({0, 1, 2}, y);
  return A;
}

NLieSuperalgebra vector_product(int n, Field f) {
  size_t d = size_t(n) + 1;
  std::vector<std::pair<std::string, int>> basis;
  for (size_t i = 0; i < d; ++i) basis.push_back({"e" + std::to_string(i + 1), 0});
  NLieSuperalgebra A = make_algebra(f, n, 0, basis);
  for (size_t i = 0; i < d; ++i) {
    Tuple t;
    for (size_t j = 0; j < d; ++j)
      if (j != i) t.push_back(int(j));
    Vec v = zero_vec(f, d);
    v[i] = (i + 1) % 2 == 0 ? Scalar::one(f) : -Scalar::one(f);
    A.set_entry(t, v);
  }
  return A;
}

NLieSuperalgebra direct_sum(const NLieSuperalgebra& A, const NLieSuperalgebra& B) {
  if (!(A.field == B.field) || A.n != B.n || A.alpha != B.alpha)
    throw Error(Err::IncompatibleAlgebras, "summands must share field, arity and alpha");
  std::vector<std::pair<std::string, int>> basis;
  std::set<std::string> used(A.names.begin(), A.names.end());
  for (size_t i = 0; i < A.dim(); ++i) basis.push_back({A.names[i], A.parities[i]});
  for (size_t j = 0; j < B.dim(); ++j) {
    std::string nm = B.names[j];
    while (used.count(nm)) nm += "_2";
    used.insert(nm);
    basis.push_back({nm, B.parities[j]});
  }
  NLieSuperalgebra S = make_algebra(A.field, A.n, A.alpha, basis);
  size_t off = A.dim();
  for_each_canonical(int(A.dim()), A.n, [&](const Tuple& t, size_t rank) {
    if (A.entry_is_zero(rank)) return;
    Vec w = zero_vec(A.field, S.dim());
    const Vec& v = A.value(rank);
    for (size_t i = 0; i < A.dim(); ++i) w[i] = v[i];
    S.set_entry(t, w);
  });
  for_each_canonical(int(B.dim()), B.n, [&](const Tuple& t, size_t rank) {
    if (B.entry_is_zero(rank)) return;
    Vec w = zero_vec(A.field, S.dim());
    const Vec& v = B.value(rank);
    for (size_t i = 0; i < B.dim(); ++i) w[off + i] = v[i];
    Tuple shifted = t;
    for (int& x : shifted) x += int(off);
    S.set_entry(shifted, w);
  });
  return S;
}

NLieSuperalgebra build_catalog(const std::string& name, const std::vector<long long>& params,
                               Field f) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw Error(Err::Parse, name + " takes " + std::to_string(k) + " parameter(s), got " +
                                  std::to_string(params.size()));
  };
  if (name == "paper_bc") {
    want(1);
    return paper_bc(int(params[0]), f);
  }
  if (name == "abelian") {
    want(4);
    if (params[0] < 0 || params[1] < 0)
      throw Error(Err::Parse, "abelian dimensions must be nonnegative");
    return abelian_algebra(size_t(params[0]), size_t(params[1]), int(params[2]), int(params[3]),
                           f);
  }
  if (name == "act3") {
    want(0);
    return act3(f);
  }
  if (name == "vector_product") {
    want(1);
    return vector_product(int(params[0]), f);
  }
  throw Error(Err::Parse, "unknown catalog name: " + name);
}

std::vector<std::string> catalog_names() {
  return {"paper_bc", "abelian", "act3", "vector_product"};
}

EnumerationStats brute_force_enumerate(
    size_t d0, size_t d1, int n, uint32_t p, const Budget& budget,
    const std::function<void(const NLieSuperalgebra&, uint64_t)>& emit) {
  Field f = field_prime(p);
  NLieSuperalgebra proto = abelian_algebra(d0, d1, n, 0, f);
  size_t d = proto.dim();

  // free coefficient slots: (canonical tuple, target basis index)
  struct Slot {
    Tuple t;
    size_t target;
  };
  std::vector<Slot> slots;
  for_each_canonical(int(d), n, [&](const Tuple& t, size_t) {
    if (!f.char2()) {
      for (size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] == t[i] && proto.parities[size_t(t[i])] == 0) return;
    }
    int vp = proto.alpha;
    for (int j : t) vp += proto.parities[size_t(j)];
    for (size_t k = 0; k < d; ++k)
      if (proto.parities[k] == (vp & 1)) slots.push_back({t, k});
  });

  EnumerationStats stats;
  stats.constants = slots.size();
  BigInt total = boost::multiprecision::pow(BigInt(p), unsigned(slots.size()));
  if (total > BigInt(budget.max_assignments))
    throw Error(Err::BudgetExceeded, "enumeration needs " + total.str() +
                                         " assignments; budget allows " +
                                         std::to_string(budget.max_assignments));

  std::vector<uint64_t> val(slots.size(), 0);
  for (;;) {
    NLieSuperalgebra A = abelian_algebra(d0, d1, n, 0, f);
    for (size_t i = 0; i < slots.size(); ++i) {
      if (!val[i]) continue;
      Vec v = A.entry_is_zero(A.idx.rank(slots[i].t)) ? zero_vec(f, d)
                                                      : A.value(A.idx.rank(slots[i].t));
      v[slots[i].target] = Scalar::from_residue(f, val[i]);
      A.set_entry(slots[i].t, v);
    }
    if (validate_algebra(A).ok()) {
      emit(A, stats.assignments);
      ++stats.valid;
    }
    ++stats.assignments;
    size_t k = slots.size();
    while (k > 0) {
      if (++val[k - 1] < p) break;
      val[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return stats;
}

}  // namespace nsla
