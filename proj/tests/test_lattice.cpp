#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/catalog.hpp"
#include "core/lattice.hpp"

using namespace nsla;

namespace {
Vec e(const NLieSuperalgebra& A, size_t i) {
  Vec v = zero_vec(A.field, A.dim());
  v[i] = Scalar::one(A.field);
  return v;
}

GradedSubspace span(const NLieSuperalgebra& A, std::initializer_list<size_t> idxs) {
  std::vector<Vec> vs;
  for (size_t i : idxs) vs.push_back(e(A, i));
  return gs_from_vectors(A.field, A.layout, vs);
}

template <class F>
Err thrown(F&& fn) {
  try {
    fn();
  } catch (const Error& e2) {
    return e2.code;
  }
  FAIL("expected an Error");
  return Err::Internal;
}
}  // namespace

TEST_CASE("subspace enumeration is deterministic and complete") {
  NLieSuperalgebra A = act3(field_prime(3));
  Budget b;
  auto s1 = enumerate_graded_subspaces(A, b);
  auto s2 = enumerate_graded_subspaces(A, b);
  REQUIRE(s1.size() == 12);  // (subspaces of F3^2) x (subspaces of F3^1) = 6 * 2
  for (size_t i = 0; i < s1.size(); ++i) CHECK(s1[i].key() == s2[i].key());

  // every pair distinct
  for (size_t i = 0; i < s1.size(); ++i)
    for (size_t j = i + 1; j < s1.size(); ++j) CHECK(!(s1[i] == s1[j]));

  Budget tiny;
  tiny.max_subspaces = 3;
  CHECK(thrown([&] { enumerate_graded_subspaces(A, tiny); }) == Err::BudgetExceeded);
  CHECK(thrown([&] { enumerate_graded_subspaces(act3(field_rational()), b); }) ==
        Err::FiniteFieldRequired);
}

TEST_CASE("lattice catalog of the smallest non-nilpotent specimen") {
  NLieSuperalgebra A = act3(field_prime(3));
  Budget b;
  LatticeCatalog cat = build_lattice(A, b);
  CHECK(cat.items.size() == 12);
  CHECK(cat.subalgebras.size() == 12);  // every graded subspace happens to be closed
  CHECK(cat.ideals.size() == 7);        // zero and the six containing y
  CHECK(cat.maximal_subalgebras.size() == 5);
  CHECK(cat.maximal_ideals.size() == 4);

  CHECK(cat.frattini.is_zero());
  CHECK(cat.frattini_ideal.is_zero());
  CHECK(cat.jacobson == span(A, {2}));

  // flags agree with the predicates
  for (auto& it : cat.items) {
    CHECK(it.subalgebra == is_subalgebra(A, it.space));
    CHECK(it.ideal == is_ideal(A, it.space));
    CHECK(it.weak_ideal == is_weak_ideal(A, it.space));
    CHECK(it.abelian_ideal == is_abelian_ideal(A, it.space));
    if (it.subalgebra) CHECK(it.subinvariant == is_subinvariant(A, it.space));
  }
}

TEST_CASE("lattice catalog of the two-generator tower") {
  NLieSuperalgebra B = paper_bc(4, field_prime(3));
  Budget bud;
  LatticeCatalog cat = build_lattice(B, bud);
  CHECK(cat.items.size() == 4);
  CHECK(cat.subalgebras.size() == 3);  // the odd line alone is not closed
  GradedSubspace c = span(B, {1});
  CHECK(cat.frattini == c);
  CHECK(cat.frattini_ideal == c);
  CHECK(cat.jacobson == c);
}

TEST_CASE("lattice counts of the simple quaternary specimen") {
  Budget bud;
  NLieSuperalgebra V3 = vector_product(3, field_prime(3));
  LatticeCatalog c3 = build_lattice(V3, bud);
  CHECK(c3.items.size() == 212);
  CHECK(c3.subalgebras.size() == 188);
  CHECK(c3.ideals.size() == 2);  // zero and the whole algebra only
  CHECK(c3.maximal_subalgebras.size() == 34);
  CHECK(c3.frattini.is_zero());
  CHECK(c3.jacobson.is_zero());

  NLieSuperalgebra V5 = vector_product(3, field_prime(5));
  LatticeCatalog c5 = build_lattice(V5, bud);
  CHECK(c5.items.size() == 1120);
  CHECK(c5.subalgebras.size() == 1000);
  CHECK(c5.ideals.size() == 2);
  CHECK(c5.maximal_subalgebras.size() == 236);
  CHECK(c5.frattini.is_zero());
  CHECK(c5.jacobson.is_zero());
}

TEST_CASE("normalizers against the definition") {
  NLieSuperalgebra A = act3(field_prime(3));
  Budget b;
  LatticeCatalog cat = build_lattice(A, b);
  GradedSubspace full = gs_full(A.field, A.gdims());

  for (auto& it : cat.items) {
    const GradedSubspace& M = it.space;
    // brute force: homogeneous x with [x, M, A] <= M, spanned
    auto mbas = gs_basis(M, A.layout);
    std::vector<Vec> good;
    auto try_vec = [&](const Vec& x) {
      for (auto& [m, mp] : mbas)
        for (size_t j = 0; j < A.dim(); ++j) {
          Vec val = bracket_eval(A, {x, m, e(A, j)});
          if (!M.contains_vec(A.layout, val)) return;
        }
      good.push_back(x);
    };
    // all nonzero even vectors (9 - 1 over two coordinates) and odd vectors
    for (int a = 0; a < 3; ++a)
      for (int c = 0; c < 3; ++c) {
        if (a == 0 && c == 0) continue;
        Vec x = zero_vec(A.field, 3);
        x[0] = Scalar::from_int(A.field, a);
        x[1] = Scalar::from_int(A.field, c);
        try_vec(x);
      }
    for (int c = 1; c < 3; ++c) {
      Vec x = zero_vec(A.field, 3);
      x[2] = Scalar::from_int(A.field, c);
      try_vec(x);
    }
    GradedSubspace oracle = gs_from_vectors(A.field, A.layout, good);
    CHECK(normalizer(A, M) == oracle);
  }

  // the normalizer of an ideal is everything
  CHECK(normalizer(A, span(A, {2})) == full);
  // the even plane is not even inside its own normalizer: [x1,x2,y] = y escapes
  CHECK(normalizer(A, span(A, {0, 1})).is_zero());
  CHECK(normalizer(A, span(A, {0})) == span(A, {0}));
}

TEST_CASE("normal closures agree with the lattice oracle") {
  Budget b;
  for (Field f : {field_prime(3), field_prime(5)}) {
    for (int which = 0; which < 3; ++which) {
      NLieSuperalgebra A = which == 0   ? act3(f)
                           : which == 1 ? paper_bc(4, f)
                                        : vector_product(3, f);
      if (which == 2 && f.p == 5) continue;  // covered by the acceptance run
      LatticeCatalog cat = build_lattice(A, b);
      for (auto& it : cat.items) {
        GradedSubspace nc = normal_closure(A, it.space);
        CHECK(is_ideal(A, nc));
        CHECK(nc.contains(it.space));
        CHECK(nc == smallest_ideal_containing(A, it.space, cat));
      }
    }
  }

  NLieSuperalgebra A = act3(field_prime(3));
  CHECK(normal_closure(A, span(A, {0, 1})) == gs_full(A.field, A.gdims()));
  CHECK(normal_closure(A, span(A, {2})) == span(A, {2}));
  CHECK(normal_closure_in(A, span(A, {0, 2}), span(A, {0})) == span(A, {0}));
}

TEST_CASE("generated subalgebras") {
  NLieSuperalgebra A = act3(field_prime(3));
  CHECK(generated_subalgebra(A, {vec_add(e(A, 0), e(A, 2))}) == span(A, {0, 2}));
  CHECK(generated_subalgebra(A, {e(A, 0), e(A, 1)}) == span(A, {0, 1}));
  CHECK(generated_subalgebra(A, {}).is_zero());

  // in the simple specimen three generators close up to everything
  NLieSuperalgebra V = vector_product(3, field_prime(3));
  GradedSubspace g =
      generated_subalgebra(V, {e(V, 0), e(V, 1), e(V, 2)});
  CHECK(g == gs_full(V.field, V.gdims()));
}

TEST_CASE("subinvariance fast path equals chain search") {
  Budget b;
  for (Field f : {field_prime(3), field_prime(5)}) {
    NLieSuperalgebra A = act3(f);
    LatticeCatalog cat = build_lattice(A, b);
    for (size_t i : cat.subalgebras) {
      bool fast = is_subinvariant(A, cat.items[i].space);
      bool slow = is_subinvariant_exhaustive(A, cat.items[i].space, cat);
      CHECK(fast == slow);
    }
  }

  NLieSuperalgebra A = act3(field_prime(3));
  CHECK(is_subinvariant(A, span(A, {0})));       // x1 < {x1,y} < A
  CHECK(!is_subinvariant(A, span(A, {0, 1})));   // its closure is everything
  CHECK(is_subinvariant(A, span(A, {2})));
  CHECK(is_subinvariant(A, gs_full(A.field, A.gdims())));
  CHECK(is_subinvariant_in(A, span(A, {0, 2}), span(A, {0})));
}

TEST_CASE("invariance numbers") {
  Budget b;
  NLieSuperalgebra A = act3(field_prime(3));
  LatticeCatalog cat = build_lattice(A, b);
  InvarianceReport rA = invariance_number(A, cat, b);
  CHECK(rA.v == 2);
  CHECK(rA.chain.size() == 3);
  CHECK(rA.chain.front() == gs_full(A.field, A.gdims()));
  for (size_t i = 1; i < rA.chain.size(); ++i) {
    CHECK(rA.chain[i - 1].contains(rA.chain[i]));
    CHECK(rA.chain[i].dim() < rA.chain[i - 1].dim());
  }

  InvarianceReport rU = invariance_number_within(A, span(A, {0, 2}), cat, b);
  CHECK(rU.v == 1);
  InvarianceReport rz = invariance_number_within(A, gs_zero(A.field, A.gdims()), cat, b);
  CHECK(rz.v == 0);

  NLieSuperalgebra B = paper_bc(4, field_prime(3));
  LatticeCatalog catB = build_lattice(B, b);
  CHECK(invariance_number(B, catB, b).v == 1);

  NLieSuperalgebra V = vector_product(3, field_prime(3));
  LatticeCatalog catV = build_lattice(V, b);
  InvarianceReport rV = invariance_number(V, catV, b);
  CHECK(rV.v == 4);
  CHECK(rV.chain.size() == 5);
}

TEST_CASE("subalgebra dichotomy verdicts") {
  Budget b;
  NLieSuperalgebra A = act3(field_prime(3));
  LatticeCatalog catA = build_lattice(A, b);
  SStarReport sA = is_s_star(A, catA, b);
  CHECK(sA.verdict == Tri::yes);
  CHECK(!sA.violator.has_value());

  NLieSuperalgebra B = paper_bc(4, field_prime(3));
  LatticeCatalog catB = build_lattice(B, b);
  CHECK(is_s_star(B, catB, b).verdict == Tri::yes);

  NLieSuperalgebra V = vector_product(3, field_prime(3));
  LatticeCatalog catV = build_lattice(V, b);
  SStarReport sV = is_s_star(V, catV, b);
  CHECK(sV.verdict == Tri::no);
  REQUIRE(sV.violator.has_value());
  CHECK(sV.violator->dim() == 4);  // the algebra itself: perfect, not nilpotent
}

TEST_CASE("smallest nilpotent subalgebra with full closure") {
  Budget b;
  NLieSuperalgebra A = act3(field_prime(3));
  LatticeCatalog cat = build_lattice(A, b);
  auto s = full_closure_nilpotent_subalgebra(A, cat);
  REQUIRE(s.has_value());
  CHECK(s->dim() == 2);
  CHECK(s->ambient() == GradedDims{2, 1});
  CHECK(s->even.rows == 2);
  CHECK(s->odd.rows == 0);
  CHECK(normal_closure(A, *s) == gs_full(A.field, A.gdims()));

  // nilpotent algebras have no proper candidate but the algebra itself works
  NLieSuperalgebra B = paper_bc(4, field_prime(3));
  LatticeCatalog catB = build_lattice(B, b);
  auto sB = full_closure_nilpotent_subalgebra(B, catB);
  REQUIRE(sB.has_value());
  CHECK(normal_closure(B, *sB) == gs_full(B.field, B.gdims()));
}
