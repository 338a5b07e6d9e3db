#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/catalog.hpp"
#include "core/represent.hpp"

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

std::pair<GradedSubspace, GradedSubspace> split_parts(const NLieSuperalgebra& B, size_t adim) {
  std::vector<Vec> av, vv;
  for (size_t i = 0; i < B.dim(); ++i) {
    Vec u = zero_vec(B.field, B.dim());
    u[i] = Scalar::one(B.field);
    (i < adim ? av : vv).push_back(u);
  }
  return {gs_from_vectors(B.field, B.layout, av), gs_from_vectors(B.field, B.layout, vv)};
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

TEST_CASE("regular representations satisfy the defining relations") {
  for (Field f : {field_prime(3), field_prime(5), field_rational()}) {
    for (int which = 0; which < 4; ++which) {
      NLieSuperalgebra A = which == 0   ? act3(f)
                           : which == 1 ? paper_bc(4, f)
                           : which == 2 ? vector_product(3, f)
                                        : abelian_algebra(2, 1, 3, 0, f);
      Representation R = regular_representation(A);
      CHECK(R.mdim() == A.dim());
      CHECK(validate_representation(R).ok());
    }
  }
}

TEST_CASE("operator lookup follows the sign rules") {
  NLieSuperalgebra A = act3(field_prime(5));
  Representation R = regular_representation(A);
  Matrix fwd = rho_basis(R, {0, 1});
  Matrix bwd = rho_basis(R, {1, 0});
  CHECK(bwd == fwd.scale(Scalar::from_int(A.field, -1)));
  CHECK(rho_basis(R, {0, 0}).is_zero());  // repeated even index

  // rho agrees with the left multiplication of the regular action
  CHECK(fwd == left_mult_basis(A, {0, 1}).m);
  CHECK(rho_eval(R, {e(A, 0), e(A, 1)}) == fwd);

  Vec u = vec_add(e(A, 0), vec_scale(Scalar::from_int(A.field, 2), e(A, 1)));
  Matrix mu = rho_eval(R, {u, e(A, 1)});
  CHECK(mu == rho_eval(R, {e(A, 0), e(A, 1)}));  // the e1 component drops out
}

TEST_CASE("corrupted representations are rejected with a witness") {
  NLieSuperalgebra A = act3(field_prime(3));
  Representation R = regular_representation(A);

  // scaling one operator breaks the algebra-compatibility relations
  Representation bad = R;
  size_t r01 = R.idx.rank({0, 1});
  bad.table[r01] = bad.table[r01].scale(Scalar::from_int(A.field, 2));
  RepValidation v = validate_representation(bad);
  CHECK(!v.ok());
  CHECK(!v.witnesses.empty());

  // an operator entry crossing the grading trips the parity relation
  Representation odd = R;
  odd.table[r01].at(2, 0) = Scalar::one(A.field);  // even op sending even -> odd
  RepValidation vp = validate_representation(odd);
  CHECK(!vp.parity_ok);
  bool seen = false;
  for (auto& w : vp.witnesses) seen = seen || w.relation == "parity";
  CHECK(seen);

  // a canonical slot with a repeated even index must store zero
  Representation st = R;
  size_t r00 = R.idx.rank({0, 0});
  st.table[r00] = Matrix::identity(A.field, 3);
  RepValidation vs = validate_representation(st);
  CHECK(!vs.storage_ok);
}

TEST_CASE("zero representation and semidirect extension") {
  NLieSuperalgebra A = act3(field_prime(3));
  Representation Z = zero_representation(A, GradedDims{1, 1});
  CHECK(validate_representation(Z).ok());
  NLieSuperalgebra B = semidirect_sum(Z);
  CHECK(B.dim() == 5);
  CHECK(validate_algebra(B).ok());
}

TEST_CASE("semidirect sum of the regular action") {
  for (Field f : {field_prime(3), field_rational()}) {
    NLieSuperalgebra A = paper_bc(4, f);
    Representation R = regular_representation(A);
    NLieSuperalgebra B = semidirect_sum(R);
    CHECK(B.dim() == 4);
    CHECK(B.gdims() == GradedDims{2, 2});
    CHECK(validate_algebra(B).ok());

    auto [apart, vpart] = split_parts(B, A.dim());
    CHECK(is_subalgebra(B, apart));
    CHECK(is_ideal(B, vpart));
    CHECK(is_abelian_ideal(B, vpart));

    // the module copy reproduces the action: [b, b, b, v_b] = rho(b,b,b) v_b
    Vec val = bracket_eval(B, {e(B, 0), e(B, 0), e(B, 0), e(B, 2)});
    Vec expect = zero_vec(B.field, 4);
    expect[3] = Scalar::one(B.field);  // [b,b,b,b] = c in the module copy
    CHECK(val == expect);
  }
}

TEST_CASE("reading the action back off the extension is exact") {
  for (Field f : {field_prime(3), field_prime(5)}) {
    for (int which = 0; which < 3; ++which) {
      NLieSuperalgebra A = which == 0   ? act3(f)
                           : which == 1 ? paper_bc(4, f)
                                        : vector_product(3, f);
      Representation R = regular_representation(A);
      NLieSuperalgebra B = semidirect_sum(R);
      auto [apart, vpart] = split_parts(B, A.dim());
      Representation R2 = representation_from_module(B, apart, vpart);
      CHECK(R2.table == R.table);
      CHECK(R2.algebra.n == A.n);
      CHECK(R2.algebra.parities == A.parities);
      for (size_t r = 0; r < A.idx.size(); ++r) {
        bool za = A.entry_is_zero(r), zb = R2.algebra.entry_is_zero(r);
        CHECK(za == zb);
        if (!za && !zb) CHECK(A.value(r) == R2.algebra.value(r));
      }
    }
  }
}

TEST_CASE("bad decompositions are rejected") {
  NLieSuperalgebra A = act3(field_prime(3));
  Representation R = regular_representation(A);
  NLieSuperalgebra B = semidirect_sum(R);
  auto [apart, vpart] = split_parts(B, A.dim());

  // swapped roles: the algebra part is not abelian, so it cannot be the module
  CHECK(thrown([&] { representation_from_module(B, vpart, apart); }) == Err::BadDecomposition);
  // overlapping parts do not form a direct sum
  CHECK(thrown([&] { representation_from_module(B, apart, apart); }) == Err::BadDecomposition);
  // undersized parts miss coordinates
  CHECK(thrown([&] {
          representation_from_module(B, apart, gs_zero(B.field, B.gdims()));
        }) == Err::BadDecomposition);
}

TEST_CASE("kernels and faithfulness") {
  NLieSuperalgebra B = paper_bc(4, field_prime(3));
  KernelReport kb = kernel_and_faithful(regular_representation(B));
  CHECK(!kb.faithful);
  CHECK(kb.kernel.dim() == 1);
  CHECK(kb.kernel.contains_vec(B.layout, e(B, 1)));  // c acts trivially
  CHECK(is_ideal(B, kb.kernel));

  NLieSuperalgebra A = act3(field_prime(3));
  KernelReport ka = kernel_and_faithful(regular_representation(A));
  CHECK(ka.faithful);
  CHECK(ka.kernel.is_zero());
}

TEST_CASE("operator nilpotency over a bracket-closed subspace") {
  Budget b;
  NLieSuperalgebra A = act3(field_prime(3));
  Representation R = regular_representation(A);

  SRhoReport bad = s_star_rho_check(R, span(A, {0, 1}), b);
  CHECK(bad.exhaustive);
  CHECK(bad.operators_nilpotent == Tri::no);
  REQUIRE(bad.witness.size() == 2);
  CHECK(!matrix_nilpotent(rho_eval(R, bad.witness)));

  SRhoReport good = s_star_rho_check(R, span(A, {2}), b);
  CHECK(good.exhaustive);
  CHECK(good.operators_nilpotent == Tri::yes);
  CHECK(good.envelope.nilpotent);
  CHECK(good.faithful);
  REQUIRE(good.span_nilpotent.has_value());
  CHECK(*good.span_nilpotent);

  SRhoReport whole = s_star_rho_check(R, gs_full(A.field, A.gdims()), b);
  CHECK(whole.operators_nilpotent == Tri::no);

  NLieSuperalgebra V = vector_product(3, field_prime(3));
  Representation RV = regular_representation(V);
  GradedSubspace open3 = gs_from_vectors(V.field, V.layout, {e(V, 0), e(V, 1), e(V, 2)});
  CHECK(thrown([&] { s_star_rho_check(RV, open3, b); }) == Err::NotHMC);
}
