#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/catalog.hpp"
#include "core/engel.hpp"

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

TEST_CASE("left multiplications of the non-nilpotent specimen") {
  NLieSuperalgebra A = act3(field_prime(3));
  Budget b;
  EngelReport r = engel_scan(A, b);
  CHECK(r.exhaustive);
  CHECK(r.verdict == Tri::no);
  CHECK(r.tuple_count == 4);  // witness found early in the projective scan
  REQUIRE(r.witness.size() == 2);
  Matrix m = left_mult(A, r.witness).m;
  CHECK(m == r.witness_operator);
  CHECK(!matrix_nilpotent(m));
}

TEST_CASE("left multiplications of nilpotent algebras") {
  Budget b;
  NLieSuperalgebra B = paper_bc(4, field_prime(3));
  EngelReport r = engel_scan(B, b);
  CHECK(r.exhaustive);
  CHECK(r.verdict == Tri::yes);
  CHECK(r.tuple_count == 20);  // multisets of size 3 over 4 projective points
  CHECK(r.witness.empty());

  EngelReport ra = engel_scan(abelian_algebra(2, 1, 3, 0, field_prime(3)), b);
  CHECK(ra.exhaustive);
  CHECK(ra.verdict == Tri::yes);

  EngelReport rv = engel_scan(vector_product(3, field_prime(3)), b);
  CHECK(rv.exhaustive);
  CHECK(rv.verdict == Tri::no);
}

TEST_CASE("scan degrades gracefully outside its exhaustive range") {
  // over the rationals a clean pass proves nothing
  Budget b;
  EngelReport ra = engel_scan(abelian_algebra(1, 1, 3, 0, field_rational()), b);
  CHECK(!ra.exhaustive);
  CHECK(ra.verdict == Tri::unknown);

  // but a witness is still a witness
  EngelReport rw = engel_scan(act3(field_rational()), b);
  CHECK(!rw.exhaustive);
  CHECK(rw.verdict == Tri::no);
  CHECK(!matrix_nilpotent(left_mult(act3(field_rational()), rw.witness).m));

  // a finite field with too small a tuple budget falls back to sampling
  Budget tiny;
  tiny.max_tuples = 2;
  EngelReport rt = engel_scan(act3(field_prime(3)), tiny);
  CHECK(!rt.exhaustive);
  CHECK(rt.verdict == Tri::no);

  EngelReport rz = engel_scan(abelian_algebra(2, 1, 3, 0, field_prime(3)), tiny);
  CHECK(!rz.exhaustive);
  CHECK(rz.verdict == Tri::unknown);
}

TEST_CASE("fitting null components of left multiplications") {
  NLieSuperalgebra A = act3(field_prime(3));
  GradedSubspace z = fitting_zero_component(A, {e(A, 0), e(A, 1)});
  CHECK(z == span(A, {0, 1}));  // D(x1,x2) fixes y and kills the plane

  GradedSubspace zy = fitting_zero_component(A, {e(A, 0), e(A, 2)});
  CHECK(zy == gs_full(A.field, A.gdims()));  // D(x1,y) is nilpotent

  CHECK(thrown([&] { fitting_zero_component(A, {e(A, 0)}); }) == Err::ArityMismatch);
  CHECK(thrown([&] {
          fitting_zero_component(A, {vec_add(e(A, 0), e(A, 2)), e(A, 1)});
        }) == Err::HypothesisNotMet);

  // membership test works even for inhomogeneous tuples
  std::vector<Vec> mixed{vec_add(e(A, 0), e(A, 2)), e(A, 1)};
  CHECK(!in_fitting_zero(A, mixed, e(A, 0)));
  CHECK(in_fitting_zero(A, mixed, e(A, 1)));
}

TEST_CASE("sum condition over the subalgebra catalog") {
  Budget b;
  NLieSuperalgebra A = act3(field_prime(3));
  LatticeCatalog catA = build_lattice(A, b);
  StarReport sA = condition_star(A, catA);
  CHECK(sA.verdict == Tri::no);
  REQUIRE(sA.witness.has_value());
  CHECK(sA.witness->dim() == 2);  // the even plane complements A^2
  CHECK(gs_sum(*sA.witness, derived_subspace(A)) == gs_full(A.field, A.gdims()));

  NLieSuperalgebra B = paper_bc(4, field_prime(3));
  LatticeCatalog catB = build_lattice(B, b);
  StarReport sB = condition_star(B, catB);
  CHECK(sB.verdict == Tri::yes);
  CHECK(!sB.witness.has_value());

  // perfect algebra: A^2 = A, so K = 0 already violates the condition
  NLieSuperalgebra V = vector_product(3, field_prime(3));
  LatticeCatalog catV = build_lattice(V, b);
  CHECK(condition_star(V, catV).verdict == Tri::no);
}

TEST_CASE("null component condition") {
  Budget b;
  NLieSuperalgebra A = act3(field_prime(3));
  StarStarReport r = condition_star_star(A, b);
  CHECK(r.exhaustive);
  CHECK(r.verdict == Tri::yes);
  CHECK(r.witness.empty());

  NLieSuperalgebra B = paper_bc(4, field_prime(3));
  StarStarReport rb = condition_star_star(B, b);
  CHECK(rb.exhaustive);
  CHECK(rb.verdict == Tri::yes);

  // purely even over char != 2: a repeated slot always lies in the null part
  NLieSuperalgebra V = vector_product(3, field_prime(5));
  StarStarReport rv = condition_star_star(V, b);
  CHECK(rv.verdict == Tri::yes);
}
