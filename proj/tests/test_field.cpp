#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/field.hpp"

using namespace nsla;

namespace {
template <class F>
Err thrown(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code;
  }
  FAIL("expected an Error");
  return Err::Internal;
}
}  // namespace

TEST_CASE("field constructors") {
  Field q = field_rational();
  CHECK(q.rational());
  CHECK(!q.finite());
  CHECK(q.str() == "Q");

  Field f5 = field_prime(5);
  CHECK(f5.finite());
  CHECK(!f5.char2());
  CHECK(f5.str() == "F5");
  CHECK(field_prime(2).char2());

  CHECK(thrown([] { field_prime(4); }) == Err::BadField);
  CHECK(thrown([] { field_prime(1); }) == Err::BadField);
  CHECK(thrown([] { field_prime(0); }) == Err::BadField);
}

TEST_CASE("prime field arithmetic is exact") {
  Field f = field_prime(7);
  Scalar a = Scalar::from_int(f, 3), b = Scalar::from_int(f, 5);
  CHECK((a + b).residue() == 1);
  CHECK((a - b).residue() == 5);
  CHECK((a * b).residue() == 1);
  CHECK((a / b).residue() == 2);  // 2*5 = 10 = 3
  CHECK((-a).residue() == 4);
  CHECK(a.inv().residue() == 5);
  CHECK((a * a.inv()).is_one());

  CHECK(Scalar::from_int(f, -1).residue() == 6);
  CHECK(Scalar::from_int(f, 14).is_zero());
  CHECK(Scalar::from_residue(f, 6).residue() == 6);
  CHECK(Scalar::zero(f).is_zero());
  CHECK(Scalar::one(f).is_one());

  // every nonzero residue has an exact inverse
  for (uint64_t r = 1; r < 7; ++r) {
    Scalar x = Scalar::from_residue(f, r);
    CHECK((x * x.inv()).is_one());
  }
}

TEST_CASE("rational arithmetic is exact") {
  Field q = field_rational();
  Scalar third = Scalar::parse(q, "1/3");
  Scalar sum = third + third + third;
  CHECK(sum.is_one());

  Scalar a = Scalar::parse(q, "2/3"), b = Scalar::parse(q, "3/2");
  CHECK((a * b).is_one());
  CHECK((a - a).is_zero());
  CHECK((a / b).rat() == BigRat(4, 9));
  CHECK((-a).rat() == BigRat(-2, 3));

  // accumulate and undo without drift
  Scalar acc = Scalar::zero(q);
  Scalar step = Scalar::parse(q, "1/7");
  for (int i = 0; i < 70; ++i) acc = acc + step;
  CHECK(acc.rat() == BigRat(10));
  for (int i = 0; i < 70; ++i) acc = acc - step;
  CHECK(acc.is_zero());
}

TEST_CASE("parsing and printing") {
  Field q = field_rational();
  CHECK(Scalar::parse(q, "-3").rat() == BigRat(-3));
  CHECK(Scalar::parse(q, "4").str() == "4");
  CHECK(Scalar::parse(q, "2/7").str() == "2/7");
  CHECK(Scalar::parse(q, "-2/4").rat() == BigRat(-1, 2));

  Field f5 = field_prime(5);
  CHECK(Scalar::parse(f5, "7").residue() == 2);
  CHECK(Scalar::parse(f5, "-1").residue() == 4);
  CHECK(Scalar::parse(f5, "2/3").residue() == 4);  // 2 * 3^{-1} = 2*2
  CHECK(Scalar::parse(f5, "3").str() == "3");

  CHECK(thrown([&] { Scalar::parse(q, "x"); }) == Err::Parse);
  CHECK(thrown([&] { Scalar::parse(q, ""); }) == Err::Parse);
  CHECK(thrown([&] { Scalar::parse(q, "1/0"); }) == Err::DivisionByZero);
  CHECK(thrown([&] { Scalar::parse(f5, "1/5"); }) == Err::DivisionByZero);
}

TEST_CASE("error cases") {
  Field q = field_rational(), f5 = field_prime(5);
  Scalar a = Scalar::one(q), b = Scalar::one(f5);
  CHECK(thrown([&] { (void)(a + b); }) == Err::FieldMismatch);
  CHECK(a != b);  // cross-field comparison is unequal, not an error
  CHECK(thrown([&] { (void)(b / Scalar::zero(f5)); }) == Err::DivisionByZero);
  CHECK(thrown([&] { (void)Scalar::zero(q).inv(); }) == Err::DivisionByZero);
  CHECK(thrown([&] { (void)Scalar::from_residue(q, 1); }) == Err::BadField);
  CHECK(!Scalar::from_rat(BigRat(1)).field().finite());
}

TEST_CASE("vector helpers") {
  Field f = field_prime(3);
  Vec z = zero_vec(f, 3);
  CHECK(vec_is_zero(z));
  Vec v = z;
  v[1] = Scalar::one(f);
  CHECK(!vec_is_zero(v));

  Vec w = vec_add(v, v);
  CHECK(w[1].residue() == 2);
  CHECK(vec_is_zero(vec_sub(v, v)));
  CHECK(vec_is_zero(vec_add(w, v)));  // 3v = 0

  Vec s = vec_scale(Scalar::from_int(f, 2), v);
  CHECK(s == w);
  Vec acc = zero_vec(f, 3);
  vec_add_scaled(acc, Scalar::from_int(f, 2), v);
  CHECK(acc == w);
}
