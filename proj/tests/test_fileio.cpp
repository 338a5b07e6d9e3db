#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <string>

#include "core/catalog.hpp"
#include "core/fileio.hpp"

using namespace nsla;

namespace {
NLieSuperalgebra parse_str(const std::string& s) {
  std::istringstream in(s);
  return parse_algebra(in);
}

std::string parse_failure(const std::string& s) {
  std::istringstream in(s);
  try {
    parse_algebra(in);
  } catch (const Error& e) {
    CHECK(e.code == Err::Parse);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}
}  // namespace

TEST_CASE("serialize and parse are inverse") {
  for (Field f : {field_prime(3), field_prime(5), field_rational()}) {
    for (int which = 0; which < 4; ++which) {
      NLieSuperalgebra A = which == 0   ? act3(f)
                           : which == 1 ? paper_bc(4, f)
                           : which == 2 ? vector_product(3, f)
                                        : abelian_algebra(2, 1, 3, 1, f);
      std::string text = serialize_algebra(A);
      NLieSuperalgebra back = parse_str(text);
      CHECK(back == A);
      CHECK(serialize_algebra(back) == text);  // serialization is canonical
    }
  }
}

TEST_CASE("hand-written input with comments and coefficients") {
  std::string text =
      "# a ternary specimen\n"
      "nsla-v1\n"
      "field Q\n"
      "arity 3\n"
      "alpha 0   # even bracket\n"
      "basis x even\n"
      "basis y even\n"
      "basis z odd\n"
      "\n"
      "bracket x y z = z:2/3\n"
      "bracket x z z = 0\n";
  NLieSuperalgebra A = parse_str(text);
  CHECK(A.dim() == 3);
  CHECK(A.n == 3);
  CHECK(A.field.rational());
  CHECK(A.names == std::vector<std::string>{"x", "y", "z"});
  CHECK(A.parities == std::vector<int>{0, 0, 1});
  Vec v = A.value(A.idx.rank({0, 1, 2}));
  CHECK(v[2].rat() == BigRat(2, 3));
  CHECK(A.entry_is_zero(A.idx.rank({0, 2, 2})));
  CHECK(validate_algebra(A).ok());

  // repeated terms accumulate
  NLieSuperalgebra B = parse_str(
      "nsla-v1\nfield F5\narity 2\nalpha 0\nbasis a even\nbasis b even\n"
      "bracket a b = a:1 a:1 b:3\n");
  Vec w = B.value(B.idx.rank({0, 1}));
  CHECK(w[0].residue() == 2);
  CHECK(w[1].residue() == 3);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_failure("nsla-v1\nfield Q\narity 3\nalpha 0\nbasis x even\n"
                      "bracket x x x = x:bad\n")
            .find("line 6") != std::string::npos);
  CHECK(parse_failure("nsla-v1\nfield Q\narity 3\nalpha 0\nbogus 1\n").find("line 5") !=
        std::string::npos);
  CHECK(parse_failure("nsla-v1\nfield Q\narity 3\nalpha 0\nbasis x even\nbasis x odd\n")
            .find("line 6") != std::string::npos);
  CHECK(parse_failure("nsla-v1\nfield Q\narity 2\nalpha 0\nbasis x even\n"
                      "bracket x q = 0\n")
            .find("unknown") != std::string::npos);
  // non-canonical argument order is rejected, not silently reordered
  CHECK(parse_failure("nsla-v1\nfield Q\narity 2\nalpha 0\nbasis x even\nbasis y even\n"
                      "bracket y x = 0\n")
            .find("line 7") != std::string::npos);
  CHECK(parse_failure("").find("empty") != std::string::npos);
  CHECK(parse_failure("not-a-tag\n").find("format tag") != std::string::npos);
  CHECK(parse_failure("nsla-v1\nfield Q\nalpha 0\n").find("arity") != std::string::npos);
}

TEST_CASE("composite moduli are rejected") {
  std::istringstream in("nsla-v1\nfield F6\narity 2\nalpha 0\n");
  try {
    parse_algebra(in);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code == Err::BadField);  // 6 is not prime
  }
}

TEST_CASE("algebra files round trip through disk") {
  std::string path = "tmp_roundtrip.nsla";
  NLieSuperalgebra A = act3(field_prime(5));
  save_algebra(A, path);
  NLieSuperalgebra back = load_algebra(path);
  CHECK(back == A);
  std::remove(path.c_str());

  try {
    load_algebra("no_such_file.nsla");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code == Err::Parse);
  }
}

TEST_CASE("representation files round trip") {
  for (Field f : {field_prime(3), field_rational()}) {
    Representation R = regular_representation(act3(f));
    std::string text = serialize_representation(R);
    std::istringstream in(text);
    Representation back = parse_representation(in);
    CHECK(back.algebra == R.algebra);
    CHECK(back.module_names == R.module_names);
    CHECK(back.module_parities == R.module_parities);
    REQUIRE(back.table.size() == R.table.size());
    for (size_t i = 0; i < R.table.size(); ++i) CHECK(back.table[i] == R.table[i]);
    CHECK(serialize_representation(back) == text);
    CHECK(validate_representation(back).ok());
  }

  std::string path = "tmp_roundtrip.nslarep";
  Representation R = regular_representation(paper_bc(4, field_prime(3)));
  save_representation(R, path);
  Representation back = load_representation(path);
  CHECK(back.algebra == R.algebra);
  for (size_t i = 0; i < R.table.size(); ++i) CHECK(back.table[i] == R.table[i]);
  std::remove(path.c_str());
}
