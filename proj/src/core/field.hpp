#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsla {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class Err {
  FieldMismatch,
  DivisionByZero,
  BadField,
  Parse,
  BadArity,
  ArityMismatch,
  ParityObstruction,
  AmbientMismatch,
  NotAnIdeal,
  NotASubalgebra,
  NotHMC,
  BadDecomposition,
  IncompatibleAlgebras,
  InvalidRepresentation,
  HypothesisNotMet,
  BudgetExceeded,
  FiniteFieldRequired,
  Internal,
};

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

const char* err_name(Err c);

/* Coefficient domain: the rationals (p == 0) or a prime field F_p.
 * Residues stay in machine words; the modulus is capped so products fit in
 * uint64 without overflow. */
struct Field {
  uint32_t p = 0;

  bool rational() const { return p == 0; }
  bool finite() const { return p != 0; }
  bool char2() const { return p == 2; }
  bool operator==(const Field&) const = default;
  std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

Field field_rational();
Field field_prime(uint32_t p);  // requires prime p with 2 <= p < 2^31

/* A field element tagged with its field. Mixing fields throws FieldMismatch.
 * Prime-field values are residues in [0, p); rationals are kept reduced with
 * positive denominator (cpp_rational maintains that form). */
class Scalar {
public:
  Scalar() = default;
  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long long v);
  static Scalar from_rat(const BigRat& q);            // rationals only
  static Scalar from_residue(Field f, uint64_t r);    // finite fields only
  static Scalar parse(Field f, const std::string& s); // "-3", "2/7", "4"

  Field field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar operator-() const;
  Scalar inv() const;

  uint64_t residue() const { return r_; }   // finite fields
  const BigRat& rat() const { return q_; }  // rationals

  std::string str() const;

private:
  Field f_;
  uint64_t r_ = 0;
  BigRat q_;
  void check(const Scalar& o) const;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, size_t d);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
void vec_add_scaled(Vec& acc, const Scalar& c, const Vec& v);

}  // namespace nsla
