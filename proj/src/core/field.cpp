#include "core/field.hpp"

namespace nsla {

const char* err_name(Err c) {
  switch (c) {
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::BadField: return "BadField";
    case Err::Parse: return "Parse";
    case Err::BadArity: return "BadArity";
    case Err::ArityMismatch: return "ArityMismatch";
    case Err::ParityObstruction: return "ParityObstruction";
    case Err::AmbientMismatch: return "AmbientMismatch";
    case Err::NotAnIdeal: return "NotAnIdeal";
    case Err::NotASubalgebra: return "NotASubalgebra";
    case Err::NotHMC: return "NotHMC";
    case Err::BadDecomposition: return "BadDecomposition";
    case Err::IncompatibleAlgebras: return "IncompatibleAlgebras";
    case Err::InvalidRepresentation: return "InvalidRepresentation";
    case Err::HypothesisNotMet: return "HypothesisNotMet";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::FiniteFieldRequired: return "FiniteFieldRequired";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

Field field_rational() { return Field{0}; }

static bool is_prime_u32(uint32_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field field_prime(uint32_t p) {
  if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
    throw Error(Err::BadField, "modulus must be a prime in [2, 2^31): " + std::to_string(p));
  return Field{p};
}

void Scalar::check(const Scalar& o) const {
  if (!(f_ == o.f_))
    throw Error(Err::FieldMismatch, "scalar fields differ: " + f_.str() + " vs " + o.f_.str());
}

Scalar Scalar::zero(Field f) {
  Scalar s;
  s.f_ = f;
  return s;
}

Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long long v) {
  Scalar s;
  s.f_ = f;
  if (f.rational()) {
    s.q_ = BigRat(v);
  } else {
    long long m = v % (long long)f.p;
    if (m < 0) m += f.p;
    s.r_ = (uint64_t)m;
  }
  return s;
}

Scalar Scalar::from_rat(const BigRat& q) {
  Scalar s;
  s.f_ = field_rational();
  s.q_ = q;
  return s;
}

Scalar Scalar::from_residue(Field f, uint64_t r) {
  if (f.rational()) throw Error(Err::BadField, "residue constructor needs a finite field");
  Scalar s;
  s.f_ = f;
  s.r_ = r % f.p;
  return s;
}

bool Scalar::is_zero() const { return f_.rational() ? q_.is_zero() : r_ == 0; }
bool Scalar::is_one() const { return f_.rational() ? q_ == 1 : r_ == 1; }

bool Scalar::operator==(const Scalar& o) const {
  if (!(f_ == o.f_)) return false;
  return f_.rational() ? q_ == o.q_ : r_ == o.r_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar s;
  s.f_ = f_;
  if (f_.rational()) s.q_ = q_ + o.q_;
  else s.r_ = (r_ + o.r_) % f_.p;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  Scalar s;
  s.f_ = f_;
  if (f_.rational()) s.q_ = q_ - o.q_;
  else s.r_ = (r_ + f_.p - o.r_) % f_.p;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar s;
  s.f_ = f_;
  if (f_.rational()) s.q_ = q_ * o.q_;
  else s.r_ = (r_ * o.r_) % f_.p;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.f_ = f_;
  if (f_.rational()) s.q_ = -q_;
  else s.r_ = r_ == 0 ? 0 : f_.p - r_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(Err::DivisionByZero, "inverse of zero in " + f_.str());
  Scalar s;
  s.f_ = f_;
  if (f_.rational()) {
    s.q_ = 1 / q_;
    return s;
  }
  // extended Euclid on (r, p)
  int64_t a = (int64_t)r_, m = (int64_t)f_.p;
  int64_t x0 = 1, x1 = 0, b = m;
  while (b != 0) {
    int64_t q = a / b;
    int64_t t = a - q * b; a = b; b = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
  }
  if (x0 < 0) x0 += m;
  s.r_ = (uint64_t)x0;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check(o);
  return *this * o.inv();
}

std::string Scalar::str() const {
  if (f_.rational()) {
    BigInt n = boost::multiprecision::numerator(q_);
    BigInt d = boost::multiprecision::denominator(q_);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
  }
  return std::to_string(r_);
}

Scalar Scalar::parse(Field f, const std::string& s) {
  auto bad = [&] { return Error(Err::Parse, "bad coefficient '" + s + "'"); };
  if (s.empty()) throw bad();
  size_t slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "" : s.substr(slash + 1);
  auto check_int = [&](const std::string& t) {
    if (t.empty()) throw bad();
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw bad();
    for (; i < t.size(); ++i)
      if (!isdigit((unsigned char)t[i])) throw bad();
  };
  check_int(num);
  if (slash != std::string::npos) check_int(den);
  try {
    BigInt n(num);
    BigInt d = slash == std::string::npos ? BigInt(1) : BigInt(den);
    if (d == 0) throw Error(Err::DivisionByZero, "zero denominator in '" + s + "'");
    if (f.rational()) return from_rat(BigRat(n, d));
    auto residue = [&](const BigInt& v) {
      BigInt m = v % f.p;
      if (m < 0) m += f.p;
      return (uint64_t)m;
    };
    Scalar sn = from_residue(f, residue(n));
    Scalar sd = from_residue(f, residue(d));
    return sn / sd;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

Vec zero_vec(Field f, size_t d) { return Vec(d, Scalar::zero(f)); }

bool vec_is_zero(const Vec& v) {
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Err::Internal, "vector length mismatch");
  Vec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Err::Internal, "vector length mismatch");
  Vec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x = c * x;
  return r;
}

void vec_add_scaled(Vec& acc, const Scalar& c, const Vec& v) {
  if (acc.size() != v.size()) throw Error(Err::Internal, "vector length mismatch");
  for (size_t i = 0; i < v.size(); ++i) acc[i] = acc[i] + c * v[i];
}

}  // namespace nsla
