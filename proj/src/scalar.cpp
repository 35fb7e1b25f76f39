#include "hopfkit/scalar.hpp"

#include <sstream>

namespace hopfkit {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::FactorizationUnsupported: return "FactorizationUnsupported";
    case ErrorCode::NonUnital: return "NonUnital";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::NotSplitCenter: return "NotSplitCenter";
    case ErrorCode::Undetermined: return "Undetermined";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::NoInvariantFunctional: return "NoInvariantFunctional";
    case ErrorCode::NonUniqueFunctional: return "NonUniqueFunctional";
    case ErrorCode::NotGalois: return "NotGalois";
    case ErrorCode::CoinvariantsNotSplit: return "CoinvariantsNotSplit";
    case ErrorCode::NoCompleteFunctional: return "NoCompleteFunctional";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::CannotCertifySplit: return "CannotCertifySplit";
    case ErrorCode::NotEquivariantlyAbsolutelySemisimple:
      return "NotEquivariantlyAbsolutelySemisimple";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Cancelled: return "Cancelled";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return t;
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime_u64(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(const std::string& descriptor) {
  if (descriptor == "Q") return rationals();
  if (descriptor.rfind("Fp:", 0) == 0) {
    const std::string digits = descriptor.substr(3);
    if (digits.empty() || digits.size() > 12 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::InvalidInput, "bad field descriptor '" + descriptor + "'");
    return prime(std::stoull(digits));
  }
  throw Error(ErrorCode::InvalidInput, "bad field descriptor '" + descriptor + "'");
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const {
  if (p_ == 0) return Scalar(mpq_class(static_cast<long>(value)));
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Scalar(p_, r);
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (p_ == 0) {
    mpq_class q = value;
    q.canonicalize();
    return Scalar(std::move(q));
  }
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class num = value.get_num() % pz;
  mpz_class den = value.get_den() % pz;
  if (num < 0) num += pz;
  if (den < 0) den += pz;
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes in " + to_string());
  std::int64_t n = num.get_si();
  std::int64_t d = den.get_si();
  return Scalar(p_, (n * mod_inverse(d, p_)) % p_);
}

std::string Field::to_string() const {
  return p_ == 0 ? std::string("Q") : "Fp:" + std::to_string(p_);
}

// ---------------------------------------------------------------- Scalar

Field Scalar::field() const { return Field(p_); }

bool Scalar::is_zero() const noexcept {
  if (p_ != 0) return std::get<std::int64_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (p_ != 0) return std::get<std::int64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::int64_t Scalar::residue() const {
  if (p_ == 0) throw Error(ErrorCode::FieldMismatch, "residue() on a rational");
  return std::get<std::int64_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw Error(ErrorCode::FieldMismatch, "rational() on a prime-field element");
  return std::get<mpq_class>(value_);
}

void Scalar::check_same_field(const Scalar& other) const {
  if (p_ != other.p_)
    throw Error(ErrorCode::FieldMismatch, "mixing elements of " + field().to_string() +
                                              " and " + other.field().to_string());
}

Scalar Scalar::operator-() const {
  if (p_ != 0) {
    std::int64_t r = std::get<std::int64_t>(value_);
    return Scalar(p_, r == 0 ? 0 : p_ - r);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (p_ != 0) return Scalar(p_, mod_inverse(std::get<std::int64_t>(value_), p_));
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ != 0) {
    auto& r = std::get<std::int64_t>(value_);
    r += std::get<std::int64_t>(rhs.value_);
    if (r >= p_) r -= p_;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ != 0) {
    auto& r = std::get<std::int64_t>(value_);
    r -= std::get<std::int64_t>(rhs.value_);
    if (r < 0) r += p_;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (p_ != 0) {
    auto& r = std::get<std::int64_t>(value_);
    r = (r * std::get<std::int64_t>(rhs.value_)) % p_;
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  if (a.p_ != 0) return std::get<std::int64_t>(a.value_) == std::get<std::int64_t>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.p_ != 0) return std::get<std::int64_t>(a.value_) < std::get<std::int64_t>(b.value_);
  return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(std::get<std::int64_t>(value_));
  const mpq_class& q = std::get<mpq_class>(value_);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------- Vec helpers

Vec zero_vec(const Field& field, std::size_t n) { return Vec(n, field.zero()); }

Vec unit_vec(const Field& field, std::size_t n, std::size_t index) {
  Vec v = zero_vec(field, n);
  v.at(index) = field.one();
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector add");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sub");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vec& a, const Scalar& s, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "axpy");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || a.empty())
    throw Error(ErrorCode::DimensionMismatch, "dot of mismatched or empty vectors");
  Scalar r = a[0].field().zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) r += a[i] * b[i];
  return r;
}

bool canonical_vec_less(const Vec& a, const Vec& b) {
  auto first_nonzero = [](const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return i;
    return v.size();
  };
  std::size_t fa = first_nonzero(a), fb = first_nonzero(b);
  if (fa != fb) return fa < fb;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] == b[i]) continue;
    return canonical_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i].to_string();
  out << ")";
  return out.str();
}

}  // namespace hopfkit
