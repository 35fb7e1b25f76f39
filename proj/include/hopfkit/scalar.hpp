#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <variant>
#include <vector>

#include "hopfkit/errors.hpp"

namespace hopfkit {

class Scalar;

/// The ground field: either the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  Field() noexcept = default;

  static Field rationals() noexcept { return Field(); }
  /// Throws NotPrime unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Parses "Q" or "Fp:<p>".
  static Field parse(const std::string& descriptor);

  bool is_rationals() const noexcept { return p_ == 0; }
  bool is_prime_field() const noexcept { return p_ != 0; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  /// Exact image of num/den; throws DivisionByZero when den maps to zero.
  Scalar from_rational(const mpq_class& value) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) noexcept : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An exact field element. Rationals are kept canonical (reduced, positive
/// denominator); prime-field elements are residues in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() : p_(0), value_(mpq_class(0)) {}

  Field field() const;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Residue for prime fields; throws FieldMismatch on rationals.
  std::int64_t residue() const;
  /// Rational value; throws FieldMismatch on prime fields.
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used for canonical sorting: numeric order on Q, residue
  /// order on F_p.
  friend bool canonical_less(const Scalar& a, const Scalar& b);

  /// "num/den" or "num" for rationals; the residue for prime fields.
  std::string to_string() const;

 private:
  friend class Field;
  Scalar(std::uint32_t p, std::int64_t residue) : p_(p), value_(residue) {}
  explicit Scalar(mpq_class q) : p_(0), value_(std::move(q)) {}
  void check_same_field(const Scalar& other) const;

  std::uint32_t p_;
  std::variant<std::int64_t, mpq_class> value_;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& field, std::size_t n);
Vec unit_vec(const Field& field, std::size_t n, std::size_t index);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
/// a += s * b
void axpy(Vec& a, const Scalar& s, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);
/// Canonical order: position of the first nonzero entry (earlier sorts
/// first), then entrywise canonical_less.
bool canonical_vec_less(const Vec& a, const Vec& b);
std::string vec_to_string(const Vec& v);

}  // namespace hopfkit
