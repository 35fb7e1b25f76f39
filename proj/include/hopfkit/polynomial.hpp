#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/matrix.hpp"

namespace hopfkit {

/// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Field field) : field_(field) {}
  Polynomial(Field field, Vec coefficients);

  static Polynomial constant(const Scalar& c);
  /// t - c
  static Polynomial linear_root(const Scalar& c);
  /// c * t^k
  static Polynomial monomial(const Scalar& c, std::size_t k);
  static Polynomial from_ints(Field field, const std::vector<long long>& coeffs);

  const Field& field() const noexcept { return field_; }
  const Vec& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  Scalar coefficient(std::size_t k) const;
  Scalar leading() const;
  bool is_monic() const { return !is_zero() && c_.back().is_one(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  Polynomial monic() const;
  Polynomial derivative() const;

  Scalar eval(const Scalar& x) const;
  Matrix eval(const Matrix& m) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& s, const Polynomial& a);

  /// Euclidean division; throws ZeroPolynomial on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Degree then coefficients from the top.
  friend bool canonical_less(const Polynomial& a, const Polynomial& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  Field field_;
  Vec c_;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);
/// base^e mod m, exponent given as an mpz.
Polynomial pow_mod(const Polynomial& base, const mpz_class& e, const Polynomial& m);

/// Monic minimal polynomial by incremental Krylov spin-up.
Polynomial min_poly(const Matrix& m);
/// Monic local minimal polynomial of v with respect to m.
Polynomial local_min_poly(const Matrix& m, const Vec& v);

/// Distinct roots in the ground field, canonically sorted.
std::vector<Scalar> rational_roots(const Polynomial& f);

struct Factor {
  Polynomial poly;
  unsigned multiplicity;
};

/// Monic irreducible factorization over F_p, sorted by (degree, coefficients).
/// Throws FactorizationUnsupported over Q.
std::vector<Factor> factor_over_prime_field(const Polynomial& f, std::uint64_t seed = 0);

/// Reduction of a rational polynomial modulo p (nullopt-like zero polynomial
/// when a denominator vanishes).
Polynomial reduce_mod(const Polynomial& f, const Field& target);

/// True only when f is certified irreducible over Q: degree 1, degree 2 or 3
/// without rational roots, or irreducible modulo some small prime not dividing
/// the leading coefficient and keeping f square-free. False means "not certified".
bool certified_irreducible_over_rationals(const Polynomial& f);

/// Integer divisors (positive) of |n|, n != 0.
std::vector<mpz_class> positive_divisors(const mpz_class& n);

}  // namespace hopfkit
