#include "hopfkit/polynomial.hpp"

#include "hopfkit/linalg.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace hopfkit {

Polynomial::Polynomial(Field field, Vec coefficients) : field_(field), c_(std::move(coefficients)) {
  for (const auto& x : c_)
    if (x.field() != field_) throw Error(ErrorCode::FieldMismatch, "polynomial coefficient");
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), Vec{c}); }

Polynomial Polynomial::linear_root(const Scalar& c) {
  return Polynomial(c.field(), Vec{-c, c.field().one()});
}

Polynomial Polynomial::monomial(const Scalar& c, std::size_t k) {
  Vec v(k + 1, c.field().zero());
  v[k] = c;
  return Polynomial(c.field(), std::move(v));
}

Polynomial Polynomial::from_ints(Field field, const std::vector<long long>& coeffs) {
  Vec v;
  for (long long x : coeffs) v.push_back(field.from_int(x));
  return Polynomial(field, std::move(v));
}

Scalar Polynomial::coefficient(std::size_t k) const {
  return k < c_.size() ? c_[k] : field_.zero();
}

Scalar Polynomial::leading() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
  return c_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "monic of zero");
  const Scalar inv = c_.back().inverse();
  Polynomial r = *this;
  for (auto& x : r.c_) x *= inv;
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial(field_);
  Vec d;
  for (std::size_t k = 1; k < c_.size(); ++k)
    d.push_back(field_.from_int(static_cast<long long>(k)) * c_[k]);
  return Polynomial(field_, std::move(d));
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

Matrix Polynomial::eval(const Matrix& m) const {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "polynomial at matrix");
  Matrix acc(m.field(), m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.field(), m.rows());
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * m + c_[k] * id;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.field_ != field_) throw Error(ErrorCode::FieldMismatch, "polynomial +");
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), field_.zero());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.field_ != field_) throw Error(ErrorCode::FieldMismatch, "polynomial -");
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), field_.zero());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "polynomial *");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  Vec r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(a.field_, std::move(r));
}

Polynomial operator*(const Scalar& s, const Polynomial& a) {
  Polynomial r = a;
  for (auto& x : r.c_) x *= s;
  r.trim();
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  if (d.field_ != field_) throw Error(ErrorCode::FieldMismatch, "polynomial division");
  if (degree() < d.degree()) return {Polynomial(field_), *this};
  Vec rem = c_;
  const std::size_t dd = d.c_.size() - 1;
  Vec quo(c_.size() - dd, field_.zero());
  const Scalar inv = d.c_.back().inverse();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k].is_zero()) continue;
    const Scalar f = rem[k] * inv;
    quo[k - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j)
      if (!d.c_[j].is_zero()) rem[k - dd + j] -= f * d.c_[j];
  }
  rem.resize(dd);
  return {Polynomial(field_, std::move(quo)), Polynomial(field_, std::move(rem))};
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t k = a.c_.size(); k-- > 0;)
    if (a.c_[k] != b.c_[k]) return canonical_less(a.c_[k], b.c_[k]);
  return false;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    const bool unit = c_[k].is_one();
    if (!unit || k == 0) out << "(" << c_[k].to_string() << ")";
    if (k >= 1) out << (unit ? "" : "*") << var;
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

Polynomial pow_mod(const Polynomial& base, const mpz_class& e, const Polynomial& m) {
  Polynomial result = Polynomial::constant(base.field().one()) % m;
  Polynomial b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

// ---------------------------------------------------------------- minimal polynomials

namespace {

/// Local min poly of v and the Krylov vectors v, Mv, ..., M^{d-1}v.
std::pair<Polynomial, std::vector<Vec>> local_krylov(const Matrix& m, const Vec& v) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  IncrementalBasis red(f, n);
  std::vector<Vec> krylov;
  Vec power = v;
  for (std::size_t d = 0; d <= n; ++d) {
    Vec w = power;
    Vec tag(n + 1, f.zero());
    tag[d] = f.one();
    red.reduce(w, &tag);
    if (is_zero_vec(w)) {
      tag.resize(d + 1);
      return {Polynomial(f, std::move(tag)), std::move(krylov)};
    }
    red.insert_reduced(std::move(w), std::move(tag));
    krylov.push_back(power);
    power = m.apply(power);
  }
  throw Error(ErrorCode::Internal, "Krylov sequence failed to terminate");
}

}  // namespace

Polynomial local_min_poly(const Matrix& m, const Vec& v) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "local_min_poly");
  return local_krylov(m, v).first;
}

Polynomial min_poly(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "min_poly");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Polynomial result = Polynomial::constant(f.one());
  IncrementalBasis span(f, n);
  for (std::size_t k = 0; k < n && span.size() < n; ++k) {
    Vec e = unit_vec(f, n, k);
    Vec probe = e;
    span.reduce(probe, nullptr);
    if (is_zero_vec(probe)) continue;
    auto [local, vecs] = local_krylov(m, e);
    result = lcm(result, local);
    for (auto& x : vecs) {
      span.reduce(x, nullptr);
      if (!is_zero_vec(x)) span.insert_reduced(std::move(x));
    }
  }
  return result;
}

// ---------------------------------------------------------------- integer helpers

namespace {

void pollard_factor(const mpz_class& n, std::vector<mpz_class>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    primes.push_back(n);
    return;
  }
  // Brent's variant of Pollard rho; restarts with a new constant on failure.
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1, diff;
    auto step = [&](mpz_class& z) {
      z = (z * z + c) % n;
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      diff = x - y;
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) {
      pollard_factor(d, primes);
      pollard_factor(n / d, primes);
      return;
    }
  }
}

mpz_class content_scale(const Vec& coeffs, std::vector<mpz_class>& ints) {
  mpz_class l = 1;
  for (const auto& c : coeffs)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den().get_mpz_t());
  mpz_class g = 0;
  ints.clear();
  for (const auto& c : coeffs) {
    mpz_class v = c.rational().get_num() * (l / c.rational().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  for (auto& v : ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return g;
}

}  // namespace

std::vector<mpz_class> positive_divisors(const mpz_class& n0) {
  mpz_class n = abs(n0);
  if (n == 0) throw Error(ErrorCode::InvalidInput, "divisors of zero");
  std::vector<mpz_class> primes;
  for (unsigned long d = 2; d < 10000 && d * d <= n; ++d)
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      primes.emplace_back(d);
      n /= d;
    }
  if (n > 1) pollard_factor(n, primes);
  std::map<mpz_class, unsigned> mult;
  for (const auto& p : primes) ++mult[p];
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : mult) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// ---------------------------------------------------------------- factorization over F_p

namespace {

Polynomial pth_root(const Polynomial& f) {
  const std::size_t p = f.field().characteristic();
  Vec out;
  for (std::size_t k = 0; k < f.coefficients().size(); k += p) out.push_back(f.coefficients()[k]);
  return Polynomial(f.field(), std::move(out));
}

std::vector<Factor> square_free(const Polynomial& f) {
  std::vector<Factor> out;
  const unsigned p = f.field().characteristic();
  const Polynomial one = Polynomial::constant(f.field().one());
  Polynomial c = gcd(f, f.derivative());
  Polynomial w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Polynomial y = gcd(w, c);
    Polynomial z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    for (auto& fac : square_free(pth_root(c).monic())) out.push_back({fac.poly, fac.multiplicity * p});
  }
  (void)one;
  return out;
}

std::vector<std::pair<Polynomial, unsigned>> distinct_degree(Polynomial f) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  const Field& F = f.field();
  const mpz_class p(static_cast<unsigned long>(F.characteristic()));
  const Polynomial t = Polynomial::monomial(F.one(), 1);
  Polynomial h = t % f;
  for (unsigned i = 1; f.degree() >= 2 * static_cast<long>(i); ++i) {
    h = pow_mod(h, p, f);
    Polynomial g = gcd(h - t, f);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

void equal_degree(const Polynomial& g, unsigned d, std::mt19937_64& rng,
                  std::vector<Polynomial>& out) {
  if (g.degree() == static_cast<long>(d)) {
    out.push_back(g.monic());
    return;
  }
  const Field& F = g.field();
  const std::uint64_t p = F.characteristic();
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  mpz_class exponent;
  if (p != 2) {
    mpz_ui_pow_ui(exponent.get_mpz_t(), p, d);
    exponent = (exponent - 1) / 2;
  }
  const Polynomial one = Polynomial::constant(F.one());
  for (;;) {
    Vec a(static_cast<std::size_t>(g.degree()));
    for (auto& x : a) x = F.from_int(static_cast<long long>(coeff(rng)));
    Polynomial ap(F, std::move(a));
    if (ap.degree() < 1) continue;
    Polynomial b(F);
    if (p != 2) {
      b = pow_mod(ap, exponent, g) - one;
    } else {
      Polynomial term = ap % g;
      b = term;
      for (unsigned i = 1; i < d; ++i) {
        term = (term * term) % g;
        b += term;
      }
    }
    Polynomial u = gcd(b, g);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree(u, d, rng, out);
      equal_degree((g / u).monic(), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factor_over_prime_field(const Polynomial& f, std::uint64_t seed) {
  if (!f.field().is_prime_field())
    throw Error(ErrorCode::FactorizationUnsupported, "factorization is only available over F_p");
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor of zero polynomial");
  std::vector<Factor> out;
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(seed);
  for (const auto& sf : square_free(f.monic())) {
    for (const auto& [g, d] : distinct_degree(sf.poly)) {
      std::vector<Polynomial> pieces;
      equal_degree(g, d, rng, pieces);
      for (auto& q : pieces) out.push_back({std::move(q), sf.multiplicity});
    }
  }
  // Merge equal factors (possible across the p-th root branch) and sort.
  std::sort(out.begin(), out.end(),
            [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
  std::vector<Factor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().poly == fac.poly)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(std::move(fac));
  }
  return merged;
}

std::vector<Scalar> rational_roots(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of zero polynomial");
  std::vector<Scalar> roots;
  const Field& F = f.field();
  if (F.is_prime_field()) {
    for (const auto& fac : factor_over_prime_field(f))
      if (fac.poly.degree() == 1) roots.push_back(-fac.poly.coefficient(0));
  } else {
    std::vector<mpz_class> a;
    content_scale(f.coefficients(), a);
    std::size_t low = 0;
    while (sgn(a[low]) == 0) ++low;
    if (low > 0) roots.push_back(F.zero());
    a.erase(a.begin(), a.begin() + static_cast<long>(low));
    if (a.size() >= 2) {
      const auto nums = positive_divisors(a.front());
      const auto dens = positive_divisors(a.back());
      std::vector<mpq_class> found;
      for (const auto& e : dens)
        for (const auto& d : nums)
          for (int sign : {1, -1}) {
            mpq_class x(sign * d, e);
            x.canonicalize();
            if (x.get_den() != e) continue;  // seen with a smaller denominator
            // Homogenised Horner: e^n f(d/e) = sum_k a_k d^k e^(n-k), all integers.
            const mpz_class num = sign * d;
            mpz_class acc = a.back(), epow = e;
            for (std::size_t k = a.size() - 1; k-- > 0;) {
              acc = acc * num + a[k] * epow;
              epow *= e;
            }
            if (acc == 0) found.push_back(x);
          }
      for (auto& x : found) roots.push_back(F.from_rational(x));
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const Scalar& x, const Scalar& y) { return canonical_less(x, y); });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Polynomial reduce_mod(const Polynomial& f, const Field& target) {
  if (!f.field().is_rationals()) throw Error(ErrorCode::FieldMismatch, "reduce_mod expects Q");
  Vec out;
  for (const auto& c : f.coefficients()) out.push_back(target.from_rational(c.rational()));
  return Polynomial(target, std::move(out));
}

bool certified_irreducible_over_rationals(const Polynomial& f) {
  if (!f.field().is_rationals() || f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  if (f.degree() <= 3) return rational_roots(f).empty();
  std::vector<mpz_class> ints;
  content_scale(f.coefficients(), ints);
  Vec zc;
  for (const auto& v : ints) zc.push_back(f.field().from_rational(mpq_class(v)));
  const Polynomial g(f.field(), std::move(zc));
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul,
                          41ul, 43ul, 47ul, 53ul, 59ul, 61ul, 67ul, 71ul, 73ul, 79ul, 83ul, 89ul,
                          97ul, 101ul, 103ul, 107ul, 109ul, 113ul}) {
    if (mpz_divisible_ui_p(ints.back().get_mpz_t(), p)) continue;
    const Field fp = Field::prime(p);
    const Polynomial r = reduce_mod(g, fp);
    auto facs = factor_over_prime_field(r);
    if (facs.size() == 1 && facs[0].multiplicity == 1 && facs[0].poly.degree() == f.degree())
      return true;
  }
  return false;
}

}  // namespace hopfkit
