#include "hopfkit/linalg.hpp"

#include <algorithm>
#include <utility>

namespace hopfkit {

namespace {

Echelon rref_prime(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  const std::int64_t p = m.field().characteristic();
  std::vector<std::int64_t> a(R * C);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c) a[r * C + c] = m(r, c).residue();

  auto inv = [p](std::int64_t x) {
    std::int64_t t = 0, nt = 1, rr = p, nr = x;
    while (nr) {
      std::int64_t q = rr / nr;
      std::swap(t, nt);
      nt -= q * t;
      std::swap(rr, nr);
      nr -= q * rr;
    }
    return t < 0 ? t + p : t;
  };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a[piv * C + c] == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      std::swap_ranges(a.begin() + piv * C, a.begin() + (piv + 1) * C, a.begin() + r * C);
    std::int64_t* row = &a[r * C];
    const std::int64_t s = inv(row[c]);
    for (std::size_t j = c; j < C; ++j) row[j] = row[j] * s % p;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      std::int64_t* other = &a[i * C];
      const std::int64_t f = other[c];
      if (f == 0) continue;
      for (std::size_t j = c; j < C; ++j) {
        if (row[j] == 0) continue;
        std::int64_t v = (other[j] - f * row[j]) % p;
        other[j] = v < 0 ? v + p : v;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(m.field(), r, C);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < C; ++c)
      if (a[i * C + c]) out(i, c) = m.field().from_int(a[i * C + c]);
  return {std::move(out), std::move(pivots)};
}

Echelon rref_rational(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  // Clear denominators row by row; row scaling does not change the row space.
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
  std::vector<std::size_t> live;
  for (std::size_t r = 0; r < R; ++r) {
    mpz_class l = 1;
    bool nonzero = false;
    for (std::size_t c = 0; c < C; ++c) {
      const mpq_class& q = m(r, c).rational();
      if (sgn(q) == 0) continue;
      nonzero = true;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    }
    if (!nonzero) continue;
    for (std::size_t c = 0; c < C; ++c) {
      const mpq_class& q = m(r, c).rational();
      if (sgn(q) != 0) a[r][c] = q.get_num() * (l / q.get_den());
    }
    live.push_back(r);
  }
  // Drop zero rows up front.
  std::vector<std::vector<mpz_class>> b;
  b.reserve(live.size());
  for (std::size_t r : live) b.push_back(std::move(a[r]));
  const std::size_t n = b.size();

  std::vector<std::size_t> pivots;
  mpz_class prev = 1, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && sgn(b[piv][c]) == 0) ++piv;
    if (piv == n) continue;
    std::swap(b[piv], b[r]);
    const mpz_class& pc = b[r][c];
    for (std::size_t i = r + 1; i < n; ++i) {
      mpz_class f = b[i][c];
      for (std::size_t j = c + 1; j < C; ++j) {
        mpz_mul(t.get_mpz_t(), pc.get_mpz_t(), b[i][j].get_mpz_t());
        if (sgn(f) != 0 && sgn(b[r][j]) != 0)
          mpz_submul(t.get_mpz_t(), f.get_mpz_t(), b[r][j].get_mpz_t());
        mpz_divexact(b[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      b[i][c] = 0;
    }
    prev = pc;
    pivots.push_back(c);
    ++r;
  }

  // Rational back-substitution on the integer echelon rows.
  const std::size_t rk = r;
  std::vector<std::vector<mpq_class>> q(rk, std::vector<mpq_class>(C));
  for (std::size_t i = 0; i < rk; ++i) {
    const mpz_class& lead = b[i][pivots[i]];
    for (std::size_t c = pivots[i]; c < C; ++c)
      if (sgn(b[i][c]) != 0) {
        q[i][c] = mpq_class(b[i][c], lead);
        q[i][c].canonicalize();
      }
  }
  for (std::size_t k = rk; k-- > 0;) {
    const std::size_t pc = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(q[i][pc]) == 0) continue;
      const mpq_class f = q[i][pc];
      for (std::size_t c = pc; c < C; ++c)
        if (sgn(q[k][c]) != 0) q[i][c] -= f * q[k][c];
    }
  }
  Matrix out(m.field(), rk, C);
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t c = 0; c < C; ++c)
      if (sgn(q[i][c]) != 0) out(i, c) = m.field().from_rational(q[i][c]);
  return {std::move(out), std::move(pivots)};
}

void check_same(const Matrix& a, const Matrix& b, const char* what) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, what);
}

}  // namespace

Echelon rref(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {Matrix(m.field(), 0, m.cols()), {}};
  return m.field().is_rationals() ? rref_rational(m) : rref_prime(m);
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Field field, std::size_t ambient) : basis_(field, 0, ambient) {}

Subspace Subspace::full(Field field, std::size_t ambient) {
  Subspace s;
  s.basis_ = Matrix::identity(field, ambient);
  s.pivots_.resize(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
  return s;
}

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return Subspace(field, ambient);
  return row_space(Matrix::from_rows(field, ambient, vectors));
}

Subspace Subspace::row_space(const Matrix& m) { return from_echelon(rref(m)); }

Subspace Subspace::column_space(const Matrix& m) { return row_space(m.transpose()); }

Subspace Subspace::from_echelon(Echelon e) {
  Subspace s;
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vec(i));
  return out;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "coordinates");
  Vec c(dim(), field().zero());
  Vec rest = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    c[i] = v[pivots_[i]];
    if (c[i].is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient_dim(); ++j) {
      const Scalar& b = basis_(i, j);
      if (!b.is_zero()) rest[j] -= c[i] * b;
    }
  }
  if (!is_zero_vec(rest)) return std::nullopt;
  return c;
}

Vec Subspace::from_coordinates(const Vec& c) const {
  if (c.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "from_coordinates");
  return basis_.apply_left(c);
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "sum");
  if (other.is_zero()) return *this;
  if (is_zero()) return other;
  return row_space(vstack(basis_, other.basis_));
}

Subspace Subspace::annihilator() const {
  if (is_zero()) return full(field(), ambient_dim());
  return kernel(basis_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "intersect");
  if (is_zero() || other.is_zero()) return Subspace(field(), ambient_dim());
  Subspace a = annihilator(), b = other.annihilator();
  if (a.is_zero() && b.is_zero()) return full(field(), ambient_dim());
  Matrix stacked = vstack(a.basis_, b.basis_);
  return kernel(stacked);
}

// ---------------------------------------------------------------- IncrementalBasis

void IncrementalBasis::reduce(Vec& v, Vec* tag) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar f = v[piv_[i]];
    if (f.is_zero()) continue;
    axpy(v, -f, rows_[i]);
    if (tag) axpy(*tag, -f, tags_[i]);
  }
}

void IncrementalBasis::insert_reduced(Vec v, Vec tag) {
  std::size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  if (p == v.size()) throw Error(ErrorCode::Internal, "inserting a zero vector");
  const Scalar inv = v[p].inverse();
  v = scale(inv, v);
  if (!tag.empty()) tag = scale(inv, tag);
  rows_.push_back(std::move(v));
  tags_.push_back(std::move(tag));
  piv_.push_back(p);
}

bool IncrementalBasis::add(const Vec& v) {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "IncrementalBasis::add");
  Vec w = v;
  reduce(w);
  if (is_zero_vec(w)) return false;
  insert_reduced(std::move(w));
  return true;
}

bool IncrementalBasis::contains(const Vec& v) const {
  Vec w = v;
  reduce(w);
  return is_zero_vec(w);
}

Subspace IncrementalBasis::subspace() const { return Subspace::span(field_, ambient_, rows_); }

// ---------------------------------------------------------------- solving

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  // Free columns give the basis; ordering them by decreasing index produces
  // the RREF directly after normalisation, but we re-run rref for simplicity.
  std::vector<Vec> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, m.field().zero());
    v[f] = m.field().one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, vecs);
}

Subspace image(const Matrix& m) { return Subspace::column_space(m); }

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  check_same(m, b, "solve");
  if (m.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "solve");
  const std::size_t n = m.cols();
  Echelon e = rref(hstack(m, b));
  Matrix x(m.field(), n, b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n) return std::nullopt;
    for (std::size_t k = 0; k < b.cols(); ++k) x(e.pivots[i], k) = e.rows(i, n + k);
  }
  return x;
}

std::optional<Vec> solve_vec(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve_vec");
  Matrix bm(m.field(), b.size(), 1);
  bm.set_col(0, b);
  auto x = solve(m, bm);
  if (!x) return std::nullopt;
  return x->col_vec(0);
}

std::optional<Matrix> try_inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "inverse");
  const std::size_t n = m.rows();
  Echelon e = rref(hstack(m, Matrix::identity(m.field(), n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.rows.block(0, n, n, n);
}

Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw Error(ErrorCode::Singular, "matrix is not invertible");
  return *inv;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  check_same(a, b, "tensor");
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& y = b(k, l);
          if (!y.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return out;
}

Vec tensor(const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec out(a.size() * b.size(), a.front().field().zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& relations) {
  if (relations.ambient_dim() != ambient_dim)
    throw Error(ErrorCode::DimensionMismatch, "quotient_map");
  const Field& f = relations.field();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t p : relations.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) free.push_back(j);
  QuotientMap q{Matrix(f, free.size(), ambient_dim), Matrix(f, ambient_dim, free.size())};
  for (std::size_t t = 0; t < free.size(); ++t) {
    q.projection(t, free[t]) = f.one();
    q.section(free[t], t) = f.one();
  }
  const Matrix& r = relations.basis();
  for (std::size_t i = 0; i < relations.dim(); ++i)
    for (std::size_t t = 0; t < free.size(); ++t)
      if (!r(i, free[t]).is_zero()) q.projection(t, relations.pivots()[i]) = -r(i, free[t]);
  return q;
}

}  // namespace hopfkit
