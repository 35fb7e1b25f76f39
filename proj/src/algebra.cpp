#include <mutex>

#include "hopfkit/assoc.hpp"

namespace hopfkit {

struct StructureAlgebra::Data {
  Field field;
  std::size_t dim = 0;
  Matrix mult;
  std::vector<std::string> labels;
  std::vector<Matrix> left;
  std::vector<Matrix> right;
};

struct StructureAlgebra::Cache {
  std::once_flag unit_once;
  std::optional<Vec> unit;
  std::once_flag gens_once;
  std::vector<std::size_t> gens;
};

StructureAlgebra::StructureAlgebra(Field field, std::size_t dim, Matrix mult,
                                   std::vector<std::string> labels) {
  if (mult.rows() != dim || mult.cols() != dim * dim)
    throw Error(ErrorCode::DimensionMismatch, "structure tensor must be dim × dim²");
  if (mult.field() != field && dim > 0) throw Error(ErrorCode::FieldMismatch, "structure tensor");
  if (labels.empty())
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  if (labels.size() != dim) throw Error(ErrorCode::DimensionMismatch, "basis labels");
  auto d = std::make_shared<Data>();
  d->field = field;
  d->dim = dim;
  d->labels = std::move(labels);
  d->left.assign(dim, Matrix(field, dim, dim));
  d->right.assign(dim, Matrix(field, dim, dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t r = 0; r < dim; ++r) {
        const Scalar& x = mult(r, i * dim + j);
        if (x.is_zero()) continue;
        d->left[i](r, j) = x;
        d->right[j](r, i) = x;
      }
  d->mult = std::move(mult);
  d_ = std::move(d);
  cache_ = std::make_shared<Cache>();
}

StructureAlgebra StructureAlgebra::from_products(
    Field field, std::size_t dim, const std::function<Vec(std::size_t, std::size_t)>& product,
    std::vector<std::string> labels) {
  Matrix m(field, dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m.set_col(i * dim + j, product(i, j));
  return StructureAlgebra(field, dim, std::move(m), std::move(labels));
}

const Field& StructureAlgebra::field() const { return d_->field; }
std::size_t StructureAlgebra::dim() const { return d_->dim; }
const Matrix& StructureAlgebra::mult() const { return d_->mult; }
const std::vector<std::string>& StructureAlgebra::labels() const { return d_->labels; }
const Matrix& StructureAlgebra::left(std::size_t i) const { return d_->left.at(i); }
const Matrix& StructureAlgebra::right(std::size_t i) const { return d_->right.at(i); }

Vec StructureAlgebra::product(std::size_t i, std::size_t j) const {
  return d_->mult.col_vec(i * d_->dim + j);
}

Vec StructureAlgebra::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != dim() || b.size() != dim())
    throw Error(ErrorCode::DimensionMismatch, "algebra multiply");
  Vec out = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    Vec lb = d_->left[i].apply(b);
    axpy(out, a[i], lb);
  }
  return out;
}

Matrix StructureAlgebra::left_mult(const Vec& a) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) m += a[i] * d_->left[i];
  return m;
}

Matrix StructureAlgebra::right_mult(const Vec& a) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) m += a[i] * d_->right[i];
  return m;
}

std::optional<std::array<std::size_t, 3>> StructureAlgebra::associativity_violation(
    std::stop_token stop) const {
  const std::size_t n = dim();
  // (e_i e_j) e_k = R_k (e_i e_j) versus e_i (e_j e_k) = L_i (e_j e_k).
  for (std::size_t i = 0; i < n; ++i) {
    if (stop.stop_requested()) throw Error(ErrorCode::Cancelled, "associativity check");
    for (std::size_t j = 0; j < n; ++j) {
      const Vec ij = product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vec lhs = d_->right[k].apply(ij);
        const Vec rhs = d_->left[i].apply(product(j, k));
        if (lhs != rhs) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

bool StructureAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (d_->left[i] != d_->right[i]) return false;
  return true;
}

namespace {

std::optional<Vec> compute_unit(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  if (n == 0) return Vec{};
  // Unknown u; equations u e_i = e_i and e_i u = e_i added block by block
  // until the solution is pinned down, then verified against everything.
  Matrix acc(f, 0, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix block(f, 2 * n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        block(r, k) = a.mult()(r, k * n + i);
        block(n + r, k) = a.mult()(r, i * n + k);
      }
      if (r == i) {
        block(r, n) = f.one();
        block(n + r, n) = f.one();
      }
    }
    Echelon e = rref(vstack(acc, block));
    if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
    acc = e.rows;
    if (e.pivots.size() == n) break;
  }
  Vec u = zero_vec(f, n);
  for (std::size_t r = 0; r < acc.rows(); ++r) {
    std::size_t p = 0;
    while (acc(r, p).is_zero()) ++p;
    u[p] = acc(r, n);
  }
  if (!a.left_mult(u).is_identity() || !a.right_mult(u).is_identity()) return std::nullopt;
  return u;
}

/// Closure of `start` under the given matrices.
Subspace closure(const Field& f, std::size_t n, const std::vector<const Matrix*>& mats,
                 const std::vector<Vec>& start) {
  IncrementalBasis basis(f, n);
  std::vector<Vec> queue;
  for (const auto& v : start)
    if (basis.add(v)) queue.push_back(v);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const Matrix* m : mats) {
      Vec w = m->apply(queue[q]);
      if (basis.add(w)) queue.push_back(std::move(w));
    }
  return basis.subspace();
}

}  // namespace

const std::optional<Vec>& StructureAlgebra::unit() const {
  std::call_once(cache_->unit_once, [this] { cache_->unit = compute_unit(*this); });
  return cache_->unit;
}

Vec StructureAlgebra::unit_or_throw() const {
  const auto& u = unit();
  if (!u) throw Error(ErrorCode::NonUnital, "algebra has no unit");
  return *u;
}

const std::vector<std::size_t>& StructureAlgebra::generators() const {
  std::call_once(cache_->gens_once, [this] {
    const std::size_t n = dim();
    std::vector<Vec> start;
    if (unit()) start.push_back(*unit());
    IncrementalBasis have(field(), n);
    for (const auto& v : start) have.add(v);
    std::vector<std::size_t> gens;
    std::vector<const Matrix*> mats;
    for (std::size_t i = 0; i < n && have.size() < n; ++i) {
      if (have.contains(basis_vector(i))) continue;
      gens.push_back(i);
      mats.push_back(&d_->left[i]);
      start.push_back(basis_vector(i));
      Subspace s = closure(field(), n, mats, start);
      have = IncrementalBasis(field(), n);
      for (const auto& v : s.basis_vectors()) have.add(v);
    }
    cache_->gens = std::move(gens);
  });
  return cache_->gens;
}

bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return a.field() == b.field() && a.dim() == b.dim() && a.mult() == b.mult();
}

// ---------------------------------------------------------------- constructions

StructureAlgebra zero_product_algebra(const Field& field, std::size_t dim) {
  return StructureAlgebra(field, dim, Matrix(field, dim, dim * dim));
}

StructureAlgebra diagonal_algebra(const Field& field, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return StructureAlgebra::from_products(
      field, n,
      [&](std::size_t i, std::size_t j) {
        return i == j ? unit_vec(field, n, i) : zero_vec(field, n);
      },
      labels);
}

StructureAlgebra matrix_algebra(const Field& field, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  return StructureAlgebra::from_products(
      field, n * n,
      [&](std::size_t i, std::size_t j) {
        const std::size_t a = i / n, b = i % n, c = j / n, d = j % n;
        return b == c ? unit_vec(field, n * n, a * n + d) : zero_vec(field, n * n);
      },
      labels);
}

StructureAlgebra polynomial_quotient_algebra(const Polynomial& f) {
  if (f.degree() < 1) throw Error(ErrorCode::InvalidInput, "quotient by a constant");
  const Field& F = f.field();
  const std::size_t d = static_cast<std::size_t>(f.degree());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i)
    labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  return StructureAlgebra::from_products(
      F, d,
      [&](std::size_t i, std::size_t j) {
        Polynomial r = Polynomial::monomial(F.one(), i + j) % f;
        Vec v = zero_vec(F, d);
        for (std::size_t k = 0; k < r.coefficients().size(); ++k) v[k] = r.coefficients()[k];
        return v;
      },
      labels);
}

StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b) {
  const std::size_t n = a.dim(), m = b.dim();
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l + "'");
  return StructureAlgebra::from_products(
      a.field(), n + m,
      [&](std::size_t i, std::size_t j) {
        Vec v = zero_vec(a.field(), n + m);
        if (i < n && j < n) {
          Vec p = a.product(i, j);
          for (std::size_t k = 0; k < n; ++k) v[k] = p[k];
        } else if (i >= n && j >= n) {
          Vec p = b.product(i - n, j - n);
          for (std::size_t k = 0; k < m; ++k) v[n + k] = p[k];
        }
        return v;
      },
      labels);
}

StructureAlgebra opposite(const StructureAlgebra& a) {
  return StructureAlgebra::from_products(
      a.field(), a.dim(), [&](std::size_t i, std::size_t j) { return a.product(j, i); },
      a.labels());
}

StructureAlgebra subalgebra(const StructureAlgebra& a, const Subspace& s) {
  const std::size_t k = s.dim();
  const auto basis = s.basis_vectors();
  return StructureAlgebra::from_products(a.field(), k, [&](std::size_t i, std::size_t j) {
    auto c = s.coordinates(a.multiply(basis[i], basis[j]));
    if (!c) throw Error(ErrorCode::InvalidInput, "subspace is not closed under multiplication");
    return *c;
  });
}

StructureAlgebra quotient_algebra(const StructureAlgebra& a, const Subspace& ideal) {
  const QuotientMap q = quotient_map(a.dim(), ideal);
  const std::size_t k = q.projection.rows();
  return StructureAlgebra::from_products(a.field(), k, [&](std::size_t i, std::size_t j) {
    return q.projection.apply(a.multiply(q.section.col_vec(i), q.section.col_vec(j)));
  });
}

Subspace two_sided_ideal(const StructureAlgebra& a, const std::vector<Vec>& vectors) {
  std::vector<const Matrix*> mats;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    mats.push_back(&a.left(i));
    mats.push_back(&a.right(i));
  }
  return closure(a.field(), a.dim(), mats, vectors);
}

Subspace product_space(const StructureAlgebra& a, const Subspace& s, const Subspace& t) {
  IncrementalBasis out(a.field(), a.dim());
  for (const auto& x : s.basis_vectors()) {
    const Matrix lx = a.left_mult(x);
    for (const auto& y : t.basis_vectors()) out.add(lx.apply(y));
  }
  return out.subspace();
}

Subspace generated_subalgebra(const StructureAlgebra& a, const std::vector<Vec>& vectors) {
  std::vector<Vec> start = vectors;
  if (a.unit()) start.push_back(*a.unit());
  std::vector<Matrix> mats;
  for (const auto& v : vectors) mats.push_back(a.left_mult(v));
  std::vector<const Matrix*> ptrs;
  for (const auto& m : mats) ptrs.push_back(&m);
  return closure(a.field(), a.dim(), ptrs, start);
}

// ---------------------------------------------------------------- unit, center

std::optional<Vec> find_unit(const StructureAlgebra& a) { return a.unit(); }

bool has_local_units(const StructureAlgebra& a) { return a.unit().has_value(); }

Subspace center(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) return Subspace(a.field(), 0);
  // z g = g z for every generator g (and for every basis element when there
  // is no unit, since then the generators need not generate).
  std::vector<std::size_t> test = a.generators();
  if (!a.unit()) {
    test.clear();
    for (std::size_t i = 0; i < n; ++i) test.push_back(i);
  }
  if (test.empty()) return Subspace::full(a.field(), n);
  Matrix eq(a.field(), n * test.size(), n);
  for (std::size_t t = 0; t < test.size(); ++t) {
    const std::size_t g = test[t];
    // column k: e_k g - g e_k
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r)
        eq(t * n + r, k) = a.mult()(r, k * n + g) - a.mult()(r, g * n + k);
  }
  return kernel(eq);
}

}  // namespace hopfkit
