#include <algorithm>

#include "hopfkit/assoc.hpp"

namespace hopfkit {

namespace {

Subspace closure(const Field& f, std::size_t n, const std::vector<Matrix>& mats,
                 const std::vector<Vec>& start) {
  IncrementalBasis basis(f, n);
  std::vector<Vec> queue;
  for (const auto& v : start)
    if (basis.add(v)) queue.push_back(v);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const Matrix& m : mats) {
      Vec w = m.apply(queue[q]);
      if (basis.add(w)) queue.push_back(std::move(w));
    }
  return basis.subspace();
}

/// Matrices whose joint invariants are exactly the submodules: generator
/// actions plus rho(1); every basis element when the algebra lacks a unit.
std::vector<Matrix> generator_actions(const AlgModule& v) {
  std::vector<Matrix> out;
  const auto& unit = v.algebra.unit();
  if (!unit) return v.action;
  for (std::size_t g : v.algebra.generators()) out.push_back(v.action[g]);
  out.push_back(v.act(*unit));
  return out;
}

std::vector<Matrix> transposes(const std::vector<Matrix>& mats) {
  std::vector<Matrix> out;
  for (const auto& m : mats) out.push_back(m.transpose());
  return out;
}

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

Matrix unflatten(const Field& f, std::size_t rows, std::size_t cols, const Vec& v) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

/// {X : X a_t = b_t X for all t} as a subspace of row-major vec(X).
Subspace intertwiners(const Field& f, std::size_t rows, std::size_t cols,
                      const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  const std::size_t n = rows * cols;
  if (a.empty()) return Subspace::full(f, n);
  // First constraint built densely, later ones on the surviving basis only.
  Matrix eq(f, n, n);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t row = r * cols + c;
      for (std::size_t k = 0; k < cols; ++k)
        if (!a[0](k, c).is_zero()) eq(row, r * cols + k) += a[0](k, c);
      for (std::size_t k = 0; k < rows; ++k)
        if (!b[0](r, k).is_zero()) eq(row, k * cols + c) -= b[0](r, k);
    }
  Subspace sol = kernel(eq);
  for (std::size_t t = 1; t < a.size() && !sol.is_zero(); ++t) {
    const auto basis = sol.basis_vectors();
    Matrix img(f, n, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Matrix x = unflatten(f, rows, cols, basis[j]);
      img.set_col(j, flatten(x * a[t] - b[t] * x));
    }
    Subspace coeffs = kernel(img);
    std::vector<Vec> next;
    for (const auto& c : coeffs.basis_vectors()) {
      Vec v = zero_vec(f, n);
      for (std::size_t j = 0; j < basis.size(); ++j) axpy(v, c[j], basis[j]);
      next.push_back(std::move(v));
    }
    sol = Subspace::span(f, n, next);
  }
  return sol;
}

Subspace hom_subspace(const AlgModule& v, const AlgModule& w) {
  if (!(v.algebra == w.algebra)) throw Error(ErrorCode::InvalidInput, "modules over different algebras");
  std::vector<Matrix> a, b;
  const auto& unit = v.algebra.unit();
  if (unit) {
    for (std::size_t g : v.algebra.generators()) {
      a.push_back(v.action[g]);
      b.push_back(w.action[g]);
    }
    a.push_back(v.act(*unit));
    b.push_back(w.act(*unit));
  } else {
    a = v.action;
    b = w.action;
  }
  return intertwiners(v.algebra.field(), w.dim, v.dim, a, b);
}

bool is_scalar_matrix(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (r != c && !m(r, c).is_zero()) return false;
      if (r == c && m(r, c) != m(0, 0)) return false;
    }
  return true;
}

bool proper(const Subspace& s) { return !s.is_zero() && !s.is_full(); }

/// Does the radical of the algebra act as zero (so the module is semisimple)?
bool acts_semisimply(const AlgModule& v) {
  try {
    const Subspace rad = radical(v.algebra);
    for (const auto& x : rad.basis_vectors())
      if (!v.act(x).is_zero()) return false;
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

// ---------------------------------------------------------------- AlgModule

Matrix AlgModule::act(const Vec& a) const {
  const Field& f = algebra.field();
  Matrix m(f, dim, dim);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) m += a[i] * action[i];
  return m;
}

bool AlgModule::is_valid(std::stop_token stop) const {
  const std::size_t n = algebra.dim();
  if (action.size() != n) return false;
  for (const auto& m : action)
    if (m.rows() != dim || m.cols() != dim) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (stop.stop_requested()) throw Error(ErrorCode::Cancelled, "module check");
    for (std::size_t j = 0; j < n; ++j)
      if (action[i] * action[j] != act(algebra.product(i, j))) return false;
  }
  if (const auto& u = algebra.unit())
    if (!act(*u).is_identity()) return false;
  return true;
}

AlgModule regular_module(const StructureAlgebra& a) {
  AlgModule m{a, a.dim(), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) m.action.push_back(a.left(i));
  return m;
}

AlgModule submodule(const AlgModule& v, const Subspace& w) {
  AlgModule m{v.algebra, w.dim(), {}};
  const auto basis = w.basis_vectors();
  for (const auto& rho : v.action) {
    Matrix r(v.algebra.field(), w.dim(), w.dim());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      auto c = w.coordinates(rho.apply(basis[k]));
      if (!c) throw Error(ErrorCode::InvalidInput, "subspace is not a submodule");
      r.set_col(k, *c);
    }
    m.action.push_back(std::move(r));
  }
  return m;
}

AlgModule quotient_module(const AlgModule& v, const Subspace& w) {
  const QuotientMap q = quotient_map(v.dim, w);
  AlgModule m{v.algebra, q.projection.rows(), {}};
  for (const auto& rho : v.action) m.action.push_back(q.projection * rho * q.section);
  return m;
}

AlgModule direct_sum(const AlgModule& v, const AlgModule& w) {
  AlgModule m{v.algebra, v.dim + w.dim, {}};
  for (std::size_t i = 0; i < v.action.size(); ++i) {
    Matrix r(v.algebra.field(), m.dim, m.dim);
    for (std::size_t a = 0; a < v.dim; ++a)
      for (std::size_t b = 0; b < v.dim; ++b) r(a, b) = v.action[i](a, b);
    for (std::size_t a = 0; a < w.dim; ++a)
      for (std::size_t b = 0; b < w.dim; ++b) r(v.dim + a, v.dim + b) = w.action[i](a, b);
    m.action.push_back(std::move(r));
  }
  return m;
}

AlgModule column_module(const StructureAlgebra& matrix_alg, std::size_t n) {
  if (matrix_alg.dim() != n * n) throw Error(ErrorCode::DimensionMismatch, "column_module");
  AlgModule m{matrix_alg, n, {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix e(matrix_alg.field(), n, n);
      e(a, b) = matrix_alg.field().one();
      m.action.push_back(std::move(e));
    }
  return m;
}

Subspace spin(const AlgModule& v, const Vec& vec) { return spin(v, std::vector<Vec>{vec}); }

Subspace spin(const AlgModule& v, const std::vector<Vec>& vecs) {
  return closure(v.algebra.field(), v.dim, generator_actions(v), vecs);
}

bool is_submodule(const AlgModule& v, const Subspace& w) {
  for (const auto& m : generator_actions(v))
    for (const auto& b : w.basis_vectors())
      if (!w.contains(m.apply(b))) return false;
  return true;
}

std::vector<Matrix> hom_space(const AlgModule& v, const AlgModule& w) {
  std::vector<Matrix> out;
  for (const auto& x : hom_subspace(v, w).basis_vectors())
    out.push_back(unflatten(v.algebra.field(), w.dim, v.dim, x));
  return out;
}

EndomorphismAlgebra endomorphism_algebra(const AlgModule& v) {
  const Field& f = v.algebra.field();
  const Subspace s = hom_subspace(v, v);
  EndomorphismAlgebra e;
  for (const auto& x : s.basis_vectors()) e.basis.push_back(unflatten(f, v.dim, v.dim, x));
  e.algebra = StructureAlgebra::from_products(f, s.dim(), [&](std::size_t i, std::size_t j) {
    auto c = s.coordinates(flatten(e.basis[i] * e.basis[j]));
    ensure(c.has_value(), "endomorphisms not closed under composition");
    return *c;
  });
  return e;
}

// ---------------------------------------------------------------- simplicity

std::optional<Subspace> find_proper_submodule(const AlgModule& v, const Options& opts) {
  if (v.dim == 0) throw Error(ErrorCode::ZeroModule, "zero module");
  if (v.dim == 1) return std::nullopt;
  const Field& f = v.algebra.field();
  const std::size_t n = v.dim;
  const std::vector<Matrix> mats = generator_actions(v);
  const std::vector<Matrix> tmats = transposes(mats);

  for (std::size_t i = 0; i < n; ++i) {
    Subspace s = closure(f, n, mats, {unit_vec(f, n, i)});
    if (proper(s)) return s;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Subspace s = closure(f, n, tmats, {unit_vec(f, n, i)});
    if (proper(s)) return s.annihilator();
  }

  std::mt19937_64 rng(opts.seed);
  const int attempts = std::max(1, opts.split_search_budget);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Matrix theta(f, n, n);
    for (const auto& rho : v.action) {
      long long c = f.is_prime_field()
                        ? static_cast<long long>(rng() % f.characteristic())
                        : static_cast<long long>(rng() % 7) - 3;
      if (c) theta += f.from_int(c) * rho;
    }
    const Polynomial m = min_poly(theta);
    std::vector<std::pair<Polynomial, bool>> factors;
    if (f.is_prime_field()) {
      for (auto& fac : factor_over_prime_field(m, rng())) factors.emplace_back(fac.poly, true);
    } else {
      Polynomial rest = m;
      for (const auto& r : rational_roots(m)) {
        const Polynomial lin = Polynomial::linear_root(r);
        factors.emplace_back(lin, true);
        while ((rest % lin).is_zero()) rest = rest / lin;
      }
      if (rest.degree() > 0) factors.emplace_back(rest, certified_irreducible_over_rationals(rest));
    }
    for (const auto& [fp, certified] : factors) {
      const Matrix ft = fp.eval(theta);
      const Subspace nul = kernel(ft);
      if (nul.is_zero()) continue;
      Subspace s = closure(f, n, mats, {nul.basis_vector(0)});
      if (proper(s)) return s;
      const Subspace tnul = kernel(ft.transpose());
      Subspace st = closure(f, n, tmats, {tnul.basis_vector(0)});
      if (proper(st)) return st.annihilator();
      // Norton: a one-dimensional kernel over k[t]/(f) plus both spins full.
      if (certified && static_cast<long>(nul.dim()) == fp.degree()) return std::nullopt;
    }
  }

  // Fallback through the endomorphism ring.
  const EndomorphismAlgebra e = endomorphism_algebra(v);
  const bool semisimple = acts_semisimply(v);
  if (e.basis.size() == 1 && semisimple) return std::nullopt;
  std::vector<Matrix> candidates = e.basis;
  for (int t = 0; t < opts.split_search_budget; ++t) {
    Matrix c(f, n, n);
    for (const auto& b : e.basis) c += f.from_int(static_cast<long long>(rng() % 5) - 2) * b;
    candidates.push_back(std::move(c));
  }
  const Matrix id = Matrix::identity(f, n);
  for (const auto& t : candidates) {
    if (is_scalar_matrix(t)) continue;
    const Polynomial m = min_poly(t);
    for (const auto& r : rational_roots(m)) {
      Subspace k = kernel(t - r * id);
      if (proper(k)) return k;
    }
    if (f.is_prime_field()) {
      auto facs = factor_over_prime_field(m, rng());
      if (facs.size() > 1 || facs[0].multiplicity > 1) {
        Subspace k = kernel(facs[0].poly.eval(t));
        if (proper(k)) return k;
      }
      if (facs.size() == 1 && facs[0].multiplicity == 1 &&
          static_cast<std::size_t>(m.degree()) == e.basis.size() && semisimple)
        return std::nullopt;
    } else if (semisimple && static_cast<std::size_t>(m.degree()) == e.basis.size() &&
               certified_irreducible_over_rationals(m)) {
      return std::nullopt;  // End = k[t] is a field, so V is indecomposable and semisimple
    }
  }
  throw Error(ErrorCode::Undetermined, "could not certify or split a module of dimension " +
                                           std::to_string(n));
}

bool is_simple(const AlgModule& v, const Options& opts) {
  return !find_proper_submodule(v, opts).has_value();
}

bool is_absolutely_simple(const AlgModule& v, const Options& opts) {
  return is_simple(v, opts) && endomorphism_algebra(v).basis.size() == 1;
}

namespace {

Subspace complement(const AlgModule& m, const Subspace& w) {
  const Field& f = m.algebra.field();
  const AlgModule wm = submodule(m, w);
  const auto homs = hom_space(m, wm);
  const Matrix iota = w.embedding();
  Matrix sys(f, w.dim() * w.dim(), homs.size());
  for (std::size_t k = 0; k < homs.size(); ++k) sys.set_col(k, flatten(homs[k] * iota));
  auto c = solve_vec(sys, flatten(Matrix::identity(f, w.dim())));
  if (!c) throw Error(ErrorCode::NotSemisimple, "submodule without a module complement");
  Matrix proj(f, w.dim(), m.dim);
  for (std::size_t k = 0; k < homs.size(); ++k)
    if (!(*c)[k].is_zero()) proj += (*c)[k] * homs[k];
  Subspace k = kernel(proj);
  ensure(k.dim() + w.dim() == m.dim, "complement has the wrong dimension");
  return k;
}

void decompose(const AlgModule& m, const Matrix& emb, const Options& opts,
               std::vector<Subspace>& pieces) {
  auto w = find_proper_submodule(m, opts);
  if (!w) {
    pieces.push_back(Subspace::column_space(emb));
    return;
  }
  const Subspace wc = complement(m, *w);
  decompose(submodule(m, *w), emb * w->embedding(), opts, pieces);
  decompose(submodule(m, wc), emb * wc.embedding(), opts, pieces);
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vec x = a.basis_vector(i), y = b.basis_vector(i);
    if (x != y) return canonical_vec_less(x, y);
  }
  return false;
}

}  // namespace

std::vector<Summand> meataxe_decompose(const AlgModule& v, const Options& opts) {
  std::vector<Summand> out;
  if (v.dim == 0) return out;
  std::vector<Subspace> pieces;
  decompose(v, Matrix::identity(v.algebra.field(), v.dim), opts, pieces);
  std::sort(pieces.begin(), pieces.end(), subspace_less);
  for (const auto& p : pieces) out.push_back({submodule(v, p), p.embedding()});
  return out;
}

}  // namespace hopfkit
