#include "hopfkit/igalois.hpp"

#include <algorithm>
#include <numeric>

namespace hopfkit {

namespace {

// Coordinates of α(w) for w in W, as a (dim W · n) × dim W coaction.
Matrix restrict_comodule(const Matrix& coaction, std::size_t dim, std::size_t n, const Subspace& w) {
  const Field& f = w.field();
  const std::size_t k = w.dim();
  Matrix out(f, k * n, k);
  for (std::size_t c = 0; c < k; ++c) {
    const Vec img = coaction.apply(w.basis_vector(c));
    for (std::size_t t = 0; t < n; ++t) {
      Vec leg(dim, f.zero());
      for (std::size_t p = 0; p < dim; ++p) leg[p] = img[p * n + t];
      const auto co = w.coordinates(leg);
      ensure(co.has_value(), "coaction does not preserve the subspace");
      for (std::size_t r = 0; r < k; ++r) out(r * n + t, c) = (*co)[r];
    }
  }
  return out;
}

Matrix idempotent_matrix(const IGaloisObject& g) {
  return Matrix::from_columns(g.base.field(), g.base.dim(), g.idempotents);
}

// Coefficients of a coinvariant element in the basis p_i.
Vec idempotent_coordinates(const IGaloisObject& g, const Vec& z) {
  const auto c = solve_vec(idempotent_matrix(g), z);
  ensure(c.has_value(), "element is not in the span of the idempotents");
  return *c;
}

Matrix sandwich(const StructureAlgebra& a, const Vec& l, const Vec& r) {
  return a.left_mult(l) * a.right_mult(r);
}

bool vanishes_on(const Vec& functional, const Subspace& s) {
  for (const auto& v : s.basis_vectors())
    if (!dot(functional, v).is_zero()) return false;
  return true;
}

}  // namespace

ComoduleAlgebra restrict_coaction(const ComoduleAlgebra& a, const Subspace& s) {
  return {a.hopf, subalgebra(a.algebra, s), restrict_comodule(a.coaction, a.dim(), a.hopf.dim(), s)};
}

IGaloisObject analyze(const ComoduleAlgebra& a) {
  const StructureAlgebra& alg = a.algebra;
  const Vec one = alg.unit_or_throw();
  IGaloisObject g;
  g.base = a;
  g.galois = galois_maps(a);
  if (!g.galois.bijective()) throw Error(ErrorCode::NotGalois, "the Galois map is not bijective");
  const Subspace coinv = coinvariants(a);
  std::vector<Vec> ids;
  try {
    ids = primitive_idempotents_split_commutative(subalgebra(alg, coinv));
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::NotCommutative:
      case ErrorCode::NotSplit:
      case ErrorCode::NotSplitCenter:
      case ErrorCode::NotSemisimple:
        throw Error(ErrorCode::CoinvariantsNotSplit, std::string("coinvariants are not k_I: ") + e.what());
      default:
        throw;
    }
  }
  for (const auto& c : ids) g.idempotents.push_back(coinv.from_coordinates(c));
  const std::size_t n = g.size();
  Vec sum = alg.zero();
  for (std::size_t i = 0; i < n; ++i) {
    axpy(sum, alg.field().one(), g.idempotents[i]);
    for (std::size_t j = 0; j < n; ++j)
      ensure(alg.multiply(g.idempotents[i], g.idempotents[j]) == (i == j ? g.idempotents[i] : alg.zero()),
             "coinvariant idempotents are not orthogonal");
  }
  ensure(sum == one, "coinvariant idempotents do not sum to 1");
  g.components.assign(n, std::vector<Subspace>(n));
  Subspace total(alg.field(), alg.dim());
  std::size_t dims = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g.components[i][j] = Subspace::column_space(sandwich(alg, g.idempotents[i], g.idempotents[j]));
      dims += g.components[i][j].dim();
      total = total.sum(g.components[i][j]);
    }
  ensure(dims == alg.dim() && total.is_full(), "A is not the direct sum of its components");
  g.can_inverse = inverse(g.galois.can);
  const auto rinv = try_inverse(g.galois.right_can);
  ensure(rinv.has_value(), "right Galois map is not bijective");
  g.right_can_inverse = *rinv;
  return g;
}

Matrix splitting_map(const IGaloisObject& g) {
  const StructureAlgebra& alg = g.base.algebra;
  const std::size_t d = alg.dim();
  Matrix full(alg.field(), d * d, d * d);
  for (const auto& p : g.idempotents) full += tensor(alg.right_mult(p), alg.left_mult(p));
  for (const auto& r : g.galois.relations.basis_vectors())
    ensure(is_zero_vec(full.apply(r)), "splitting map is not balanced");
  const Matrix s = full * g.galois.quotient.section;
  std::vector<Vec> target;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      for (std::size_t k = 0; k < g.size(); ++k)
        for (const auto& x : g.component(i, j).basis_vectors())
          for (const auto& y : g.component(j, k).basis_vectors()) target.push_back(tensor(x, y));
  const Subspace img = Subspace::column_space(s);
  ensure(img == Subspace::span(alg.field(), d * d, target), "splitting map image is not ⊕ A_ij⊗A_jk");
  ensure(img.dim() == s.cols(), "splitting map is not injective");
  return s;
}

std::vector<std::vector<std::size_t>> connectivity(const IGaloisObject& g) {
  const std::size_t n = g.size();
  const StructureAlgebra& alg = g.base.algebra;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool nz = !g.component(i, j).is_zero();
      ensure(nz == !g.component(j, i).is_zero(), "component relation is not symmetric");
      if (nz) parent[find(i)] = find(j);
    }
  // A_ij A_jk ⊆ A_ik, with equality inside a class
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Subspace prod = product_space(alg, g.component(i, j), g.component(j, k));
        ensure(g.component(i, k).contains(prod), "A_ij A_jk is not inside A_ik");
        if (!g.component(i, j).is_zero() && !g.component(j, k).is_zero())
          ensure(prod == g.component(i, k), "A_ij A_jk ≠ A_ik inside a connected class");
      }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = classes.size();
      classes.emplace_back();
    }
    classes[slot[r]].push_back(i);
  }
  for (const auto& c : classes)
    for (auto i : c)
      for (auto j : c) ensure(!g.component(i, j).is_zero(), "component relation is not transitive");
  return classes;
}

bool is_connected(const IGaloisObject& g) { return connectivity(g).size() == 1; }

std::vector<IGaloisObject> split_connected(const IGaloisObject& g) {
  const StructureAlgebra& alg = g.base.algebra;
  std::vector<IGaloisObject> out;
  for (const auto& cls : connectivity(g)) {
    Vec e = alg.zero();
    for (auto i : cls) axpy(e, alg.field().one(), g.idempotents[i]);
    for (std::size_t x = 0; x < alg.dim(); ++x)
      ensure(alg.multiply(e, alg.basis_vector(x)) == alg.multiply(alg.basis_vector(x), e),
             "class idempotent is not central");
    IGaloisObject piece = analyze(restrict_coaction(g.base, Subspace::column_space(alg.left_mult(e))));
    ensure(piece.size() == cls.size(), "connected piece has the wrong index set");
    ensure(is_connected(piece), "connected piece is not connected");
    out.push_back(std::move(piece));
  }
  return out;
}

// ---------------------------------------------------------------- functionals

InvariantFunctionalData phi_components(const IGaloisObject& g) {
  const ComoduleAlgebra& a = g.base;
  const StructureAlgebra& alg = a.algebra;
  const Field& f = a.field();
  const std::size_t d = a.dim(), n = g.size(), hn = a.hopf.dim();
  InvariantFunctionalData out;
  out.reynolds = reynolds(a);
  out.phi_a = zero_vec(f, d);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix s = sandwich(alg, g.idempotents[i], g.idempotents[i]);
    Vec phi(d, f.zero());
    for (std::size_t x = 0; x < d; ++x) {
      const Vec c = idempotent_coordinates(g, out.reynolds.apply(s.col_vec(x)));
      for (std::size_t j = 0; j < n; ++j) ensure(j == i || c[j].is_zero(), "Φ(A_ii) is not inside k p_i");
      phi[x] = c[i];
    }
    axpy(out.phi_a, f.one(), phi);
    out.phi_i.push_back(std::move(phi));
  }
  // Φ(a) = Σ_i φ_i(p_i a p_i) p_i
  for (std::size_t x = 0; x < d; ++x) {
    Vec z = alg.zero();
    for (std::size_t i = 0; i < n; ++i) axpy(z, out.phi_i[i][x], g.idempotents[i]);
    ensure(out.reynolds.col_vec(x) == z, "Reynolds operator does not split over the components");
  }
  ensure(rank(gram_matrix(alg, out.phi_a)) == d, "φ_A is not faithful");
  // (φ_A⊗id)α(a) = φ_A(a) δ
  const Vec delta = invariant_functionals(a.hopf).delta;
  for (std::size_t x = 0; x < d; ++x) {
    Vec lhs(hn, f.zero());
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t t = 0; t < hn; ++t) lhs[t] += out.phi_a[p] * a.coaction(p * hn + t, x);
    ensure(lhs == scale(out.phi_a[x], delta), "φ_A is not δ-invariant");
  }
  // (x, y) ↦ φ_i(xy) pairs A_ij with A_ji non-degenerately
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto xs = g.component(i, j).basis_vectors();
      const auto ys = g.component(j, i).basis_vectors();
      ensure(xs.size() == ys.size(), "dim A_ij ≠ dim A_ji");
      Matrix gram(f, xs.size(), ys.size());
      for (std::size_t r = 0; r < xs.size(); ++r)
        for (std::size_t c = 0; c < ys.size(); ++c) gram(r, c) = dot(out.phi_i[i], alg.multiply(xs[r], ys[c]));
      ensure(rank(gram) == xs.size(), "component pairing is degenerate");
    }
  return out;
}

namespace {

Subspace invariant_functional_space(const ComoduleAlgebra& a) {
  const std::size_t d = a.dim(), n = a.hopf.dim();
  const Vec one = a.hopf.unit();
  // rows (x, t): Σ_p α[(p,t), x] ψ_p − ψ_x 1_t
  Matrix sys(a.field(), d * n, d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t p = 0; p < d; ++p) sys(x * n + t, p) += a.coaction(p * n + t, x);
      sys(x * n + t, x) -= one[t];
    }
  return kernel(sys);
}

bool left_complete(const IGaloisObject& g, const Vec& psi) {
  for (const auto& p : g.idempotents)
    if (is_zero_vec(g.base.algebra.left_mult(p).apply_left(psi))) return false;
  return true;
}

bool right_complete(const IGaloisObject& g, const Vec& psi) {
  for (const auto& p : g.idempotents)
    if (is_zero_vec(g.base.algebra.right_mult(p).apply_left(psi))) return false;
  return true;
}

// Coefficient vectors with entries 0..k, ordered by largest entry, then
// support size, then lexicographically.
std::vector<std::vector<unsigned>> coefficient_order(std::size_t m, unsigned k) {
  std::vector<std::vector<unsigned>> all;
  std::vector<unsigned> c(m, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < m && c[pos] == k) c[pos++] = 0;
    if (pos == m) break;
    ++c[pos];
    all.push_back(c);
  }
  auto key = [](const std::vector<unsigned>& v) {
    const unsigned mx = *std::max_element(v.begin(), v.end());
    const auto nz = std::count_if(v.begin(), v.end(), [](unsigned x) { return x != 0; });
    std::vector<unsigned> rev(v.rbegin(), v.rend());  // earlier basis vectors first
    return std::make_tuple(mx, nz, rev);
  };
  std::sort(all.begin(), all.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
  for (auto& v : all) std::reverse(v.begin(), v.end());
  return all;
}

}  // namespace

std::vector<Vec> complete_functionals(const IGaloisObject& g, std::size_t count) {
  const Subspace space = invariant_functional_space(g.base);
  const Field& f = g.base.field();
  const auto basis = space.basis_vectors();
  std::vector<Vec> out;
  if (basis.empty()) return out;
  for (const auto& c : coefficient_order(basis.size(), 4)) {
    Vec v = zero_vec(f, g.base.dim());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (c[i] != 0) axpy(v, f.from_int(c[i]), basis[i]);
    if (is_zero_vec(v) || std::find(out.begin(), out.end(), v) != out.end()) continue;
    if (!left_complete(g, v)) continue;
    out.push_back(std::move(v));
    if (out.size() == count) break;
  }
  return out;
}

std::vector<std::size_t> permutation_of(const IGaloisObject& g, const Vec& psi) {
  const std::size_t n = g.size();
  std::vector<std::size_t> mu(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (vanishes_on(psi, g.component(i, j))) continue;
      if (mu[i] != n)
        throw Error(ErrorCode::NoCompleteFunctional, "ψ_ij ≠ 0 for two values of j at i = " + std::to_string(i));
      mu[i] = j;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (mu[i] == n) throw Error(ErrorCode::NoCompleteFunctional, "ψ_{i−} = 0 at i = " + std::to_string(i));
  std::vector<std::size_t> sorted = mu;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i) ensure(sorted[i] == i, "μ is not a bijection");
  return mu;
}

InvariantFunctionalData invariant_functional_data(const IGaloisObject& g, std::size_t completion) {
  InvariantFunctionalData out = phi_components(g);
  const std::size_t n = g.size();
  out.psi_space = invariant_functional_space(g.base);
  ensure(out.psi_space.dim() == n, "invariant functional space has dimension " +
                                       std::to_string(out.psi_space.dim()) + ", expected |I| = " + std::to_string(n));
  const auto cands = complete_functionals(g, completion + 1);
  if (cands.size() <= completion)
    throw Error(ErrorCode::NoCompleteFunctional, "no complete invariant functional number " + std::to_string(completion));
  out.completion = completion;
  out.psi_a = cands[completion];
  out.mu = permutation_of(g, out.psi_a);
  // every solution respects μ
  for (const auto& b : out.psi_space.basis_vectors())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != out.mu[i]) ensure(vanishes_on(b, g.component(i, j)), "invariant functional breaks the μ pattern");
  out.left_complete = left_complete(g, out.psi_a);
  out.right_complete = right_complete(g, out.psi_a);
  ensure(out.left_complete == out.right_complete, "left and right completeness differ");
  ensure(rank(gram_matrix(g.base.algebra, out.psi_a)) == g.base.dim(), "ψ_A is not faithful");
  return out;
}

// ---------------------------------------------------------------- modular data

Matrix nakayama(const IGaloisObject& g, const InvariantFunctionalData& f) {
  const StructureAlgebra& alg = g.base.algebra;
  const std::size_t d = alg.dim();
  const Matrix gram = gram_matrix(alg, f.phi_a);
  const Matrix sigma = inverse(gram) * gram.transpose();
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      ensure(dot(f.phi_a, alg.product(x, y)) == dot(f.phi_a, alg.multiply(alg.basis_vector(y), sigma.col_vec(x))),
             "σ_A fails its defining identity");
      ensure(sigma.apply(alg.product(x, y)) == alg.multiply(sigma.col_vec(x), sigma.col_vec(y)),
             "σ_A is not multiplicative");
    }
  ensure(rank(sigma) == d, "σ_A is not bijective");
  return sigma;
}

ModularData modular_data(const IGaloisObject& g, const InvariantFunctionalData& f) {
  const StructureAlgebra& alg = g.base.algebra;
  const std::size_t d = alg.dim(), n = g.size();
  const Vec one = alg.unit_or_throw();
  ModularData m;
  const Matrix gphi = gram_matrix(alg, f.phi_a), gpsi = gram_matrix(alg, f.psi_a);
  const Matrix ginv = inverse(gphi);
  // φ_A(x θ(w)) = ψ_A(xw) and φ_A(θ′(x) y) = ψ_A(xy)
  m.theta = ginv * gpsi;
  m.theta_prime = (gpsi * ginv).transpose();
  ensure(rank(m.theta) == d && rank(m.theta_prime) == d, "θ or θ′ is singular");
  m.kappa.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) m.kappa[f.mu[i]] = i;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& v : g.component(i, j).basis_vectors()) {
        ensure(g.component(i, m.kappa[j]).contains(m.theta.apply(v)), "θ does not map A_ij into A_iκ(j)");
        ensure(g.component(f.mu[i], j).contains(m.theta_prime.apply(v)), "θ′ does not map A_ij into A_μ(i)j");
      }
  m.delta_a = m.theta.apply(one);
  m.delta_a_prime = m.theta_prime.apply(one);
  for (std::size_t x = 0; x < d; ++x) {
    ensure(m.theta.col_vec(x) == alg.multiply(alg.basis_vector(x), m.delta_a), "θ(x) ≠ x δ_A");
    ensure(m.theta_prime.col_vec(x) == alg.multiply(m.delta_a_prime, alg.basis_vector(x)), "θ′(x) ≠ δ′_A x");
  }
  auto invert = [&](const Vec& z) {
    const auto y = solve_vec(alg.left_mult(z), one);
    ensure(y.has_value() && alg.multiply(*y, z) == one, "modular element is not invertible");
    return *y;
  };
  m.delta_a_inv = invert(m.delta_a);
  m.delta_a_prime_inv = invert(m.delta_a_prime);
  // α(δ_A) = δ_A ⊗ δ
  const Vec delta = invariant_functionals(g.base.hopf).delta;
  ensure(g.base.alpha(m.delta_a) == tensor(m.delta_a, delta), "α(δ_A) ≠ δ_A ⊗ δ");
  // p_i δ_A⁻¹ δ′_A p_i = ν_i p_i and δ′_i = ν_i δ_μ(i)
  const Vec r = alg.multiply(m.delta_a_inv, m.delta_a_prime);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& p = g.idempotents[i];
    const Vec z = alg.multiply(alg.multiply(p, r), p);
    const auto c = solve_vec(Matrix::column(p), z);
    ensure(c.has_value() && !(*c)[0].is_zero(), "p_i δ_A⁻¹ δ′_A p_i is not a nonzero multiple of p_i");
    m.nu.push_back((*c)[0]);
    ensure(m.theta_prime.apply(p) == scale(m.nu.back(), m.theta.apply(g.idempotents[f.mu[i]])),
           "δ′_i ≠ ν_i δ_μ(i)");
  }
  m.sigma_a = nakayama(g, f);
  m.sigma_a_prime = inverse(gpsi) * gpsi.transpose();
  const Matrix conj = alg.left_mult(m.delta_a) * alg.right_mult(m.delta_a_inv) * m.sigma_a;
  ensure(m.sigma_a_prime == conj, "σ′_A ≠ δ_A σ_A(−) δ_A⁻¹");
  return m;
}

std::vector<Matrix> beta_maps(const IGaloisObject& g) {
  const Field& f = g.base.field();
  const std::size_t d = g.base.dim(), n = g.base.hopf.dim();
  const Matrix s = splitting_map(g) * g.can_inverse;
  std::vector<Matrix> out;
  for (const auto& p : g.idempotents) {
    Matrix b(f, d * d, n);
    for (std::size_t h = 0; h < n; ++h) b.set_col(h, s.apply(tensor(p, unit_vec(f, n, h))));
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

std::string triple(std::size_t i, std::size_t h, std::size_t x) {
  return "(i=" + std::to_string(i) + ", h=" + std::to_string(h) + ", x=" + std::to_string(x) + ")";
}

}  // namespace

std::optional<std::string> check_eig1(const IGaloisObject& g, const InvariantFunctionalData& f,
                                      const std::vector<Matrix>& beta) {
  const ComoduleAlgebra& a = g.base;
  const StructureAlgebra& alg = a.algebra;
  const std::size_t d = a.dim(), n = a.hopf.dim();
  const Vec phi = invariant_functionals(a.hopf).phi;
  // Φ(e_v e_x)
  std::vector<std::vector<Vec>> rey(d, std::vector<Vec>(d));
  for (std::size_t v = 0; v < d; ++v)
    for (std::size_t x = 0; x < d; ++x) rey[v][x] = f.reynolds.apply(alg.product(v, x));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t h = 0; h < n; ++h) {
      const Vec b = beta[i].col_vec(h);
      for (std::size_t x = 0; x < d; ++x) {
        Vec lhs = alg.zero();
        for (std::size_t r = 0; r < d * d; ++r)
          if (!b[r].is_zero()) axpy(lhs, b[r], alg.multiply(alg.basis_vector(r / d), rey[r % d][x]));
        Vec rhs = alg.zero();
        for (std::size_t r = 0; r < d * n; ++r) {
          const Scalar& c = a.coaction(r, x);
          if (c.is_zero()) continue;
          const Scalar w = dot(phi, a.hopf.algebra.product(h, r % n));
          if (!w.is_zero()) axpy(rhs, c * w, alg.multiply(g.idempotents[i], alg.basis_vector(r / n)));
        }
        if (lhs != rhs) return triple(i, h, x);
      }
    }
  return std::nullopt;
}

std::optional<std::string> check_eig2(const IGaloisObject& g, const InvariantFunctionalData& f,
                                      const std::vector<Matrix>& beta) {
  const ComoduleAlgebra& a = g.base;
  const StructureAlgebra& alg = a.algebra;
  const std::size_t d = a.dim(), n = a.hopf.dim();
  const Vec phi = invariant_functionals(a.hopf).phi;
  std::vector<std::vector<Vec>> rey(d, std::vector<Vec>(d));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t u = 0; u < d; ++u) rey[x][u] = f.reynolds.apply(alg.product(x, u));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t h = 0; h < n; ++h) {
      const Vec b = beta[i].col_vec(h);
      const Vec sh = a.hopf.antipode.col_vec(h);
      for (std::size_t x = 0; x < d; ++x) {
        Vec lhs = alg.zero();
        for (std::size_t r = 0; r < d * d; ++r)
          if (!b[r].is_zero()) axpy(lhs, b[r], alg.multiply(rey[x][r / d], alg.basis_vector(r % d)));
        Vec rhs = alg.zero();
        for (std::size_t r = 0; r < d * n; ++r) {
          const Scalar& c = a.coaction(r, x);
          if (c.is_zero()) continue;
          const Scalar w = dot(phi, a.hopf.algebra.multiply(unit_vec(a.field(), n, r % n), sh));
          if (!w.is_zero()) axpy(rhs, c * w, alg.multiply(alg.basis_vector(r / n), g.idempotents[i]));
        }
        if (lhs != rhs) return triple(i, h, x);
      }
    }
  return std::nullopt;
}

Matrix theta_explicit(const IGaloisObject& g, const InvariantFunctionalData& f) {
  const ComoduleAlgebra& a = g.base;
  const Field& fld = a.field();
  const std::size_t d = a.dim(), n = a.hopf.dim();
  const Vec phi = invariant_functionals(a.hopf).phi;
  // h′: first basis element with φ ≠ 0, scaled so φ(h′) = 1
  std::size_t k = 0;
  while (k < n && phi[k].is_zero()) ++k;
  ensure(k < n, "φ vanishes");
  const Vec hprime = scale(phi[k].inverse(), unit_vec(fld, n, k));
  const Matrix s = splitting_map(g) * g.right_can_inverse;
  Matrix theta(fld, d, d);
  for (std::size_t w = 0; w < d; ++w) {
    // α(w)(1⊗h′)
    Vec v = zero_vec(fld, d * n);
    for (std::size_t r = 0; r < d * n; ++r) {
      const Scalar& c = a.coaction(r, w);
      if (c.is_zero()) continue;
      const Vec th = a.hopf.algebra.multiply(unit_vec(fld, n, r % n), hprime);
      for (std::size_t t = 0; t < n; ++t)
        if (!th[t].is_zero()) v[(r / n) * n + t] += c * th[t];
    }
    const Vec yz = s.apply(v);
    Vec col = zero_vec(fld, d);
    for (std::size_t r = 0; r < d * d; ++r)
      if (!yz[r].is_zero()) col[r / d] += yz[r] * f.psi_a[r % d];
    theta.set_col(w, col);
  }
  return theta;
}

Matrix nakayama_explicit(const IGaloisObject& g, const InvariantFunctionalData& f) {
  const ComoduleAlgebra& a = g.base;
  const StructureAlgebra& alg = a.algebra;
  const Field& fld = a.field();
  const std::size_t d = a.dim(), n = a.hopf.dim();
  const auto beta = beta_maps(g);
  const InvariantPair ip = invariant_functionals(a.hopf);
  const Matrix g_of_h = antipode_inverse(a.hopf) * ip.sigma;  // h ↦ S⁻¹σ(h)
  // T[u](p, q) = φ_A(e_p e_u e_q)
  const Matrix gram = gram_matrix(alg, f.phi_a);
  std::vector<Matrix> t(d, Matrix(fld, d, d));
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t q = 0; q < d; ++q) {
      const Vec uq = alg.product(u, q);
      const Vec col = gram.apply(uq);
      for (std::size_t p = 0; p < d; ++p) t[u](p, q) = col[p];
    }
  std::vector<Vec> xs, xps;
  for (std::size_t h = 0; h < n; ++h) {
    Vec bh = zero_vec(fld, d * d), bg = zero_vec(fld, d * d);
    const Vec gh = g_of_h.col_vec(h);
    for (const auto& b : beta) {
      axpy(bh, fld.one(), b.col_vec(h));
      axpy(bg, fld.one(), b.apply(gh));
    }
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) {
        Vec x = zero_vec(fld, d), xp = zero_vec(fld, d);
        for (std::size_t r = 0; r < d * d; ++r) {
          if (!bh[r].is_zero()) x[r % d] += bh[r] * t[r / d](p, q);
          if (!bg[r].is_zero()) xp[r / d] += bg[r] * t[r % d](p, q);
        }
        xs.push_back(std::move(x));
        xps.push_back(std::move(xp));
      }
  }
  const Matrix xm = Matrix::from_columns(fld, d, xs), xpm = Matrix::from_columns(fld, d, xps);
  // independent columns of X: the pivot columns of its echelon form
  const Echelon e = rref(xm);
  ensure(e.pivots.size() == d, "the elements x do not span A");
  const Matrix base = xm.select_cols(e.pivots), image = xpm.select_cols(e.pivots);
  const Matrix sigma = image * inverse(base);
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (sigma.apply(xs[k]) != xps[k])
      throw Error(ErrorCode::Internal, "x ↦ x′ is not well defined at pair " + std::to_string(k));
  return sigma;
}

// ---------------------------------------------------------------- correspondence

HomogeneousCorner homogeneous_from_galois(const IGaloisObject& g, std::size_t i) {
  if (i >= g.size()) throw Error(ErrorCode::InvalidInput, "index outside I");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "the I-Galois object is not connected");
  HomogeneousCorner out;
  out.space = g.component(i, i);
  out.algebra = restrict_coaction(g.base, out.space);
  ensure(is_homogeneous(out.algebra), "corner A_ii is not homogeneous");
  for (std::size_t j = 0; j < g.size(); ++j) {
    const MoritaContextData ctx = context_from_subspaces(
        g.base.algebra, {{{g.component(i, i), g.component(i, j)}, {g.component(j, i), g.component(j, j)}}});
    out.contexts.push_back(verify_morita(ctx));
    ensure(out.contexts.back() == MoritaVerdict::Strict, "corner context is not strict");
  }
  return out;
}

GaloisFromHomogeneous galois_from_homogeneous(const ComoduleAlgebra& c, const Options& opts) {
  if (!is_homogeneous(c)) throw Error(ErrorCode::NotHomogeneous, "coinvariants are not k·1");
  switch (is_equivariantly_abs_semisimple(c, opts)) {
    case Verdict::Yes:
      break;
    case Verdict::No:
      throw Error(ErrorCode::NotEquivariantlyAbsolutelySemisimple, "A#Ĥ is not split semisimple");
    case Verdict::Undetermined:
      throw Error(ErrorCode::CannotCertifySplit, "could not certify that A#Ĥ is split");
  }
  GaloisFromHomogeneous out;
  out.double_smash = double_smash_twisted(c);
  const DoubleSmash& dsm = out.double_smash;
  const WedderburnForm w = wedderburn(dsm.inner.algebra, opts);
  if (!w.all_split()) throw Error(ErrorCode::CannotCertifySplit, "a Wedderburn block is not certified split");
  Vec p_inner = dsm.inner.algebra.zero();
  for (const auto& b : w.blocks) axpy(p_inner, c.field().one(), b.from_matrix_units.col_vec(0));
  out.p = dsm.embed_inner.apply(p_inner);
  const StructureAlgebra& d = dsm.outer.algebra;
  ensure(d.multiply(out.p, out.p) == out.p, "p is not idempotent");
  const CornerResult cr = corner(d, out.p);
  out.corner_space = cr.corner_space;
  out.full = cr.full;
  ensure(out.full, "p is not a full idempotent");
  out.galois = analyze(restrict_coaction(dsm.outer, out.corner_space));
  ensure(out.galois.size() == w.blocks.size(), "coinvariants of pDp are not k^(number of blocks)");
  ensure(is_connected(out.galois), "pDp is not connected");
  return out;
}

RoundTrip round_trip(const ComoduleAlgebra& c, std::size_t i, const Options& opts) {
  RoundTrip rt;
  rt.forward = galois_from_homogeneous(c, opts);
  rt.connected = is_connected(rt.forward.galois);
  rt.corner = homogeneous_from_galois(rt.forward.galois, i);
  const BidualityContext ctx = biduality_context(rt.forward.double_smash);
  const StructureAlgebra& amb = ctx.ambient;
  const Field& f = c.field();
  const std::size_t vv = amb.dim();

  // q = p_i as an element of D, and its image e₁ = π(q)
  const Vec q = rt.forward.corner_space.from_coordinates(rt.forward.galois.idempotents[i]);
  const Vec e1 = ctx.pi_d.apply(q);
  // B_ii inside D, then inside the ambient algebra
  const Matrix k = ctx.pi_d * rt.forward.corner_space.embedding() * rt.corner.space.embedding();
  std::vector<Vec> p11, p12, p21, corner_image;
  for (std::size_t x = 0; x < k.cols(); ++x) p11.push_back(k.col_vec(x));
  for (const auto& y : ctx.parts[0][1].basis_vectors()) p12.push_back(amb.multiply(e1, y));
  for (const auto& y : ctx.parts[1][0].basis_vectors()) p21.push_back(amb.multiply(y, e1));
  for (const auto& y : ctx.parts[0][0].basis_vectors()) corner_image.push_back(amb.multiply(amb.multiply(e1, y), e1));
  const std::array<std::array<Subspace, 2>, 2> parts = {
      {{Subspace::span(f, vv, p11), Subspace::span(f, vv, p12)}, {Subspace::span(f, vv, p21), ctx.parts[1][1]}}};
  rt.verdict = verify_morita(context_from_subspaces(amb, parts));

  // π: B_ii → e₁ Q₁₁ e₁ is an algebra isomorphism
  bool iso = parts[0][0].dim() == k.cols() && parts[0][0] == Subspace::span(f, vv, corner_image);
  const StructureAlgebra& bii = rt.corner.algebra.algebra;
  for (std::size_t x = 0; x < bii.dim() && iso; ++x)
    for (std::size_t y = 0; y < bii.dim() && iso; ++y)
      iso = k.apply(bii.product(x, y)) == amb.multiply(k.col_vec(x), k.col_vec(y));
  rt.corner_iso = iso;
  return rt;
}

EquivariantSimplesReport equivariant_simples_report(const IGaloisObject& g, const Options& opts) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "the I-Galois object is not connected");
  const ComoduleAlgebra& a = g.base;
  const StructureAlgebra& alg = a.algebra;
  const SmashAlgebra s = smash(a);
  std::vector<Matrix> left;
  for (std::size_t x = 0; x < a.dim(); ++x) left.push_back(alg.left(x));
  const AlgModule reg{alg, a.dim(), left};
  EquivariantSimplesReport rep;
  std::vector<AlgModule> mods;
  for (std::size_t j = 0; j < g.size(); ++j) {
    // M̃_j = A p_j
    const Subspace w = Subspace::column_space(alg.right_mult(g.idempotents[j]));
    const AlgModule sub = submodule(reg, w);
    const EquivariantModule em{a, w.dim(), sub.action, restrict_comodule(a.coaction, a.dim(), a.hopf.dim(), w)};
    ensure(check_equivariant_module(em).all_passed(), "A p_j is not an equivariant module");
    mods.push_back(equivariant_to_smash(em, s));
    rep.simples.push_back({j, w.dim(), is_absolutely_simple(mods.back(), opts)});
  }
  rep.pairwise_non_isomorphic = true;
  for (std::size_t j = 0; j < mods.size(); ++j)
    for (std::size_t k = 0; k < mods.size(); ++k)
      if (j != k && !hom_space(mods[j], mods[k]).empty()) rep.pairwise_non_isomorphic = false;
  std::size_t sq = 0;
  for (const auto& m : rep.simples) sq += m.dim * m.dim;
  rep.maximal = sq == s.algebra.dim();
  return rep;
}

}  // namespace hopfkit
