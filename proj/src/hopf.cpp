#include "hopfkit/hopf.hpp"

#include <sstream>

namespace hopfkit {

bool AxiomReport::all_passed() const { return first_failure() == nullptr; }

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

const AxiomCheck* AxiomReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string AxiomReport::to_string() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "pass " : "FAIL ") << c.name;
    if (!c.passed && !c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  return out.str();
}

Vec tensor_multiply(const StructureAlgebra& a, const StructureAlgebra& b, const Vec& x, const Vec& y) {
  const std::size_t n = a.dim(), m = b.dim();
  const Field& f = a.field();
  Vec out = zero_vec(f, n * m);
  for (std::size_t i = 0; i < n * m; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n * m; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      const Vec l = a.product(i / m, j / m);
      const Vec r = b.product(i % m, j % m);
      for (std::size_t p = 0; p < n; ++p) {
        if (l[p].is_zero()) continue;
        const Scalar lp = c * l[p];
        for (std::size_t q = 0; q < m; ++q)
          if (!r[q].is_zero()) out[p * m + q] += lp * r[q];
      }
    }
  }
  return out;
}

bool operator==(const HopfData& a, const HopfData& b) {
  return a.algebra == b.algebra && a.coproduct == b.coproduct && a.counit == b.counit &&
         a.antipode == b.antipode;
}

namespace {

std::string tuple_string(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

void check_stop(const std::stop_token& stop) {
  if (stop.stop_requested()) throw Error(ErrorCode::Cancelled, "axiom check cancelled");
}

}  // namespace

AxiomReport check_hopf(const HopfData& h, std::stop_token stop) {
  AxiomReport rep;
  const std::size_t n = h.dim();
  const Field& f = h.field();
  const StructureAlgebra& a = h.algebra;
  auto add = [&](std::string name, std::string fail) {
    rep.checks.push_back({std::move(name), fail.empty(), std::move(fail)});
  };
  if (h.coproduct.rows() != n * n || h.coproduct.cols() != n || h.counit.size() != n ||
      h.antipode.rows() != n || h.antipode.cols() != n) {
    add("shapes", "structure maps have inconsistent dimensions");
    return rep;
  }
  {
    const auto v = a.associativity_violation(stop);
    add("associativity", v ? "basis triple " + tuple_string({(*v)[0], (*v)[1], (*v)[2]}) : "");
  }
  const auto& u = a.unit();
  add("unit", u ? "" : "no two-sided unit");
  if (!u) return rep;

  // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ
  {
    const Matrix id = Matrix::identity(f, n);
    const Matrix lhs = tensor(h.coproduct, id) * h.coproduct;
    const Matrix rhs = tensor(id, h.coproduct) * h.coproduct;
    std::string fail;
    for (std::size_t i = 0; i < n && fail.empty(); ++i)
      if (lhs.col_vec(i) != rhs.col_vec(i)) fail = "basis element " + std::to_string(i);
    add("coassociativity", fail);
  }
  check_stop(stop);
  // counit: (ε⊗id)Δ = id = (id⊗ε)Δ
  {
    std::string fail;
    for (std::size_t i = 0; i < n && fail.empty(); ++i) {
      const Vec d = h.coproduct.col_vec(i);
      Vec l = zero_vec(f, n), r = zero_vec(f, n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& c = d[p * n + q];
          if (c.is_zero()) continue;
          l[q] += c * h.counit[p];
          r[p] += c * h.counit[q];
        }
      const Vec e = unit_vec(f, n, i);
      if (l != e || r != e) fail = "basis element " + std::to_string(i);
    }
    add("counit", fail);
  }
  // Δ and ε multiplicative and unital
  {
    std::string fail;
    const Vec one = *u;
    if (h.delta(one) != tensor(one, one)) fail = "Δ(1) ≠ 1⊗1";
    for (std::size_t i = 0; i < n && fail.empty(); ++i) {
      check_stop(stop);
      const Vec di = h.coproduct.col_vec(i);
      for (std::size_t j = 0; j < n && fail.empty(); ++j) {
        const Vec lhs = h.delta(a.product(i, j));
        const Vec rhs = tensor_multiply(a, a, di, h.coproduct.col_vec(j));
        if (lhs != rhs) fail = "basis pair " + tuple_string({i, j});
      }
    }
    add("coproduct multiplicative", fail);
  }
  {
    std::string fail;
    if (!h.epsilon(*u).is_one()) fail = "ε(1) ≠ 1";
    for (std::size_t i = 0; i < n && fail.empty(); ++i)
      for (std::size_t j = 0; j < n && fail.empty(); ++j)
        if (h.epsilon(a.product(i, j)) != h.counit[i] * h.counit[j])
          fail = "basis pair " + tuple_string({i, j});
    add("counit multiplicative", fail);
  }
  // antipode: m(S⊗id)Δ = uε = m(id⊗S)Δ
  {
    std::string fail_l, fail_r;
    for (std::size_t i = 0; i < n; ++i) {
      check_stop(stop);
      const Vec d = h.coproduct.col_vec(i);
      Vec l = zero_vec(f, n), r = zero_vec(f, n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& c = d[p * n + q];
          if (c.is_zero()) continue;
          axpy(l, c, a.multiply(h.antipode.col_vec(p), unit_vec(f, n, q)));
          axpy(r, c, a.multiply(unit_vec(f, n, p), h.antipode.col_vec(q)));
        }
      const Vec target = scale(h.counit[i], *u);
      if (fail_l.empty() && l != target) fail_l = "basis element " + std::to_string(i);
      if (fail_r.empty() && r != target) fail_r = "basis element " + std::to_string(i);
    }
    add("antipode left", fail_l);
    add("antipode right", fail_r);
  }
  return rep;
}

Subspace left_invariant_functional_space(const HopfData& h) {
  const std::size_t n = h.dim();
  const Field& f = h.field();
  const Vec one = h.unit();
  // For each h, a: Σ_b Δ(h)[a,b] φ_b − φ_h·1_a = 0.
  Matrix sys(f, n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec d = h.coproduct.col_vec(i);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) sys(i * n + p, q) += d[p * n + q];
      sys(i * n + p, i) -= one[p];
    }
  }
  return kernel(sys);
}

Matrix gram_matrix(const StructureAlgebra& a, const Vec& phi) {
  const std::size_t n = a.dim();
  Matrix g(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = dot(phi, a.product(i, j));
  return g;
}

InvariantPair invariant_functionals(const HopfData& h) {
  const std::size_t n = h.dim();
  const Field& f = h.field();
  const Subspace sol = left_invariant_functional_space(h);
  if (sol.dim() == 0) throw Error(ErrorCode::NoInvariantFunctional, "no left invariant functional");
  if (sol.dim() > 1)
    throw Error(ErrorCode::NonUniqueFunctional,
                "left invariant functionals form a " + std::to_string(sol.dim()) + "-dim space");
  InvariantPair out;
  Vec phi = sol.basis_vector(0);
  const Vec one = h.unit();
  const Scalar at_one = dot(phi, one);
  if (!at_one.is_zero()) {
    phi = scale(at_one.inverse(), phi);
    out.normalized = true;
  } else {
    for (const auto& c : phi)
      if (!c.is_zero()) {
        phi = scale(c.inverse(), phi);
        break;
      }
  }
  out.phi = phi;
  out.psi = h.antipode.apply_left(phi);  // ψ(e_j) = φ(S e_j)
  const Matrix g = gram_matrix(h.algebra, phi);
  const Matrix ginv = inverse(g);
  // φ(e_a δ) = ψ(e_a)
  out.delta = ginv.apply(out.psi);
  // φ(e_a e_b) = φ(e_b σ(e_a)):  G σ = Gᵀ
  out.sigma = ginv * g.transpose();

  // invariants
  for (std::size_t i = 0; i < n; ++i) {
    const Vec d = h.coproduct.col_vec(i);
    Vec acc = zero_vec(f, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Scalar& c = d[p * n + q];
        if (!c.is_zero()) acc[q] += c * out.psi[p];
      }
    ensure(acc == scale(out.psi[i], one), "φ∘S is not right invariant");
  }
  ensure(h.delta(out.delta) == tensor(out.delta, out.delta), "δ is not grouplike");
  ensure(h.epsilon(out.delta).is_one(), "ε(δ) ≠ 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ensure(out.sigma.apply(h.algebra.product(i, j)) ==
                 h.algebra.multiply(out.sigma.col_vec(i), out.sigma.col_vec(j)),
             "σ is not multiplicative");
  ensure(try_inverse(out.sigma).has_value(), "σ is singular");
  if (out.normalized) ensure(out.delta == one, "normalized integral with δ ≠ 1");
  return out;
}

bool faithfulness_check(const HopfData& h, const Vec& phi) {
  return rank(gram_matrix(h.algebra, phi)) == h.dim();
}

Matrix antipode_inverse(const HopfData& h) { return inverse(h.antipode); }

HopfData dual_hopf(const HopfData& h) {
  const std::size_t n = h.dim();
  std::vector<std::string> labels;
  for (const auto& l : h.algebra.labels()) labels.push_back("d" + l);
  HopfData d;
  d.algebra = StructureAlgebra(h.field(), n, h.coproduct.transpose(), labels);
  d.coproduct = h.algebra.mult().transpose();
  d.counit = h.unit();
  d.antipode = h.antipode.transpose();
  return d;
}

Matrix fourier_map(const HopfData& h, const Vec& phi) {
  return gram_matrix(h.algebra, phi).transpose();
}

}  // namespace hopfkit
