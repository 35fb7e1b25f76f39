#include "hopfkit/coact.hpp"

namespace hopfkit {

bool operator==(const ComoduleAlgebra& a, const ComoduleAlgebra& b) {
  return a.hopf == b.hopf && a.algebra == b.algebra && a.coaction == b.coaction;
}

namespace {

void check_stop(const std::stop_token& stop) {
  if (stop.stop_requested()) throw Error(ErrorCode::Cancelled, "axiom check cancelled");
}

std::string at(std::size_t i) { return "basis element " + std::to_string(i); }

// Shared comodule axioms for a coaction matrix δ: V → V⊗H.
void comodule_axioms(const HopfData& h, std::size_t dim, const Matrix& delta, AxiomReport& rep) {
  const Field& f = h.field();
  const std::size_t n = h.dim();
  const Matrix lhs = tensor(delta, Matrix::identity(f, n)) * delta;
  const Matrix rhs = tensor(Matrix::identity(f, dim), h.coproduct) * delta;
  std::string fail;
  for (std::size_t i = 0; i < dim && fail.empty(); ++i)
    if (lhs.col_vec(i) != rhs.col_vec(i)) fail = at(i);
  rep.checks.push_back({"coassociativity", fail.empty(), fail});
  fail.clear();
  for (std::size_t i = 0; i < dim && fail.empty(); ++i) {
    Vec v = zero_vec(f, dim);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t t = 0; t < n; ++t) v[a] += delta(a * n + t, i) * h.counit[t];
    if (v != unit_vec(f, dim, i)) fail = at(i);
  }
  rep.checks.push_back({"counit", fail.empty(), fail});
}

// Elements e_p ⊗ e_t of A⊗H appearing in α(e_j), as (p, t, coefficient).
struct Term {
  std::size_t p, t;
  Scalar c;
};

std::vector<std::vector<Term>> coaction_terms(const Matrix& coaction, std::size_t dim, std::size_t n) {
  std::vector<std::vector<Term>> out(dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t r = 0; r < dim * n; ++r)
      if (!coaction(r, j).is_zero()) out[j].push_back({r / n, r % n, coaction(r, j)});
  return out;
}

// f_k(e_t ·) in the dual basis: coefficient s is f_k(e_t e_s).
Vec translate_left(const HopfData& h, std::size_t k, std::size_t t) {
  const std::size_t n = h.dim();
  Vec v(n, h.field().zero());
  for (std::size_t s = 0; s < n; ++s) v[s] = h.algebra.mult()(k, t * n + s);
  return v;
}

// Convolution ω∗χ on dual coordinates.
Vec convolve(const HopfData& h, const Vec& w, const Vec& x) {
  const std::size_t n = h.dim();
  Vec out(n, h.field().zero());
  for (std::size_t s = 0; s < n; ++s) {
    if (w[s].is_zero()) continue;
    for (std::size_t l = 0; l < n; ++l) {
      if (x[l].is_zero()) continue;
      const Scalar c = w[s] * x[l];
      for (std::size_t r = 0; r < n; ++r) {
        const Scalar& d = h.coproduct(s * n + l, r);
        if (!d.is_zero()) out[r] += c * d;
      }
    }
  }
  return out;
}

// Matrix of T as a vector of matrix-unit coordinates r*v + c.
Vec flatten(const Matrix& t) {
  Vec v;
  v.reserve(t.rows() * t.cols());
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c) v.push_back(t(r, c));
  return v;
}

}  // namespace

AxiomReport check_comodule_algebra(const ComoduleAlgebra& a, std::stop_token stop) {
  AxiomReport rep;
  const std::size_t n = a.hopf.dim(), d = a.dim();
  if (a.coaction.rows() != d * n || a.coaction.cols() != d) {
    rep.checks.push_back({"shapes", false, "coaction must be (dim A · dim H) × dim A"});
    return rep;
  }
  const StructureAlgebra& alg = a.algebra;
  const auto& u = alg.unit();
  rep.checks.push_back({"unit", u.has_value(), u ? "" : "no two-sided unit"});
  {
    std::string fail;
    for (std::size_t i = 0; i < d && fail.empty(); ++i) {
      check_stop(stop);
      const Vec ai = a.coaction.col_vec(i);
      for (std::size_t j = 0; j < d && fail.empty(); ++j)
        if (a.alpha(alg.product(i, j)) != tensor_multiply(alg, a.hopf.algebra, ai, a.coaction.col_vec(j)))
          fail = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    rep.checks.push_back({"coaction multiplicative", fail.empty(), fail});
  }
  if (u) {
    const bool ok = a.alpha(*u) == tensor(*u, a.hopf.unit());
    rep.checks.push_back({"coaction unital", ok, ok ? "" : "α(1) ≠ 1⊗1"});
  }
  check_stop(stop);
  comodule_axioms(a.hopf, d, a.coaction, rep);
  return rep;
}

AxiomReport check_comodule(const HopfData& h, const Comodule& v) {
  AxiomReport rep;
  if (v.coaction.rows() != v.dim * h.dim() || v.coaction.cols() != v.dim) {
    rep.checks.push_back({"shapes", false, "coaction must be (dim V · dim H) × dim V"});
    return rep;
  }
  comodule_axioms(h, v.dim, v.coaction, rep);
  return rep;
}

ComoduleAlgebra trivial_coaction(const HopfData& h, const StructureAlgebra& a) {
  const Vec one = h.unit();
  Matrix alpha(a.field(), a.dim() * h.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) alpha.set_col(i, tensor(unit_vec(a.field(), a.dim(), i), one));
  return {h, a, alpha};
}

Subspace coinvariants(const ComoduleAlgebra& a) {
  const std::size_t d = a.dim();
  const Vec one = a.hopf.unit();
  Matrix m = a.coaction;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t t = 0; t < a.hopf.dim(); ++t) m(i * a.hopf.dim() + t, i) -= one[t];
  const Subspace k = kernel(m);
  for (const auto& x : k.basis_vectors())
    for (const auto& y : k.basis_vectors())
      ensure(k.contains(a.algebra.multiply(x, y)), "coinvariants not closed under multiplication");
  return k;
}

bool has_coinvariant_local_units(const ComoduleAlgebra& a) {
  const auto& u = a.algebra.unit();
  return u && coinvariants(a).contains(*u);
}

bool is_homogeneous(const ComoduleAlgebra& a) {
  return a.algebra.unit().has_value() && coinvariants(a).dim() == 1;
}

Matrix reynolds(const ComoduleAlgebra& a) {
  const Vec phi = invariant_functionals(a.hopf).phi;
  const std::size_t d = a.dim(), n = a.hopf.dim();
  Matrix r(a.field(), d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t p = 0; p < d; ++p) {
      Scalar s = a.field().zero();
      for (std::size_t t = 0; t < n; ++t) s += a.coaction(p * n + t, j) * phi[t];
      r(p, j) = s;
    }
  const Subspace coinv = coinvariants(a);
  for (std::size_t j = 0; j < d; ++j) ensure(coinv.contains(r.col_vec(j)), "Reynolds image not coinvariant");
  for (const auto& e : coinv.basis_vectors())
    for (const auto& e2 : coinv.basis_vectors())
      for (std::size_t j = 0; j < d; ++j) {
        const Vec x = a.algebra.multiply(a.algebra.multiply(e, a.algebra.basis_vector(j)), e2);
        ensure(r.apply(x) == a.algebra.multiply(a.algebra.multiply(e, r.col_vec(j)), e2),
               "Reynolds operator is not bimodular over the coinvariants");
      }
  return r;
}

bool GaloisMaps::bijective() const {
  return can.rows() == can.cols() && rank(can) == can.rows();
}

GaloisMaps galois_maps(const ComoduleAlgebra& a) {
  const std::size_t d = a.dim(), n = a.hopf.dim();
  const Field& f = a.field();
  const StructureAlgebra& alg = a.algebra;
  const Subspace coinv = coinvariants(a);
  // Relations from algebra generators of A^α suffice.
  std::vector<Vec> gens;
  const StructureAlgebra coinv_alg = subalgebra(alg, coinv);
  for (std::size_t g : coinv_alg.generators()) gens.push_back(coinv.basis_vector(g));
  IncrementalBasis rel(f, d * d);
  for (const auto& e : gens)
    for (std::size_t x = 0; x < d; ++x) {
      const Vec xe = alg.multiply(alg.basis_vector(x), e);
      for (std::size_t y = 0; y < d; ++y)
        rel.add(sub(tensor(xe, alg.basis_vector(y)),
                        tensor(alg.basis_vector(x), alg.multiply(e, alg.basis_vector(y)))));
    }
  GaloisMaps g;
  g.relations = rel.subspace();
  g.quotient = quotient_map(d * d, g.relations);
  const auto terms = coaction_terms(a.coaction, d, n);
  Matrix can_full(f, d * n, d * d), right_full(f, d * n, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Vec c = zero_vec(f, d * n), r = zero_vec(f, d * n);
      for (const auto& tm : terms[y]) {
        const Vec xp = alg.product(x, tm.p);
        for (std::size_t q = 0; q < d; ++q)
          if (!xp[q].is_zero()) c[q * n + tm.t] += tm.c * xp[q];
      }
      for (const auto& tm : terms[x]) {
        const Vec py = alg.product(tm.p, y);
        for (std::size_t q = 0; q < d; ++q)
          if (!py[q].is_zero()) r[q * n + tm.t] += tm.c * py[q];
      }
      can_full.set_col(x * d + y, c);
      right_full.set_col(x * d + y, r);
    }
  for (const auto& v : g.relations.basis_vectors()) {
    ensure(is_zero_vec(can_full.apply(v)), "Galois map does not vanish on balanced relations");
    ensure(is_zero_vec(right_full.apply(v)), "right Galois map does not vanish on balanced relations");
  }
  g.can = can_full * g.quotient.section;
  g.right_can = right_full * g.quotient.section;
  return g;
}

bool is_galois(const ComoduleAlgebra& a) { return galois_maps(a).bijective(); }

Matrix galois_inverse(const GaloisMaps& g) {
  if (!g.bijective()) throw Error(ErrorCode::NotGalois, "the Galois map is not bijective");
  return inverse(g.can);
}

Matrix galois_inverse(const ComoduleAlgebra& a) { return galois_inverse(galois_maps(a)); }

// ---------------------------------------------------------------- smash products

SmashAlgebra smash(const ComoduleAlgebra& a) {
  const HopfData& h = a.hopf;
  const std::size_t d = a.dim(), n = h.dim();
  const Field& f = a.field();
  const StructureAlgebra& alg = a.algebra;
  const auto terms = coaction_terms(a.coaction, d, n);
  // c[k][t][l] = f_k(e_t ·) ∗ f_l
  std::vector<std::vector<std::vector<Vec>>> conv(n, std::vector<std::vector<Vec>>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t t = 0; t < n; ++t) {
      const Vec tr = translate_left(h, k, t);
      for (std::size_t l = 0; l < n; ++l) conv[k][t].push_back(convolve(h, tr, unit_vec(f, n, l)));
    }
  const std::size_t dim = d * n;
  Matrix mult(f, dim, dim * dim);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          Vec out = zero_vec(f, dim);
          for (const auto& tm : terms[j]) {
            const Vec ip = alg.product(i, tm.p);
            const Vec& w = conv[k][tm.t][l];
            for (std::size_t q = 0; q < d; ++q) {
              if (ip[q].is_zero()) continue;
              const Scalar c = tm.c * ip[q];
              for (std::size_t s = 0; s < n; ++s)
                if (!w[s].is_zero()) out[q * n + s] += c * w[s];
            }
          }
          mult.set_col((i * n + k) * dim + (j * n + l), out);
        }
  std::vector<std::string> labels;
  for (const auto& la : alg.labels())
    for (const auto& lh : h.algebra.labels()) labels.push_back(la + "#d" + lh);
  SmashAlgebra s;
  s.base = a;
  s.algebra = StructureAlgebra(f, dim, std::move(mult), std::move(labels));
  s.a_dim = d;
  s.h_dim = n;
  const Vec one_a = alg.unit_or_throw();
  s.embed_a = Matrix(f, dim, d);
  for (std::size_t i = 0; i < d; ++i) s.embed_a.set_col(i, tensor(unit_vec(f, d, i), h.counit));
  s.embed_dual = Matrix(f, dim, n);
  for (std::size_t k = 0; k < n; ++k) s.embed_dual.set_col(k, tensor(one_a, unit_vec(f, n, k)));

  // unit 1#ε and the embeddings are algebra maps
  ensure(s.algebra.unit() && *s.algebra.unit() == tensor(one_a, h.counit), "smash unit is not 1#ε");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      ensure(s.embed_a.apply(alg.product(i, j)) ==
                 s.algebra.multiply(s.embed_a.col_vec(i), s.embed_a.col_vec(j)),
             "A → A#Ĥ is not multiplicative");
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      ensure(s.embed_dual.apply(convolve(h, unit_vec(f, n, k), unit_vec(f, n, l))) ==
                 s.algebra.multiply(s.embed_dual.col_vec(k), s.embed_dual.col_vec(l)),
             "Ĥ → A#Ĥ is not multiplicative");

  // flip Ĥ⊗A → A⊗Ĥ and the Ĥ#A product transported through it
  s.flip = Matrix(f, dim, dim);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < d; ++j) {
      Vec out = zero_vec(f, dim);
      for (const auto& tm : terms[j]) {
        const Vec w = translate_left(h, k, tm.t);
        for (std::size_t q = 0; q < n; ++q)
          if (!w[q].is_zero()) out[tm.p * n + q] += tm.c * w[q];
      }
      s.flip.set_col(k * d + j, out);
    }
  ensure(try_inverse(s.flip).has_value(), "flip Ĥ#A → A#Ĥ is not bijective");
  const Matrix sinv = antipode_inverse(h);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < d; ++j) {
          // (f_k#e_i)(f_l#e_j) = f_k ∗ f_l(S⁻¹(e_i(1)) ·) # e_i(0) e_j
          Vec lhs = zero_vec(f, dim);
          for (const auto& tm : terms[i]) {
            const Vec st = sinv.col_vec(tm.t);
            Vec chi = zero_vec(f, n);
            for (std::size_t u = 0; u < n; ++u) chi[u] = h.algebra.multiply(st, unit_vec(f, n, u))[l];
            const Vec w = convolve(h, unit_vec(f, n, k), chi);
            const Vec pj = alg.product(tm.p, j);
            for (std::size_t sidx = 0; sidx < n; ++sidx) {
              if (w[sidx].is_zero()) continue;
              for (std::size_t q = 0; q < d; ++q)
                if (!pj[q].is_zero()) lhs[sidx * d + q] += tm.c * w[sidx] * pj[q];
            }
          }
          const Vec rhs = s.algebra.multiply(s.flip.col_vec(k * d + i), s.flip.col_vec(l * d + j));
          ensure(s.flip.apply(lhs) == rhs, "flip identity Ĥ#A = A#Ĥ fails");
        }
  return s;
}

namespace {

// h·(a#ω) = a#ω(· h) for basis h = e_v.
std::vector<Matrix> hopf_action_on_smash(const SmashAlgebra& s) {
  const HopfData& h = s.base.hopf;
  const std::size_t n = s.h_dim, d = s.a_dim;
  const Field& f = s.algebra.field();
  std::vector<Matrix> act(n, Matrix(f, d * n, d * n));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t sidx = 0; sidx < n; ++sidx)
          act[v](j * n + sidx, j * n + l) = h.algebra.mult()(l, sidx * n + v);
  return act;
}

}  // namespace

DoubleSmash double_smash_twisted(const ComoduleAlgebra& a) {
  DoubleSmash out;
  out.inner = smash(a);
  const HopfData& h = a.hopf;
  const Field& f = a.field();
  const std::size_t n = h.dim(), m = out.inner.algebra.dim(), dim = m * n;
  const StructureAlgebra& in = out.inner.algebra;
  const auto act = hopf_action_on_smash(out.inner);
  // H acts by algebra endomorphisms: h·(xy) = (h(1)·x)(h(2)·y)
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        Vec rhs = zero_vec(f, m);
        for (std::size_t r = 0; r < n * n; ++r) {
          const Scalar& c = h.coproduct(r, v);
          if (c.is_zero()) continue;
          axpy(rhs, c, in.multiply(act[r / n].col_vec(x), act[r % n].col_vec(y)));
        }
        ensure(act[v].apply(in.product(x, y)) == rhs, "H does not act by a module algebra on A#Ĥ");
      }
  Matrix mult(f, dim, dim * dim);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t y = 0; y < m; ++y)
        for (std::size_t u = 0; u < n; ++u) {
          Vec res = zero_vec(f, dim);
          for (std::size_t r = 0; r < n * n; ++r) {
            const Scalar& c = h.coproduct(r, t);
            if (c.is_zero()) continue;
            const Vec xy = in.left(x).apply(act[r / n].col_vec(y));
            const Vec wu = h.algebra.product(r % n, u);
            axpy(res, c, tensor(xy, wu));
          }
          mult.set_col((x * n + t) * dim + (y * n + u), res);
        }
  std::vector<std::string> labels;
  for (const auto& lx : in.labels())
    for (const auto& lh : h.algebra.labels()) labels.push_back("(" + lx + ")#" + lh);
  StructureAlgebra alg(f, dim, std::move(mult), std::move(labels));
  const Matrix s2 = h.antipode * h.antipode;
  Matrix coaction(f, dim * n, dim);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t t = 0; t < n; ++t) {
      Vec col = zero_vec(f, dim * n);
      for (std::size_t r = 0; r < n * n; ++r) {
        const Scalar& c = h.coproduct(r, t);
        if (c.is_zero()) continue;
        const Vec left = tensor(unit_vec(f, m, x), unit_vec(f, n, r / n));
        axpy(col, c, tensor(left, s2.col_vec(r % n)));
      }
      coaction.set_col(x * n + t, col);
    }
  out.outer = {h, alg, coaction};
  out.embed_inner = Matrix(f, dim, m);
  const Vec one = h.unit();
  for (std::size_t x = 0; x < m; ++x) out.embed_inner.set_col(x, tensor(unit_vec(f, m, x), one));
  return out;
}

std::vector<Matrix> double_smash_action_on_smash(const DoubleSmash& d) {
  const auto act = hopf_action_on_smash(d.inner);
  const std::size_t m = d.inner.algebra.dim(), n = d.inner.h_dim;
  std::vector<Matrix> out;
  out.reserve(m * n);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t t = 0; t < n; ++t) out.push_back(d.inner.algebra.left(x) * act[t]);
  return out;
}

// ---------------------------------------------------------------- equivariant modules

AxiomReport check_equivariant_module(const EquivariantModule& v) {
  AxiomReport rep;
  const HopfData& h = v.base.hopf;
  const std::size_t n = h.dim(), d = v.dim, da = v.base.dim();
  const Field& f = v.base.field();
  const AlgModule m{v.base.algebra, d, v.action};
  const bool ok = m.is_valid();
  rep.checks.push_back({"module", ok, ok ? "" : "not a unital module"});
  comodule_axioms(h, d, v.coaction, rep);
  // δ(a v) = α(a) δ(v) where (a⊗h)(w⊗k) = aw ⊗ hk
  std::string fail;
  for (std::size_t i = 0; i < da && fail.empty(); ++i) {
    const Vec ai = v.base.coaction.col_vec(i);
    for (std::size_t c = 0; c < d && fail.empty(); ++c) {
      const Vec dv = v.coaction.col_vec(c);
      Vec rhs = zero_vec(f, d * n);
      for (std::size_t r = 0; r < da * n; ++r) {
        if (ai[r].is_zero()) continue;
        for (std::size_t q = 0; q < d * n; ++q) {
          if (dv[q].is_zero()) continue;
          const Vec w = v.action[r / n].col_vec(q / n);
          const Vec hk = h.algebra.product(r % n, q % n);
          axpy(rhs, ai[r] * dv[q], tensor(w, hk));
        }
      }
      if (v.coaction.apply(v.action[i].col_vec(c)) != rhs)
        fail = "pair (" + std::to_string(i) + "," + std::to_string(c) + ")";
    }
  }
  rep.checks.push_back({"equivariance", fail.empty(), fail});
  return rep;
}

AlgModule equivariant_to_smash(const EquivariantModule& v, const SmashAlgebra& s) {
  const std::size_t n = s.h_dim, d = v.dim;
  const Field& f = v.base.field();
  std::vector<Matrix> omega(n, Matrix(f, d, d));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) omega[k](r, c) = v.coaction(r * n + k, c);
  AlgModule out{s.algebra, d, {}};
  for (std::size_t i = 0; i < s.a_dim; ++i)
    for (std::size_t k = 0; k < n; ++k) out.action.push_back(v.action[i] * omega[k]);
  return out;
}

EquivariantModule smash_to_equivariant(const AlgModule& w, const ComoduleAlgebra& base) {
  const HopfData& h = base.hopf;
  const std::size_t n = h.dim(), da = base.dim(), d = w.dim;
  const Field& f = base.field();
  const Vec one = base.algebra.unit_or_throw();
  EquivariantModule v{base, d, {}, Matrix(f, d * n, d)};
  for (std::size_t i = 0; i < da; ++i) {
    Matrix a(f, d, d);
    for (std::size_t k = 0; k < n; ++k)
      if (!h.counit[k].is_zero()) a += h.counit[k] * w.action[i * n + k];
    v.action.push_back(std::move(a));
  }
  for (std::size_t k = 0; k < n; ++k) {
    Matrix om(f, d, d);
    for (std::size_t i = 0; i < da; ++i)
      if (!one[i].is_zero()) om += one[i] * w.action[i * n + k];
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) v.coaction(r * n + k, c) = om(r, c);
  }
  return v;
}

EquivariantModule regular_equivariant_module(const ComoduleAlgebra& a) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a.dim(); ++i) act.push_back(a.algebra.left(i));
  return {a, a.dim(), std::move(act), a.coaction};
}

EquivariantModule equivariant_tensor_module(const ComoduleAlgebra& a, const Comodule& v) {
  const HopfData& h = a.hopf;
  const std::size_t n = h.dim(), da = a.dim(), dv = v.dim, d = da * dv;
  const Field& f = a.field();
  EquivariantModule out{a, d, {}, Matrix(f, d * n, d)};
  const Matrix idv = Matrix::identity(f, dv);
  for (std::size_t i = 0; i < da; ++i) out.action.push_back(tensor(a.algebra.left(i), idv));
  for (std::size_t x = 0; x < da; ++x)
    for (std::size_t y = 0; y < dv; ++y) {
      Vec col = zero_vec(f, d * n);
      for (std::size_t r = 0; r < da * n; ++r) {
        const Scalar& c1 = a.coaction(r, x);
        if (c1.is_zero()) continue;
        for (std::size_t q = 0; q < dv * n; ++q) {
          const Scalar& c2 = v.coaction(q, y);
          if (c2.is_zero()) continue;
          const Vec hk = h.algebra.product(r % n, q % n);
          const std::size_t base = ((r / n) * dv + q / n) * n;
          for (std::size_t t = 0; t < n; ++t)
            if (!hk[t].is_zero()) col[base + t] += c1 * c2 * hk[t];
        }
      }
      out.coaction.set_col(x * dv + y, col);
    }
  return out;
}

Verdict is_equivariantly_abs_semisimple(const ComoduleAlgebra& a, const Options& opts) {
  return is_absolutely_semisimple(smash(a).algebra, opts);
}

// ---------------------------------------------------------------- biduality

BidualityContext biduality_context(const DoubleSmash& dsm) {
  const SmashAlgebra& s = dsm.inner;
  const ComoduleAlgebra& a = s.base;
  const HopfData& h = a.hopf;
  const Field& f = a.field();
  const std::size_t n = h.dim(), da = a.dim(), m = s.algebra.dim(), v = m + da;
  const StructureAlgebra& D = dsm.outer.algebra;

  // φ̂ with φ̂(ψ(x ·)) = ε(x)
  const InvariantPair ip = invariant_functionals(h);
  const Matrix p = gram_matrix(h.algebra, ip.psi).transpose();
  const Vec phi_hat = inverse(p).transpose().apply(h.counit);
  const Matrix flip_inv = inverse(s.flip);

  BidualityContext ctx;
  ctx.m_dim = m;
  ctx.a_dim = da;
  ctx.ambient = matrix_algebra(f, v);
  auto embed = [&](const Matrix& block, std::size_t r0, std::size_t c0) {
    Matrix t(f, v, v);
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c) t(r0 + r, c0 + c) = block(r, c);
    return flatten(t);
  };

  // Q11 = π(D)
  const auto dact = double_smash_action_on_smash(dsm);
  ctx.pi_d = Matrix(f, v * v, D.dim());
  for (std::size_t i = 0; i < D.dim(); ++i) ctx.pi_d.set_col(i, embed(dact[i], 0, 0));
  // Q12: b#χ ↦ (c ↦ (b#χ)(c#ε))
  std::vector<Vec> q12;
  for (std::size_t x = 0; x < m; ++x) {
    Matrix t(f, m, da);
    for (std::size_t c = 0; c < da; ++c) t.set_col(c, s.algebra.multiply(unit_vec(f, m, x), s.embed_a.col_vec(c)));
    q12.push_back(embed(t, 0, m));
  }
  // Q21: θ#c ↦ (y ↦ Λ(θ)((c#ε) y)), Λ(θ)(χ#b) = φ̂(θ∗χ) b
  std::vector<Vec> q21;
  for (std::size_t th = 0; th < n; ++th) {
    Vec weight(n, f.zero());
    for (std::size_t k = 0; k < n; ++k) weight[k] = dot(convolve(h, unit_vec(f, n, th), unit_vec(f, n, k)), phi_hat);
    for (std::size_t c = 0; c < da; ++c) {
      Matrix t(f, da, m);
      for (std::size_t y = 0; y < m; ++y) {
        const Vec cy = s.algebra.multiply(s.embed_a.col_vec(c), unit_vec(f, m, y));
        const Vec z = flip_inv.apply(cy);  // Ĥ⊗A coordinates
        Vec out = zero_vec(f, da);
        for (std::size_t k = 0; k < n; ++k) {
          if (weight[k].is_zero()) continue;
          for (std::size_t b = 0; b < da; ++b)
            if (!z[k * da + b].is_zero()) out[b] += weight[k] * z[k * da + b];
        }
        t.set_col(y, out);
      }
      q21.push_back(embed(t, m, 0));
    }
  }
  // Q22 = λ(A)
  ctx.pi_a = Matrix(f, v * v, da);
  for (std::size_t i = 0; i < da; ++i) ctx.pi_a.set_col(i, embed(a.algebra.left(i), m, m));

  const Subspace s11 = Subspace::column_space(ctx.pi_d);
  const Subspace s22 = Subspace::column_space(ctx.pi_a);
  const Subspace s12 = Subspace::span(f, v * v, q12);
  const Subspace s21 = Subspace::span(f, v * v, q21);
  ensure(s11.dim() == D.dim(), "π is not injective on (A#Ĥ)#H");
  ensure(s22.dim() == da, "λ is not injective on A");
  ensure(s12.dim() == m && s21.dim() == m, "π is not injective on the bimodules");
  for (std::size_t i = 0; i < D.dim(); ++i)
    for (std::size_t j = 0; j < D.dim(); ++j)
      ensure(ctx.pi_d.apply(D.product(i, j)) ==
                 ctx.ambient.multiply(ctx.pi_d.col_vec(i), ctx.pi_d.col_vec(j)),
             "π is not multiplicative on (A#Ĥ)#H");
  ctx.parts = {{{s11, s12}, {s21, s22}}};
  return ctx;
}

}  // namespace hopfkit
