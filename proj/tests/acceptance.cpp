// One line per acceptance criterion. Exit status is nonzero when any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixture_files.hpp"
#include "hopfkit/cli.hpp"
#include "hopfkit/document.hpp"
#include "hopfkit/examples.hpp"
#include "hopfkit/igalois.hpp"

using namespace hopfkit;

namespace {

const Field Q = Field::rationals();

struct Tally {
  std::size_t checks = 0;
  std::string failure, note;
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && failure.empty()) failure = what;
  }
  bool ok() const { return failure.empty(); }
};

// ---------------------------------------------------------------- 1

bool left_invariant(const HopfData& h, const Vec& phi) {
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vec lhs = zero_vec(h.field(), n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) lhs[p] += h.coproduct(p * n + q, i) * phi[q];
    if (lhs != scale(phi[i], h.unit())) return false;
  }
  return true;
}

bool right_invariant(const HopfData& h, const Vec& psi) {
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vec lhs = zero_vec(h.field(), n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) lhs[q] += h.coproduct(p * n + q, i) * psi[p];
    if (lhs != scale(psi[i], h.unit())) return false;
  }
  return true;
}

void hopf_invariants(Tally& t) {
  std::vector<std::pair<std::string, HopfData>> hs;
  for (std::size_t n = 1; n <= 6; ++n) {
    hs.push_back({"kZ" + std::to_string(n), group_algebra(Q, cyclic_group(n))});
    hs.push_back({"k^Z" + std::to_string(n), dual_group_algebra(Q, cyclic_group(n))});
  }
  hs.push_back({"k^V4", dual_group_algebra(Q, klein_four_group())});
  hs.push_back({"k^S3", dual_group_algebra(Q, symmetric_group_s3())});
  hs.push_back({"kS3", group_algebra(Q, symmetric_group_s3())});
  hs.push_back({"H4", sweedler_h4(Q)});
  for (const auto& [name, h] : hs) {
    const std::size_t n = h.dim();
    t.expect(check_hopf(h).all_passed(), name + ": Hopf axioms");
    t.expect(left_invariant_functional_space(h).dim() == 1, name + ": invariant space dimension");
    const InvariantPair ip = invariant_functionals(h);
    t.expect(!is_zero_vec(ip.phi) && left_invariant(h, ip.phi), name + ": φ left invariant");
    Vec phi_s(n, Q.zero());
    for (std::size_t j = 0; j < n; ++j) phi_s[j] = dot(ip.phi, h.antipode.col_vec(j));
    t.expect(phi_s == ip.psi && right_invariant(h, phi_s), name + ": φ∘S right invariant");
    bool nak = rank(ip.sigma) == n && ip.sigma.apply(h.unit()) == h.unit();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        nak = nak && dot(ip.phi, h.algebra.product(a, b)) ==
                         dot(ip.phi, h.algebra.multiply(h.algebra.basis_vector(b), ip.sigma.col_vec(a)));
        nak = nak && ip.sigma.apply(h.algebra.product(a, b)) ==
                         h.algebra.multiply(ip.sigma.col_vec(a), ip.sigma.col_vec(b));
      }
    t.expect(nak, name + ": σ automorphism with φ(ab) = φ(bσ(a))");
    t.expect(h.delta(ip.delta) == tensor(ip.delta, ip.delta) && h.epsilon(ip.delta).is_one(), name + ": δ grouplike");
  }
  const HopfData h4 = sweedler_h4(Q);
  t.expect(invariant_functionals(h4).delta == unit_vec(Q, 4, 1), "H4: δ = g");
  t.expect(power(h4.antipode, 4).is_identity(), "H4: S⁴ = id");
  t.expect(!power(h4.antipode, 2).is_identity(), "H4: S² ≠ id");
}

// ---------------------------------------------------------------- 2

// a⊗h ↦ a S(h_(1)) ⊗ h_(2)
Matrix self_can_inverse(const HopfData& h) {
  const std::size_t n = h.dim();
  Matrix out(h.field(), n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x) {
      Vec col = zero_vec(h.field(), n * n);
      const Vec dx = h.coproduct.col_vec(x);
      for (std::size_t r = 0; r < n * n; ++r) {
        if (dx[r].is_zero()) continue;
        const Vec as = h.algebra.multiply(h.algebra.basis_vector(a), h.antipode.col_vec(r / n));
        axpy(col, dx[r], tensor(as, unit_vec(h.field(), n, r % n)));
      }
      out.set_col(a * n + x, col);
    }
  return out;
}

void galois_verdicts(Tally& t) {
  for (const HopfData& h : {group_algebra(Q, cyclic_group(2)), group_algebra(Q, klein_four_group()),
                            dual_group_algebra(Q, cyclic_group(3)), group_algebra(Q, symmetric_group_s3()),
                            dual_group_algebra(Q, symmetric_group_s3()), sweedler_h4(Q)}) {
    const GaloisMaps g = galois_maps(self_coaction(h));
    const Matrix inv = self_can_inverse(h);
    const Matrix full = g.can * g.quotient.projection;
    t.expect(g.bijective() && (full * inv).is_identity() && (inv * full).is_identity(),
             "self-coaction of dim " + std::to_string(h.dim()) + ": can⁻¹ by composition");
  }
  const HopfData z2 = group_algebra(Q, cyclic_group(2));
  const HopfData d3 = dual_group_algebra(Q, cyclic_group(3));
  for (const StructureAlgebra& a : {diagonal_algebra(Q, 2), matrix_algebra(Q, 2), z2.algebra, diagonal_algebra(Q, 3)})
    for (const HopfData& h : {z2, d3}) {
      const ComoduleAlgebra c = trivial_coaction(h, a);
      const GaloisMaps g = galois_maps(c);
      t.expect(!g.bijective() && rank(g.can) < a.dim() * h.dim(), "trivial coaction reported Galois");
    }
  // free G-sets: regular copies and a non-regular free action of Z2 on 4 points
  struct FreeSet {
    ComoduleAlgebra a;
    std::size_t orbits;
  };
  std::vector<FreeSet> sets{
      {regular_gset_function_algebra(Q, cyclic_group(2), 2), 2},
      {regular_gset_function_algebra(Q, cyclic_group(2), 3), 3},
      {regular_gset_function_algebra(Q, cyclic_group(3), 1), 1},
      {regular_gset_function_algebra(Q, cyclic_group(3), 2), 2},
      {regular_gset_function_algebra(Q, klein_four_group(), 1), 1},
      {regular_gset_function_algebra(Q, symmetric_group_s3(), 1), 1},
      {free_gset_function_algebra(Q, cyclic_group(2), 4, {{0, 1, 2, 3}, {3, 2, 1, 0}}), 2},
  };
  for (const auto& s : sets) {
    const GaloisMaps g = galois_maps(s.a);
    const std::size_t n = s.a.hopf.dim();
    t.expect(rank(g.can) == s.a.dim() * n && g.can.cols() == s.a.dim() * n, "free G-set: can rank");
    t.expect(coinvariants(s.a).dim() == s.orbits, "free G-set: coinvariants k^{X/G}");
    t.expect(analyze(s.a).size() == s.orbits, "free G-set: |X/G|-Galois");
  }
}

// ---------------------------------------------------------------- 3, 4

struct GaloisFixture {
  std::string name;
  ComoduleAlgebra a;
  std::size_t index_size;
};

std::vector<std::vector<Scalar>> sign_cocycle(const Field& f) {
  std::vector<std::vector<Scalar>> s(2, std::vector<Scalar>(2, f.one()));
  s[1][1] = -f.one();
  return s;
}

std::vector<std::vector<Scalar>> quaternion_cocycle(const Field& f) {
  std::vector<std::vector<Scalar>> s(4, std::vector<Scalar>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t a1 = a >> 1, a2 = a & 1, b1 = b >> 1, b2 = b & 1;
      s[a][b] = ((a1 * b1 + a2 * b2 + a1 * b2) % 2) ? -f.one() : f.one();
    }
  return s;
}

std::vector<GaloisFixture> galois_fixtures(const Field& f) {
  const HopfData z2 = group_algebra(f, cyclic_group(2));
  return {
      {"self kZ2", self_coaction(z2), 1},
      {"self k^Z3", self_coaction(dual_group_algebra(f, cyclic_group(3))), 1},
      {"self kS3", self_coaction(group_algebra(f, symmetric_group_s3())), 1},
      {"self H4", self_coaction(sweedler_h4(f)), 1},
      {"k^X two orbits", regular_gset_function_algebra(f, cyclic_group(2), 2), 2},
      {"k^X Z3", regular_gset_function_algebra(f, cyclic_group(3), 1), 1},
      {"twisted Z2", cocycle_twisted_group_algebra(f, cyclic_group(2), sign_cocycle(f)), 1},
      {"twisted V4", cocycle_twisted_group_algebra(f, klein_four_group(), quaternion_cocycle(f)), 1},
      {"graded M2", graded_matrix_algebra(f, cyclic_group(2), {0, 1}), 2},
      {"graded M3", graded_matrix_algebra(f, cyclic_group(3), {0, 1, 2}), 3},
      {"self kZ2 twice", direct_sum(self_coaction(z2), self_coaction(z2)), 2},
  };
}

std::vector<GaloisFixture> all_galois_fixtures() {
  std::vector<GaloisFixture> out;
  for (const Field& f : {Q, Field::prime(3), Field::prime(5)})
    for (auto& fx : galois_fixtures(f)) {
      fx.name += " over " + f.to_string();
      out.push_back(std::move(fx));
    }
  return out;
}

void modular_invariants(Tally& t) {
  for (const auto& fx : all_galois_fixtures()) {
    const std::string& nm = fx.name;
    const IGaloisObject g = analyze(fx.a);
    t.expect(g.size() == fx.index_size, nm + ": |I|");
    const StructureAlgebra& alg = g.base.algebra;
    const std::size_t d = alg.dim(), n = g.base.hopf.dim();
    const InvariantFunctionalData data = invariant_functional_data(g);
    t.expect(rank(gram_matrix(alg, data.phi_a)) == d, nm + ": φ_A faithful");
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) {
        const auto xs = g.component(i, j).basis_vectors(), ys = g.component(j, i).basis_vectors();
        bool ok = xs.size() == ys.size();
        if (ok && !xs.empty()) {
          Matrix gram(alg.field(), xs.size(), ys.size());
          for (std::size_t r = 0; r < xs.size(); ++r)
            for (std::size_t c = 0; c < ys.size(); ++c) gram(r, c) = dot(data.phi_i[i], alg.multiply(xs[r], ys[c]));
          ok = rank(gram) == xs.size();
        }
        t.expect(ok, nm + ": component pairing non-degenerate");
      }
    t.expect(data.psi_space.dim() == g.size(), nm + ": invariant functional space has dimension |I|");
    // μ bijective and independent of the completion
    std::vector<bool> hit(g.size(), false);
    for (std::size_t i : data.mu) hit[i] = true;
    t.expect(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }), nm + ": μ bijective");
    const std::size_t avail = complete_functionals(g, 3).size();
    t.expect(avail >= (alg.field().is_rationals() ? 3u : 2u), nm + ": enough complete functionals");
    for (std::size_t c = 1; c < avail; ++c) {
      const InvariantFunctionalData other = invariant_functional_data(g, c);
      t.expect(other.psi_a != data.psi_a && other.mu == data.mu, nm + ": μ independent of completion");
    }
    const ModularData m = modular_data(g, data);
    const Vec delta = invariant_functionals(g.base.hopf).delta;
    t.expect(g.base.alpha(m.delta_a) == tensor(m.delta_a, delta), nm + ": α(δ_A) = δ_A⊗δ");
    for (std::size_t i = 0; i < g.size(); ++i)
      t.expect(!m.nu[i].is_zero() && m.theta_prime.apply(g.idempotents[i]) ==
                                         scale(m.nu[i], m.theta.apply(g.idempotents[data.mu[i]])),
               nm + ": δ′_i = ν_i δ_μ(i)");
    bool theta_ok = true;
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t w = 0; w < d; ++w) {
        const Scalar psi = dot(data.psi_a, alg.product(x, w));
        theta_ok = theta_ok && dot(data.phi_a, alg.multiply(alg.basis_vector(x), m.theta.col_vec(w))) == psi &&
                   dot(data.phi_a, alg.multiply(m.theta_prime.col_vec(x), alg.basis_vector(w))) == psi;
      }
    t.expect(theta_ok, nm + ": ψ_A = φ_A(−δ_A) = φ_A(δ′_A −)");
    // ψ_A invariant
    bool inv = true;
    for (std::size_t x = 0; x < d; ++x) {
      Vec lhs(n, alg.field().zero());
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t s = 0; s < n; ++s) lhs[s] += data.psi_a[p] * g.base.coaction(p * n + s, x);
      inv = inv && lhs == scale(data.psi_a[x], g.base.hopf.unit());
    }
    t.expect(inv, nm + ": ψ_A invariant");
    const auto beta = beta_maps(g);
    t.expect(!check_eig1(g, data, beta).has_value(), nm + ": eig1");
    t.expect(!check_eig2(g, data, beta).has_value(), nm + ": eig2");
  }
}

void nakayama_routes(Tally& t) {
  for (const auto& fx : all_galois_fixtures()) {
    const IGaloisObject g = analyze(fx.a);
    const StructureAlgebra& alg = g.base.algebra;
    const InvariantFunctionalData data = invariant_functional_data(g);
    const ModularData m = modular_data(g, data);
    const Matrix solved = nakayama(g, data);
    t.expect(solved == m.sigma_a && nakayama_explicit(g, data) == solved, fx.name + ": σ_A routes differ");
    t.expect(m.sigma_a_prime == alg.left_mult(m.delta_a) * alg.right_mult(m.delta_a_inv) * m.sigma_a,
             fx.name + ": σ′_A = δ_A σ_A δ_A⁻¹");
    if (alg.is_commutative()) t.expect(m.sigma_a.is_identity(), fx.name + ": commutative σ_A = id");
  }
  for (const Field& f : {Q, Field::prime(5)}) {
    const HopfData h4 = sweedler_h4(f);
    const IGaloisObject g = analyze(self_coaction(h4));
    const InvariantFunctionalData data = invariant_functional_data(g);
    const Matrix s = nakayama_explicit(g, data);
    t.expect(s == invariant_functionals(h4).sigma && !s.is_identity(), "H4 self-coaction: σ_A = σ_H");
  }
}

// ---------------------------------------------------------------- 5

void round_trips(Tally& t) {
  const HopfData z2 = group_algebra(Q, cyclic_group(2));
  const std::vector<std::pair<std::string, ComoduleAlgebra>> cs{
      {"k trivial", trivial_coaction(z2, diagonal_algebra(Q, 1))},
      {"kZ2 self", self_coaction(z2)},
      {"k^Z2 self", self_coaction(dual_group_algebra(Q, cyclic_group(2)))},
  };
  for (const auto& [name, c] : cs) {
    const RoundTrip rt = round_trip(c, 0);
    t.expect(rt.forward.full, name + ": full idempotent");
    t.expect(is_galois(rt.forward.galois.base), name + ": intermediate is Galois");
    t.expect(rt.connected && is_connected(rt.forward.galois), name + ": intermediate connected");
    t.expect(rt.verdict == MoritaVerdict::Strict, name + ": context Strict");
    t.expect(rt.corner_iso, name + ": corner isomorphic to C");
    t.expect(rt.corner.algebra.dim() == c.dim() && is_homogeneous(rt.corner.algebra), name + ": corner homogeneous");
    for (auto v : rt.corner.contexts) t.expect(v == MoritaVerdict::Strict, name + ": component contexts Strict");
  }
}

// ---------------------------------------------------------------- 6

std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
  std::vector<Vec> out{Vec{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (std::uint32_t a = 0; a < f.characteristic(); ++a) {
        Vec w = v;
        w.push_back(f.from_int(a));
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Vec> projective_points(const Field& f, std::size_t n) {
  std::vector<Vec> out;
  for (auto& v : all_vectors(f, n)) {
    auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it != v.end() && it->is_one()) out.push_back(std::move(v));
  }
  return out;
}

void push_unique(std::vector<Subspace>& xs, const Subspace& s) {
  if (std::find(xs.begin(), xs.end(), s) == xs.end()) xs.push_back(s);
}

// Closed subspaces: sums of cyclic ones, which exhausts all of them.
template <class Cyclic>
std::vector<Subspace> closed_subspaces(const Field& f, std::size_t n, Cyclic cyclic_of) {
  std::vector<Subspace> cyclic;
  for (const auto& x : projective_points(f, n)) push_unique(cyclic, cyclic_of(x));
  std::vector<Subspace> subs{Subspace(f, n)};
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (const auto& c : cyclic) push_unique(subs, subs[i].sum(c));
  return subs;
}

std::vector<Subspace> all_submodules(const AlgModule& v) {
  return closed_subspaces(v.algebra.field(), v.dim, [&](const Vec& x) { return spin(v, x); });
}

bool has_complement(const std::vector<Subspace>& subs, const Subspace& w) {
  for (const auto& u : subs)
    if (u.intersect(w).is_zero() && u.dim() + w.dim() == w.ambient_dim()) return true;
  return false;
}

bool nilpotent_ideal(const StructureAlgebra& a, const Subspace& i) {
  Subspace p = i;
  for (std::size_t k = 0; k <= a.dim() && !p.is_zero(); ++k) p = product_space(a, p, i);
  return p.is_zero();
}

// Largest nilpotent two-sided ideal, found among all ideals.
Subspace brute_radical(const StructureAlgebra& a) {
  const auto ideals =
      closed_subspaces(a.field(), a.dim(), [&](const Vec& x) { return two_sided_ideal(a, {x}); });
  Subspace best(a.field(), a.dim());
  for (const auto& i : ideals)
    if (nilpotent_ideal(a, i) && i.dim() > best.dim()) best = i;
  for (const auto& i : ideals)
    if (nilpotent_ideal(a, i) && !best.contains(i)) throw Error(ErrorCode::Internal, "no largest nilpotent ideal");
  return best;
}

std::vector<StructureAlgebra> small_algebras(const Field& f, std::mt19937_64& rng) {
  const StructureAlgebra m2 = matrix_algebra(f, 2);
  auto e = [&](std::size_t i) { return unit_vec(f, 4, i); };
  std::vector<StructureAlgebra> out{
      group_algebra(f, cyclic_group(2)).algebra,
      group_algebra(f, cyclic_group(3)).algebra,
      group_algebra(f, cyclic_group(4)).algebra,
      group_algebra(f, cyclic_group(5)).algebra,
      group_algebra(f, klein_four_group()).algebra,
      group_algebra(f, symmetric_group_s3()).algebra,
      dual_group_algebra(f, cyclic_group(3)).algebra,
      sweedler_h4(f).algebra,
      m2,
      direct_sum(m2, diagonal_algebra(f, 1)),
      subalgebra(m2, generated_subalgebra(m2, {e(0), e(1), e(3)})),  // upper triangular
      polynomial_quotient_algebra(Polynomial::from_ints(f, {0, 0, 1})),
      polynomial_quotient_algebra(Polynomial::from_ints(f, {1, 0, 1})),
      polynomial_quotient_algebra(Polynomial::from_ints(f, {0, -1, 0, 1})),
      polynomial_quotient_algebra(Polynomial::from_ints(f, {1, 1, 0, 1, 1})),
  };
  // random subalgebras of upper triangular 3×3 matrices
  const StructureAlgebra m3 = matrix_algebra(f, 3);
  std::uniform_int_distribution<int> coef(0, static_cast<int>(f.characteristic()) - 1);
  for (int k = 0; k < 4; ++k) {
    std::vector<Vec> gens;
    for (int g = 0; g < 2; ++g) {
      Vec v = zero_vec(f, 9);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a; b < 3; ++b) v[a * 3 + b] = f.from_int(coef(rng));
      gens.push_back(v);
    }
    const StructureAlgebra s = subalgebra(m3, generated_subalgebra(m3, gens));
    if (s.dim() <= 6) out.push_back(s);
  }
  return out;
}

// Regular module when small, its submodules and quotients of dim ≤ 5, and a
// few direct sums.
std::vector<AlgModule> small_modules(const StructureAlgebra& a) {
  const AlgModule reg = regular_module(a);
  std::vector<AlgModule> out;
  if (a.dim() <= 5) out.push_back(reg);
  for (const auto& w : all_submodules(reg)) {
    if (w.is_zero() || w.is_full()) continue;
    if (w.dim() <= 5) out.push_back(submodule(reg, w));
    if (a.dim() - w.dim() <= 5) out.push_back(quotient_module(reg, w));
    if (out.size() >= 10) break;
  }
  const std::size_t base = out.size();
  for (std::size_t i = 0; i < base && out.size() < 14; ++i)
    for (std::size_t j = i; j < base && out.size() < 14; ++j)
      if (out[i].dim + out[j].dim <= 5) out.push_back(direct_sum(out[i], out[j]));
  return out;
}

void meataxe_oracle(Tally& t) {
  std::mt19937_64 rng(2024);
  std::size_t modules = 0, algebras = 0;
  for (const Field& f : {Field::prime(3), Field::prime(5)}) {
    std::vector<StructureAlgebra> algs = small_algebras(f, rng);
    for (const auto& a : algs) {
      const std::string nm = "algebra of dim " + std::to_string(a.dim()) + " over " + f.to_string();
      ++algebras;
      t.expect(radical(a) == brute_radical(a), nm + ": radical");
      for (const auto& v : small_modules(a)) {
        ++modules;
        const auto subs = all_submodules(v);
        bool semisimple = true;
        for (const auto& w : subs) semisimple = semisimple && has_complement(subs, w);
        for (std::uint64_t seed : {0u, 1u}) {
          Options o;
          o.seed = seed;
          std::vector<Summand> parts;
          bool threw = false;
          try {
            parts = meataxe_decompose(v, o);
          } catch (const Error& e) {
            threw = e.code() == ErrorCode::NotSemisimple;
            if (!threw) throw;
          }
          t.expect(threw == !semisimple, nm + ": semisimplicity of a dim " + std::to_string(v.dim) + " module");
          if (threw) continue;
          Subspace acc(f, v.dim);
          std::size_t total = 0;
          for (const auto& s : parts) {
            const Subspace img = Subspace::column_space(s.embedding);
            // simple: exactly two submodules
            t.expect(img.dim() == s.module.dim && std::count(subs.begin(), subs.end(), img) == 1 &&
                         all_submodules(s.module).size() == 2,
                     nm + ": summand is a simple submodule");
            acc = acc.sum(img);
            total += s.module.dim;
          }
          t.expect(total == v.dim && acc.is_full(), nm + ": summands span the module");
        }
        t.expect(is_simple(v) == (subs.size() == 2), nm + ": is_simple");
      }
    }
  }
  t.note = std::to_string(algebras) + " algebras, " + std::to_string(modules) + " modules, ";
}

// ---------------------------------------------------------------- 7

void equivariant_semisimplicity(Tally& t) {
  for (const auto& fx : all_galois_fixtures()) {
    const SmashAlgebra s = smash(fx.a);
    t.expect(s.algebra.dim() == fx.a.dim() * fx.a.hopf.dim(), fx.name + ": dim smash");
    bool all_split = false;
    try {
      all_split = wedderburn(s.algebra).all_split();
    } catch (const Error&) {
    }
    t.expect((is_equivariantly_abs_semisimple(fx.a) == Verdict::Yes) == all_split, fx.name + ": verdict vs Wedderburn");
  }
  for (const Field& f : {Q, Field::prime(3), Field::prime(5)}) {
    const SmashAlgebra s = smash(self_coaction(group_algebra(f, cyclic_group(2))));
    const WedderburnForm w = wedderburn(s.algebra);
    t.expect(w.blocks.size() == 1 && w.blocks[0].status == BlockStatus::Split && w.blocks[0].n == 2,
             "kZ2 self smash ≅ M2 over " + f.to_string());
  }
}

// ---------------------------------------------------------------- 8

std::string run(const std::vector<std::string>& args) {
  std::ostringstream out;
  const int code = run_cli(args, out);
  return std::to_string(code) + "\n" + out.str();
}

void serialization(Tally& t) {
  const auto files = bundled_fixture_files();
  t.expect(!files.empty(), "no bundled fixtures");
  for (const auto& f : files) {
    const std::string text = slurp(f.path);
    const Document d = parse_document(text);
    const std::string again = serialize_document(d);
    t.expect(again == text && same_document(parse_document(again), d), f.path + ": parse∘serialize");
    const std::string a1 = run({"analyze", f.path, "--seed", "42"});
    t.expect(a1 == run({"analyze", f.path, "--seed", "42"}), f.path + ": analyze report repeatable");
    const std::string d1 = run({"decompose", f.path, "--seed", "42"});
    t.expect(d1 == run({"decompose", f.path, "--seed", "42"}), f.path + ": decompose report repeatable");
  }
  // in-memory objects built by the pipeline
  for (const auto& fx : galois_fixtures(Q)) {
    const Document d = document_of(fx.a);
    t.expect(same_document(parse_document(serialize_document(d)), d), fx.name + ": round trip");
    const Document s = document_of(smash(fx.a).algebra);
    t.expect(same_document(parse_document(serialize_document(s)), s), fx.name + ": smash round trip");
  }
  const std::string trivial = std::string(HOPFKIT_SOURCE_DIR) + "/fixtures/trivial-group-Z2.hkd";
  t.expect(run({"correspond", trivial, "--seed", "7"}) == run({"correspond", trivial, "--seed", "7"}),
           "correspond report repeatable");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"Hopf invariants", hopf_invariants},
      {"Galois verdicts", galois_verdicts},
      {"invariant functionals and modular data on I-Galois fixtures", modular_invariants},
      {"Nakayama route equality", nakayama_routes},
      {"correspondence round trip", round_trips},
      {"meataxe and radical against brute force over F3, F5", meataxe_oracle},
      {"equivariant semisimplicity vs smash Wedderburn form", equivariant_semisimplicity},
      {"serialization and deterministic reports", serialization},
  };
  const auto start = std::chrono::steady_clock::now();
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(t);
    } catch (const std::exception& e) {
      t.failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu: %s  %s (%s%zu checks, %.2f s)%s%s\n", i + 1, t.ok() ? "PASS" : "FAIL",
                criteria[i].first.c_str(), t.note.c_str(), t.checks, secs, t.ok() ? "" : ": ", t.failure.c_str());
    std::fflush(stdout);
    all = all && t.ok();
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("total %.2f s, %s\n", total, all ? "all criteria pass" : "some criteria FAIL");
  return all ? 0 : 1;
}
