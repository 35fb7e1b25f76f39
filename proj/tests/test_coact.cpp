#include "doctest.h"
#include "hopfkit/examples.hpp"

using namespace hopfkit;

namespace {

const Field Q = Field::rationals();
const Field F3 = Field::prime(3);

std::vector<std::vector<Scalar>> constant_cocycle(const Field& f, std::size_t n) {
  return std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, f.one()));
}

// σ(g,g) = −1 on ℤ/2
std::vector<std::vector<Scalar>> sign_cocycle(const Field& f) {
  auto s = constant_cocycle(f, 2);
  s[1][1] = -f.one();
  return s;
}

// (−1)^{a1 b1 + a2 b2 + a1 b2} on ℤ/2 × ℤ/2, elements indexed 2·a1 + a2
std::vector<std::vector<Scalar>> quaternion_cocycle(const Field& f) {
  std::vector<std::vector<Scalar>> s(4, std::vector<Scalar>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t a1 = a >> 1, a2 = a & 1, b1 = b >> 1, b2 = b & 1;
      s[a][b] = ((a1 * b1 + a2 * b2 + a1 * b2) % 2) ? -f.one() : f.one();
    }
  return s;
}

struct Fixture {
  std::string name;
  ComoduleAlgebra a;
};

std::vector<Fixture> fixtures(const Field& f) {
  std::vector<Fixture> out;
  out.push_back({"self kZ2", self_coaction(group_algebra(f, cyclic_group(2)))});
  out.push_back({"self k^Z3", self_coaction(dual_group_algebra(f, cyclic_group(3)))});
  out.push_back({"self kS3", self_coaction(group_algebra(f, symmetric_group_s3()))});
  out.push_back({"self H4", self_coaction(sweedler_h4(f))});
  out.push_back({"k^X two orbits", regular_gset_function_algebra(f, cyclic_group(2), 2)});
  out.push_back({"k^X Z3 regular", regular_gset_function_algebra(f, cyclic_group(3), 1)});
  out.push_back({"twisted Z2", cocycle_twisted_group_algebra(f, cyclic_group(2), sign_cocycle(f))});
  out.push_back({"twisted Klein", cocycle_twisted_group_algebra(f, klein_four_group(), quaternion_cocycle(f))});
  out.push_back({"graded M2", graded_matrix_algebra(f, cyclic_group(2), {0, 1})});
  return out;
}

// ω ⇀ b = b_(0) ω(b_(1)), as a matrix on A.
Matrix hit(const ComoduleAlgebra& a, const Vec& omega) {
  const std::size_t d = a.dim(), n = a.hopf.dim();
  Matrix m(a.field(), d, d);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t t = 0; t < n; ++t) m(p, b) += a.coaction(p * n + t, b) * omega[t];
  return m;
}

// The inverse of can for (H, Δ): a⊗h ↦ a S(h_(1)) ⊗ h_(2).
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

}  // namespace

TEST_CASE("fixtures are comodule algebras") {
  for (const auto& fx : fixtures(Q)) {
    CAPTURE(fx.name);
    const AxiomReport rep = check_comodule_algebra(fx.a);
    CHECK_MESSAGE(rep.all_passed(), rep.to_string());
  }
  // a coaction that is not multiplicative: e ↦ e⊗1, a ↦ a⊗1 + a⊗a on kZ2
  const HopfData z2 = group_algebra(Q, cyclic_group(2));
  ComoduleAlgebra bad = self_coaction(z2);
  bad.coaction(1 * 2 + 0, 1) = Q.one();
  const AxiomReport rep = check_comodule_algebra(bad);
  CHECK_FALSE(rep.all_passed());
  CHECK_FALSE(rep.find("counit")->passed);
  bad.coaction = Matrix(Q, 3, 2);
  CHECK(check_comodule_algebra(bad).first_failure()->name == "shapes");
}

TEST_CASE("self-coactions are Galois with inverse via the antipode") {
  for (const HopfData& h : {group_algebra(Q, cyclic_group(2)), dual_group_algebra(Q, cyclic_group(3)),
                            group_algebra(Q, symmetric_group_s3()), sweedler_h4(Q), sweedler_h4(F3)}) {
    const ComoduleAlgebra a = self_coaction(h);
    CHECK(is_homogeneous(a));
    const GaloisMaps g = galois_maps(a);
    CHECK(g.relations.dim() == 0);
    REQUIRE(g.bijective());
    const Matrix inv = self_can_inverse(h);
    const std::size_t n = h.dim();
    CHECK((g.can * g.quotient.projection * inv).is_identity());
    CHECK((inv * g.can * g.quotient.projection).is_identity());
    CHECK(galois_inverse(a) == g.quotient.projection * inv);
    CHECK(rank(g.right_can) == n * n);
  }
}

TEST_CASE("trivial coactions on algebras of dim >= 2 are not Galois") {
  const HopfData z2 = group_algebra(Q, cyclic_group(2));
  const HopfData d3 = dual_group_algebra(Q, cyclic_group(3));
  for (const StructureAlgebra& alg : {diagonal_algebra(Q, 2), matrix_algebra(Q, 2), z2.algebra}) {
    for (const HopfData& h : {z2, d3}) {
      const ComoduleAlgebra a = trivial_coaction(h, alg);
      CHECK(check_comodule_algebra(a).all_passed());
      CHECK(coinvariants(a).is_full());
      const GaloisMaps g = galois_maps(a);
      CHECK(g.quotient.projection.rows() == alg.dim());  // A ⊗_A A = A
      CHECK_FALSE(g.bijective());
      CHECK_FALSE(is_galois(a));
      CHECK_THROWS_AS(galois_inverse(a), Error);
    }
  }
  // the one-dimensional algebra with the trivial coaction is Galois only for H = k
  const StructureAlgebra k1 = diagonal_algebra(Q, 1);
  CHECK_FALSE(is_galois(trivial_coaction(z2, k1)));
  CHECK(is_galois(trivial_coaction(group_algebra(Q, cyclic_group(1)), k1)));
}

TEST_CASE("free G-set function algebras") {
  for (std::size_t copies = 1; copies <= 3; ++copies)
    for (const GroupTable& g : {cyclic_group(2), cyclic_group(3), symmetric_group_s3()}) {
      const ComoduleAlgebra a = regular_gset_function_algebra(Q, g, copies);
      const std::size_t n = g.order(), d = n * copies;
      CHECK(coinvariants(a).dim() == copies);
      const GaloisMaps gm = galois_maps(a);
      // A ⊗_{k^{X/G}} A has dim Σ_orbits |orbit|² = copies·n²
      CHECK(gm.quotient.projection.rows() == copies * n * n);
      CHECK(rank(gm.can) == d * n);
      CHECK(gm.bijective());
    }
  // non-free action: ℤ/2 swapping two points and fixing a third
  const GroupTable z2 = cyclic_group(2);
  CHECK_THROWS_AS(free_gset_function_algebra(Q, z2, 3, {{0, 1, 2}, {1, 0, 2}}), Error);
  CHECK_THROWS_AS(free_gset_function_algebra(Q, z2, 2, {{0, 1}, {0, 1}}), Error);
  // not an action
  CHECK_THROWS_AS(free_gset_function_algebra(Q, cyclic_group(3), 3, {{0, 1, 2}, {1, 2, 0}, {1, 2, 0}}), Error);
}

TEST_CASE("cocycle twisted group algebras") {
  const ComoduleAlgebra triv = cocycle_twisted_group_algebra(Q, cyclic_group(2), constant_cocycle(Q, 2));
  CHECK(triv.algebra.mult() == group_algebra(Q, cyclic_group(2)).algebra.mult());
  CHECK(is_galois(triv));

  const ComoduleAlgebra tw = cocycle_twisted_group_algebra(Q, cyclic_group(2), sign_cocycle(Q));
  CHECK(is_galois(tw));
  CHECK(is_homogeneous(tw));
  CHECK(tw.algebra.product(1, 1) == scale(-Q.one(), unit_vec(Q, 2, 0)));  // u² = −1
  // A graded isomorphism to the untwisted one sends u to c·u with (cu)² = 1,
  // i.e. −c² = 1; over ℚ the square of a rational is never −1.
  for (long long num = -6; num <= 6; ++num)
    for (long long den = 1; den <= 6; ++den) {
      const Scalar c = Q.from_rational(mpq_class(static_cast<long>(num), static_cast<long>(den)));
      CHECK(-(c * c) != Q.one());
    }
  // over F5, 2² = −1 and the twist becomes trivial
  const Field F5 = Field::prime(5);
  const Scalar c = F5.from_int(2);
  CHECK(-(c * c) == F5.one());

  const ComoduleAlgebra q = cocycle_twisted_group_algebra(Q, klein_four_group(), quaternion_cocycle(Q));
  const GaloisMaps g = galois_maps(q);
  CHECK(rank(g.can) == 16);
  CHECK(g.can.cols() == 16);
  CHECK_FALSE(q.algebra.is_commutative());

  auto broken = sign_cocycle(Q);
  broken[0][1] = Q.from_int(2);
  CHECK_THROWS_AS(cocycle_twisted_group_algebra(Q, cyclic_group(2), broken), Error);
  auto zero = constant_cocycle(Q, 2);
  zero[1][0] = Q.zero();
  CHECK_THROWS_AS(cocycle_twisted_group_algebra(Q, cyclic_group(2), zero), Error);
}

TEST_CASE("Reynolds operator") {
  for (const auto& fx : fixtures(Q)) {
    CAPTURE(fx.name);
    const Matrix r = reynolds(fx.a);
    const Subspace coinv = coinvariants(fx.a);
    CHECK(Subspace::column_space(r) == coinv);
    const InvariantPair ip = invariant_functionals(fx.a.hopf);
    if (ip.normalized) CHECK(r * r == r);
  }
}

TEST_CASE("smash products") {
  for (const auto& fx : fixtures(Q)) {
    CAPTURE(fx.name);
    const SmashAlgebra s = smash(fx.a);
    const std::size_t d = fx.a.dim(), n = fx.a.hopf.dim();
    CHECK(s.algebra.dim() == d * n);
    CHECK_FALSE(s.algebra.associativity_violation().has_value());
    // a#ω acts on A by b ↦ a (ω ⇀ b); this is a representation
    std::vector<Matrix> rep;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t k = 0; k < n; ++k) rep.push_back(fx.a.algebra.left(a) * hit(fx.a, unit_vec(Q, n, k)));
    const AlgModule m{s.algebra, d, rep};
    CHECK(m.is_valid());
    // Galois coactions: A#Ĥ acts faithfully on A
    if (is_galois(fx.a)) {
      std::vector<Vec> flat;
      for (const auto& x : rep) {
        Vec v;
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) v.push_back(x(r, c));
        flat.push_back(v);
      }
      CHECK(Subspace::span(Q, d * d, flat).dim() == d * n);
    }
  }
  // kℤ/2 self-coaction: the smash product is M₂
  const SmashAlgebra s = smash(self_coaction(group_algebra(Q, cyclic_group(2))));
  const WedderburnForm w = wedderburn(s.algebra);
  REQUIRE(w.blocks.size() == 1);
  CHECK(w.blocks[0].n == 2);
  CHECK(w.blocks[0].status == BlockStatus::Split);
}

TEST_CASE("equivariant modules and smash modules") {
  for (const auto& fx : fixtures(Q)) {
    CAPTURE(fx.name);
    const SmashAlgebra s = smash(fx.a);
    const EquivariantModule reg = regular_equivariant_module(fx.a);
    CHECK(check_equivariant_module(reg).all_passed());
    const AlgModule m = equivariant_to_smash(reg, s);
    CHECK(m.is_valid());
    const EquivariantModule back = smash_to_equivariant(m, fx.a);
    CHECK(back.coaction == reg.coaction);
    for (std::size_t i = 0; i < fx.a.dim(); ++i) CHECK(back.action[i] == reg.action[i]);
    // A ⊗ H with the right regular comodule
    const Comodule hc{fx.a.hopf.dim(), fx.a.hopf.coproduct};
    CHECK(check_comodule(fx.a.hopf, hc).all_passed());
    const EquivariantModule t = equivariant_tensor_module(fx.a, hc);
    CHECK(check_equivariant_module(t).all_passed());
    CHECK(equivariant_to_smash(t, s).is_valid());
  }
  // breaking the coaction breaks equivariance
  const auto fx = self_coaction(group_algebra(Q, cyclic_group(3)));
  EquivariantModule bad = regular_equivariant_module(fx);
  bad.coaction = trivial_coaction(fx.hopf, fx.algebra).coaction;
  const AxiomReport rep = check_equivariant_module(bad);
  CHECK(rep.find("coassociativity")->passed);
  CHECK_FALSE(rep.find("equivariance")->passed);
}

TEST_CASE("equivariant absolute semisimplicity agrees with the Wedderburn form of the smash") {
  for (const Field& f : {Q, F3, Field::prime(5)}) {
    for (const auto& fx : fixtures(f)) {
      CAPTURE(fx.name);
      CAPTURE(f.to_string());
      const SmashAlgebra s = smash(fx.a);
      CHECK(s.algebra.dim() == fx.a.dim() * fx.a.hopf.dim());
      const Verdict v = is_equivariantly_abs_semisimple(fx.a);
      bool all_split = false;
      try {
        all_split = wedderburn(s.algebra).all_split();
      } catch (const Error&) {
        all_split = false;
      }
      CHECK((v == Verdict::Yes) == all_split);
    }
  }
  // Galois objects have smash ≅ End_{A^α}(A): kZ/3 over F3 self-coaction is still split
  CHECK(is_equivariantly_abs_semisimple(self_coaction(group_algebra(F3, cyclic_group(3)))) == Verdict::Yes);
  // trivial coaction: A#Ĥ ≅ A ⊗ Ĥ, not semisimple when A is not
  const HopfData z2 = group_algebra(Q, cyclic_group(2));
  const StructureAlgebra dual_numbers = polynomial_quotient_algebra(Polynomial::from_ints(Q, {0, 0, 1}));
  CHECK(is_equivariantly_abs_semisimple(trivial_coaction(z2, dual_numbers)) == Verdict::No);
}

TEST_CASE("double smash and biduality context") {
  for (const ComoduleAlgebra& a :
       {self_coaction(group_algebra(Q, cyclic_group(2))), trivial_coaction(group_algebra(Q, cyclic_group(2)), diagonal_algebra(Q, 1)),
        self_coaction(dual_group_algebra(Q, cyclic_group(2))), regular_gset_function_algebra(F3, cyclic_group(2), 1)}) {
    const DoubleSmash d = double_smash_twisted(a);
    const std::size_t m = d.inner.algebra.dim(), n = a.hopf.dim();
    CHECK(d.outer.dim() == m * n);
    const AxiomReport rep = check_comodule_algebra(d.outer);
    CHECK_MESSAGE(rep.all_passed(), rep.to_string());
    // coinvariants are A#Ĥ
    CHECK(coinvariants(d.outer) == Subspace::column_space(d.embed_inner));
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        CHECK(d.embed_inner.apply(d.inner.algebra.product(x, y)) ==
              d.outer.algebra.multiply(d.embed_inner.col_vec(x), d.embed_inner.col_vec(y)));
    CHECK(is_galois(d.outer));
    // M = A#Ĥ is a D-module
    const AlgModule mm{d.outer.algebra, m, double_smash_action_on_smash(d)};
    CHECK(mm.is_valid());

    const BidualityContext ctx = biduality_context(d);
    const MoritaContextData md = context_from_subspaces(ctx.ambient, ctx.parts);
    CHECK(md.dims[0][0] == m * n);
    CHECK(md.dims[1][1] == a.dim());
    CHECK(verify_morita(md) == MoritaVerdict::Strict);
  }
}

TEST_CASE("coinvariant local units") {
  for (const auto& fx : fixtures(Q)) CHECK(has_coinvariant_local_units(fx.a));
  // coinvariants of the function algebra are the orbit sums
  const ComoduleAlgebra a = regular_gset_function_algebra(Q, cyclic_group(3), 2);
  const Subspace c = coinvariants(a);
  CHECK(c.contains(Vec{Q.one(), Q.one(), Q.one(), Q.zero(), Q.zero(), Q.zero()}));
  CHECK(c.contains(Vec{Q.zero(), Q.zero(), Q.zero(), Q.one(), Q.one(), Q.one()}));
}
