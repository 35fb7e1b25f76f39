#pragma once

#include <stop_token>
#include <string>
#include <vector>

#include "hopfkit/assoc.hpp"

namespace hopfkit {

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // first violating basis tuple when failed
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck* first_failure() const;
  const AxiomCheck* find(std::string_view name) const;
  std::string to_string() const;
};

/// Product in A ⊗ B: (a⊗b)(c⊗d) = ac ⊗ bd.
Vec tensor_multiply(const StructureAlgebra& a, const StructureAlgebra& b, const Vec& x, const Vec& y);

/// Finite-dimensional Hopf algebra. coproduct is n² × n, counit a length-n
/// row, antipode n × n.
struct HopfData {
  StructureAlgebra algebra;
  Matrix coproduct;
  Vec counit;
  Matrix antipode;

  const Field& field() const { return algebra.field(); }
  std::size_t dim() const { return algebra.dim(); }
  Vec unit() const { return algebra.unit_or_throw(); }
  Vec delta(const Vec& h) const { return coproduct.apply(h); }
  Scalar epsilon(const Vec& h) const { return dot(counit, h); }
  Vec s(const Vec& h) const { return antipode.apply(h); }

  friend bool operator==(const HopfData& a, const HopfData& b);
};

AxiomReport check_hopf(const HopfData& h, std::stop_token stop = {});

struct InvariantPair {
  Vec phi;       // left invariant functional, as coordinates on the basis
  Vec psi;       // φ∘S, right invariant
  Vec delta;     // modular grouplike
  Matrix sigma;  // modular automorphism: φ(ab) = φ(b σ(a))
  bool normalized = false;  // φ(1) = 1 was achievable
};

/// Throws NoInvariantFunctional / NonUniqueFunctional on bad data.
InvariantPair invariant_functionals(const HopfData& h);
/// Full solution space of (id⊗φ)Δ(h) = φ(h)1.
Subspace left_invariant_functional_space(const HopfData& h);
/// Gram matrix G[a][b] = φ(e_a e_b).
Matrix gram_matrix(const StructureAlgebra& a, const Vec& phi);
bool faithfulness_check(const HopfData& h, const Vec& phi);
/// Throws Singular when the antipode is not invertible.
Matrix antipode_inverse(const HopfData& h);
/// The dual Hopf algebra on the dual basis.
HopfData dual_hopf(const HopfData& h);
/// h ↦ φ(h ·) in dual coordinates; column h holds the functional.
Matrix fourier_map(const HopfData& h, const Vec& phi);

}  // namespace hopfkit
