#pragma once

#include <array>
#include <stop_token>
#include <vector>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

/// Right comodule algebra (A, α) with α: A → A⊗H stored as (dim A · dim H) × dim A,
/// index a*dimH + t for e_a ⊗ e_t.
struct ComoduleAlgebra {
  HopfData hopf;
  StructureAlgebra algebra;
  Matrix coaction;

  const Field& field() const { return algebra.field(); }
  std::size_t dim() const { return algebra.dim(); }
  Vec alpha(const Vec& a) const { return coaction.apply(a); }

  friend bool operator==(const ComoduleAlgebra& a, const ComoduleAlgebra& b);
};

/// Plain H-comodule (no algebra).
struct Comodule {
  std::size_t dim = 0;
  Matrix coaction;  // (dim·dimH) × dim
};

AxiomReport check_comodule_algebra(const ComoduleAlgebra& a, std::stop_token stop = {});
AxiomReport check_comodule(const HopfData& h, const Comodule& v);

/// Trivial coaction a ↦ a⊗1.
ComoduleAlgebra trivial_coaction(const HopfData& h, const StructureAlgebra& a);

/// A^α as a subspace of A.
Subspace coinvariants(const ComoduleAlgebra& a);
/// Unital with 1 coinvariant (finite-dimensional form of coinvariant local units).
bool has_coinvariant_local_units(const ComoduleAlgebra& a);
bool is_homogeneous(const ComoduleAlgebra& a);

/// Φ = (id⊗φ)α, with φ the normalized left invariant functional of H.
Matrix reynolds(const ComoduleAlgebra& a);

struct GaloisMaps {
  Subspace relations;      // in A⊗A, spanned by xe⊗y − x⊗ey
  QuotientMap quotient;    // A⊗A → A⊗_{A^α}A
  Matrix can;              // (dimA·dimH) × dim quotient
  Matrix right_can;        // x⊗y ↦ α(x)(y⊗1)
  bool bijective() const;
};

GaloisMaps galois_maps(const ComoduleAlgebra& a);
bool is_galois(const ComoduleAlgebra& a);
/// can⁻¹ as a map A⊗H → A⊗_{A^α}A (quotient coordinates). Throws NotGalois.
Matrix galois_inverse(const GaloisMaps& g);
Matrix galois_inverse(const ComoduleAlgebra& a);

/// Precomputed A#Ĥ. Basis e_a # f_k at index a*dimH + k, f the dual basis of H.
struct SmashAlgebra {
  ComoduleAlgebra base;
  StructureAlgebra algebra;
  std::size_t a_dim = 0, h_dim = 0;
  Matrix embed_a;     // a ↦ a#ε
  Matrix embed_dual;  // ω ↦ 1#ω
  /// χ⊗b ↦ b_(0) # χ(b_(1) −), from Ĥ⊗A (index k*dimA + b) to A⊗Ĥ.
  Matrix flip;
};

SmashAlgebra smash(const ComoduleAlgebra& a);

/// ((A#Ĥ)#H, S²-twisted coaction); basis (x, t) at index x*dimH + t.
struct DoubleSmash {
  SmashAlgebra inner;
  ComoduleAlgebra outer;
  Matrix embed_inner;  // x ↦ x#1
};
DoubleSmash double_smash_twisted(const ComoduleAlgebra& a);

/// Left action of (A#Ĥ)#H on M = A#Ĥ: (x#h)·m = x (h·m), h·(a#ω) = a#ω(−h).
/// Entry i holds the action of basis element i of the double smash.
std::vector<Matrix> double_smash_action_on_smash(const DoubleSmash& d);

struct EquivariantModule {
  ComoduleAlgebra base;
  std::size_t dim = 0;
  std::vector<Matrix> action;  // ρ(e_i)
  Matrix coaction;             // δ_V, (dim·dimH) × dim
};

AxiomReport check_equivariant_module(const EquivariantModule& v);
AlgModule equivariant_to_smash(const EquivariantModule& v, const SmashAlgebra& s);
EquivariantModule smash_to_equivariant(const AlgModule& w, const ComoduleAlgebra& base);
/// A with δ_V = α.
EquivariantModule regular_equivariant_module(const ComoduleAlgebra& a);
/// A⊗V with the diagonal coaction and the action on the first leg.
EquivariantModule equivariant_tensor_module(const ComoduleAlgebra& a, const Comodule& v);

Verdict is_equivariantly_abs_semisimple(const ComoduleAlgebra& a, const Options& opts = {});

/// Linking algebra of the biduality context between A and D = (A#Ĥ)#H,
/// realized inside End_k(M ⊕ A) with M = A#Ĥ. Rows/cols 0..dim M−1 are M.
struct BidualityContext {
  std::size_t m_dim = 0, a_dim = 0;
  StructureAlgebra ambient;                      // End_k(M ⊕ A), matrix units
  std::array<std::array<Subspace, 2>, 2> parts;  // Q11 = π(D), Q12, Q21, Q22 = λ(A)
  Matrix pi_d;                                   // D → ambient
  Matrix pi_a;                                   // A → ambient
};
BidualityContext biduality_context(const DoubleSmash& d);

}  // namespace hopfkit
