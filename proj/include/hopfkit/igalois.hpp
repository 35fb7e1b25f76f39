#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/coact.hpp"

namespace hopfkit {

/// A Galois coaction with coinvariants ≅ k_I, split into components
/// A_ij = p_i A p_j.
struct IGaloisObject {
  ComoduleAlgebra base;
  std::vector<Vec> idempotents;                  // p_i, orthogonal, summing to 1
  std::vector<std::vector<Subspace>> components; // components[i][j] = A_ij
  GaloisMaps galois;
  Matrix can_inverse;        // A⊗H → A⊗_{k_I}A (quotient coordinates)
  Matrix right_can_inverse;  // same for x⊗y ↦ α(x)(y⊗1)

  std::size_t size() const { return idempotents.size(); }
  const Subspace& component(std::size_t i, std::size_t j) const { return components[i][j]; }
};

/// Throws NotGalois, CoinvariantsNotSplit.
IGaloisObject analyze(const ComoduleAlgebra& a);

/// Restriction of α to a subalgebra S with α(S) ⊆ S⊗H, on the echelon basis of S.
ComoduleAlgebra restrict_coaction(const ComoduleAlgebra& a, const Subspace& s);

/// a⊗a′ ↦ Σ_i a p_i ⊗ p_i a′, from quotient coordinates into A⊗A.
Matrix splitting_map(const IGaloisObject& g);

/// Classes of i ∼ j ⟺ A_ij ≠ 0, each sorted, ordered by least element.
std::vector<std::vector<std::size_t>> connectivity(const IGaloisObject& g);
bool is_connected(const IGaloisObject& g);
std::vector<IGaloisObject> split_connected(const IGaloisObject& g);

struct InvariantFunctionalData {
  Matrix reynolds;
  std::vector<Vec> phi_i;  // φ_i(a) = φ_i(p_i a p_i), as functionals on A
  Vec phi_a;
  Subspace psi_space;      // all invariant functionals
  Vec psi_a;               // complete one
  std::vector<std::size_t> mu;
  bool left_complete = false, right_complete = false;
  std::size_t completion = 0;  // index in the deterministic search order
};

/// φ part only (psi fields empty).
InvariantFunctionalData phi_components(const IGaloisObject& g);
/// Complete invariant functionals in the deterministic search order: single
/// basis vectors, then sums over subsets, then small integer combinations.
std::vector<Vec> complete_functionals(const IGaloisObject& g, std::size_t count);
/// Full φ and ψ data, with ψ_A the `completion`-th complete functional.
/// Throws NoCompleteFunctional.
InvariantFunctionalData invariant_functional_data(const IGaloisObject& g, std::size_t completion = 0);
/// μ for a given invariant functional; throws NoCompleteFunctional if ψ is not complete.
std::vector<std::size_t> permutation_of(const IGaloisObject& g, const Vec& psi);

struct ModularData {
  Matrix theta, theta_prime;
  std::vector<std::size_t> kappa;  // μ⁻¹
  Vec delta_a, delta_a_inv, delta_a_prime, delta_a_prime_inv;
  std::vector<Scalar> nu;
  Matrix sigma_a, sigma_a_prime;
};

ModularData modular_data(const IGaloisObject& g, const InvariantFunctionalData& f);

/// φ_A(xy) = φ_A(yσ_A(x)) solved directly.
Matrix nakayama(const IGaloisObject& g, const InvariantFunctionalData& f);

/// β_i(h) = 𝔰(can⁻¹(p_i ⊗ h)) for basis h; entry i is (dimA²) × dimH.
std::vector<Matrix> beta_maps(const IGaloisObject& g);

/// First basis triple (i, h, x) where the identity fails, if any.
std::optional<std::string> check_eig1(const IGaloisObject& g, const InvariantFunctionalData& f,
                                      const std::vector<Matrix>& beta);
std::optional<std::string> check_eig2(const IGaloisObject& g, const InvariantFunctionalData& f,
                                      const std::vector<Matrix>& beta);

/// θ_{h′} built from the right Galois map, with φ(h′) = 1.
Matrix theta_explicit(const IGaloisObject& g, const InvariantFunctionalData& f);

/// σ_A assembled from the pairs x ↦ x′ built out of β_i.
Matrix nakayama_explicit(const IGaloisObject& g, const InvariantFunctionalData& f);

struct HomogeneousCorner {
  ComoduleAlgebra algebra;  // (A_ii, α restricted)
  Subspace space;           // A_ii inside A
  std::vector<MoritaVerdict> contexts;  // (A_ii, A_ij, A_ji, A_jj) for each j
};

/// Throws Disconnected.
HomogeneousCorner homogeneous_from_galois(const IGaloisObject& g, std::size_t i);

struct GaloisFromHomogeneous {
  DoubleSmash double_smash;
  Vec p;                  // full idempotent in D
  Subspace corner_space;  // pDp inside D
  bool full = false;      // DpD = D
  IGaloisObject galois;   // on pDp
};

/// Throws NotHomogeneous, CannotCertifySplit, NotEquivariantlyAbsolutelySemisimple.
GaloisFromHomogeneous galois_from_homogeneous(const ComoduleAlgebra& c, const Options& opts = {});

/// Strict context between C and the corner B_ii, read off the linking algebra
/// of the biduality context.
struct RoundTrip {
  GaloisFromHomogeneous forward;
  HomogeneousCorner corner;
  bool connected = false;
  MoritaVerdict verdict = MoritaVerdict::NotSurjective;
  bool corner_iso = false;  // π restricts to an algebra isomorphism B_ii → eQe
};
RoundTrip round_trip(const ComoduleAlgebra& c, std::size_t i, const Options& opts = {});

struct EquivariantSimple {
  std::size_t index = 0;
  std::size_t dim = 0;
  bool simple = false;
};
struct EquivariantSimplesReport {
  std::vector<EquivariantSimple> simples;
  bool pairwise_non_isomorphic = false;
  bool maximal = false;
};
/// M̃_j = ⊕_i A_ij as smash modules. Throws Disconnected / Undetermined.
EquivariantSimplesReport equivariant_simples_report(const IGaloisObject& g, const Options& opts = {});

}  // namespace hopfkit
