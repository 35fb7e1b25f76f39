#pragma once

#include <string>
#include <vector>

#include "hopfkit/coact.hpp"

namespace hopfkit {

/// Group multiplication table: table[g][h] = index of gh. Element names are
/// used as basis labels.
struct GroupTable {
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::string> names;

  std::size_t order() const { return table.size(); }
  std::size_t identity() const;
  std::size_t inverse(std::size_t g) const;
  std::size_t mul(std::size_t g, std::size_t h) const { return table[g][h]; }
};

/// Throws InvalidInput unless the table is a group.
void validate_group(const GroupTable& g);

GroupTable cyclic_group(std::size_t n);
GroupTable klein_four_group();
/// S3 with elements e, r, r², s, sr, sr² (r³ = s² = e, rs = sr²).
GroupTable symmetric_group_s3();
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

HopfData group_algebra(const Field& f, const GroupTable& g);
/// k^G on the dual basis of point masses.
HopfData dual_group_algebra(const Field& f, const GroupTable& g);
/// Basis 1, g, x, gx. Throws InvalidInput in characteristic 2.
HopfData sweedler_h4(const Field& f);

/// u_g u_h = σ(g,h) u_{gh}, u_g ↦ u_g ⊗ g over kG. sigma[g][h] must be a
/// nonvanishing 2-cocycle.
ComoduleAlgebra cocycle_twisted_group_algebra(const Field& f, const GroupTable& g,
                                              const std::vector<std::vector<Scalar>>& sigma);

/// k^X over k^G for a free left action; act[g][x] = g·x. The coaction is
/// dual to the right action x◁g = g⁻¹·x.
ComoduleAlgebra free_gset_function_algebra(const Field& f, const GroupTable& g, std::size_t set_size,
                                           const std::vector<std::vector<std::size_t>>& act);

/// X = G ⊔ G ⊔ ... (copies of the regular action).
ComoduleAlgebra regular_gset_function_algebra(const Field& f, const GroupTable& g, std::size_t copies);

/// (H, Δ).
ComoduleAlgebra self_coaction(const HopfData& h);

/// M_n(k) graded over kG with deg E_ab = d_a⁻¹ d_b. With n = |G| and distinct
/// degrees this is a connected |G|-Galois object.
ComoduleAlgebra graded_matrix_algebra(const Field& f, const GroupTable& g,
                                      const std::vector<std::size_t>& degrees);

/// A ⊕ B with the blockwise coaction (same Hopf algebra).
ComoduleAlgebra direct_sum(const ComoduleAlgebra& a, const ComoduleAlgebra& b);

}  // namespace hopfkit
