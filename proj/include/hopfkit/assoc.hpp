#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <stop_token>
#include <string>
#include <vector>

#include "hopfkit/linalg.hpp"
#include "hopfkit/polynomial.hpp"

namespace hopfkit {

/// Knobs for randomized routines. Always passed explicitly.
struct Options {
  std::uint64_t seed = 0;
  int split_search_budget = 64;
};

/// Finite-dimensional associative algebra given by structure constants.
/// `mult` is dim × dim², column i*dim+j holding the coordinates of e_i e_j.
/// Cheap to copy: the data is shared and immutable.
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  StructureAlgebra(Field field, std::size_t dim, Matrix mult, std::vector<std::string> labels = {});
  static StructureAlgebra from_products(Field field, std::size_t dim,
                                        const std::function<Vec(std::size_t, std::size_t)>& product,
                                        std::vector<std::string> labels = {});

  const Field& field() const;
  std::size_t dim() const;
  const Matrix& mult() const;
  const std::vector<std::string>& labels() const;

  Vec basis_vector(std::size_t i) const { return unit_vec(field(), dim(), i); }
  Vec zero() const { return zero_vec(field(), dim()); }
  /// e_i e_j
  Vec product(std::size_t i, std::size_t j) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  /// Left/right multiplication by e_i.
  const Matrix& left(std::size_t i) const;
  const Matrix& right(std::size_t i) const;
  Matrix left_mult(const Vec& a) const;
  Matrix right_mult(const Vec& a) const;

  /// First (i,j,k) with (e_i e_j)e_k != e_i(e_j e_k).
  std::optional<std::array<std::size_t, 3>> associativity_violation(std::stop_token stop = {}) const;
  bool is_commutative() const;

  /// Two-sided unit, computed once.
  const std::optional<Vec>& unit() const;
  Vec unit_or_throw() const;
  /// Greedy generating set (basis indices); with the unit they generate the algebra.
  const std::vector<std::size_t>& generators() const;

  friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b);

 private:
  struct Data;
  struct Cache;
  std::shared_ptr<const Data> d_;
  std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------- constructions

StructureAlgebra zero_product_algebra(const Field& field, std::size_t dim);
/// k_I: orthogonal idempotents p_0..p_{n-1}.
StructureAlgebra diagonal_algebra(const Field& field, std::size_t n);
/// M_n(k), basis E_ab at index a*n+b.
StructureAlgebra matrix_algebra(const Field& field, std::size_t n);
/// k[x]/(f), basis 1, x, ..., x^{d-1}.
StructureAlgebra polynomial_quotient_algebra(const Polynomial& f);
StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b);
StructureAlgebra opposite(const StructureAlgebra& a);
/// Subalgebra on the echelon basis of `s` (checked closed).
StructureAlgebra subalgebra(const StructureAlgebra& a, const Subspace& s);
/// Quotient by a two-sided ideal, on the non-pivot coordinates.
StructureAlgebra quotient_algebra(const StructureAlgebra& a, const Subspace& ideal);

/// Smallest subspace containing `vectors` closed under left and right
/// multiplication by the algebra.
Subspace two_sided_ideal(const StructureAlgebra& a, const std::vector<Vec>& vectors);
/// Span of all products x y with x in s, y in t.
Subspace product_space(const StructureAlgebra& a, const Subspace& s, const Subspace& t);
/// Subalgebra generated by the vectors (and the unit if present).
Subspace generated_subalgebra(const StructureAlgebra& a, const std::vector<Vec>& vectors);

// ---------------------------------------------------------------- modules

struct AlgModule {
  StructureAlgebra algebra;
  std::size_t dim = 0;
  /// action[i] = rho(e_i), dim × dim.
  std::vector<Matrix> action;

  Matrix act(const Vec& a) const;
  /// Hom property on all basis pairs and rho(1) = id.
  bool is_valid(std::stop_token stop = {}) const;
};

AlgModule regular_module(const StructureAlgebra& a);
/// Restriction to an invariant subspace, in its echelon basis.
AlgModule submodule(const AlgModule& v, const Subspace& w);
AlgModule quotient_module(const AlgModule& v, const Subspace& w);
AlgModule direct_sum(const AlgModule& v, const AlgModule& w);
/// The natural module k^n of M_n(k).
AlgModule column_module(const StructureAlgebra& matrix_alg, std::size_t n);

Subspace spin(const AlgModule& v, const Vec& vec);
Subspace spin(const AlgModule& v, const std::vector<Vec>& vecs);
/// Is w closed under the action?
bool is_submodule(const AlgModule& v, const Subspace& w);

/// Space of module maps V -> W as matrices (dim W × dim V).
std::vector<Matrix> hom_space(const AlgModule& v, const AlgModule& w);

struct EndomorphismAlgebra {
  StructureAlgebra algebra;
  std::vector<Matrix> basis;
};
EndomorphismAlgebra endomorphism_algebra(const AlgModule& v);

/// Certified simplicity. Throws Undetermined over Q when no certificate is found,
/// ZeroModule on dim 0.
bool is_simple(const AlgModule& v, const Options& opts = {});
bool is_absolutely_simple(const AlgModule& v, const Options& opts = {});

/// Proper nonzero submodule, or nullopt when v is certified simple. Throws
/// Undetermined over Q when neither can be certified.
std::optional<Subspace> find_proper_submodule(const AlgModule& v, const Options& opts = {});

struct Summand {
  AlgModule module;
  Matrix embedding;  // dim V × dim S, image is the summand
};

/// Decomposition into simple summands, ordered by (dimension, echelon basis
/// of the image). Throws NotSemisimple when a submodule has no complement.
std::vector<Summand> meataxe_decompose(const AlgModule& v, const Options& opts = {});

// ---------------------------------------------------------------- algebra structure

std::optional<Vec> find_unit(const StructureAlgebra& a);
bool has_local_units(const StructureAlgebra& a);
Subspace center(const StructureAlgebra& a);
/// Jacobson radical. Throws NonUnital.
Subspace radical(const StructureAlgebra& a);
bool is_semisimple(const StructureAlgebra& a);

enum class Verdict { Yes, No, Undetermined };
std::string_view verdict_name(Verdict v);

/// Complete set of primitive orthogonal idempotents of a split commutative
/// semisimple algebra, canonically sorted.
std::vector<Vec> primitive_idempotents_split_commutative(const StructureAlgebra& c);

enum class BlockStatus { Split, NotSplit, Undetermined };
std::string_view block_status_name(BlockStatus s);

struct WedderburnBlock {
  std::size_t n = 0;       // matrix size for Split blocks, 0 otherwise
  std::size_t dim = 0;     // dimension of the block z D
  Vec central_idempotent;
  BlockStatus status = BlockStatus::Undetermined;
  /// For Split blocks: x ↦ vec(rho(x)) (n² × dim D, E_ab at a*n+b), and a
  /// section sending E_ab back into the block (dim D × n²).
  Matrix to_matrix_units;
  Matrix from_matrix_units;
};

struct WedderburnForm {
  std::vector<WedderburnBlock> blocks;
  bool all_split() const;
};

/// Throws NotSemisimple / NonUnital / NotSplitCenter.
WedderburnForm wedderburn(const StructureAlgebra& d, const Options& opts = {});
Verdict is_absolutely_semisimple(const StructureAlgebra& d, const Options& opts = {});

// ---------------------------------------------------------------- Morita contexts

/// Two-object context: spaces A_ij (i,j in {0,1}) with bilinear products
/// A_ij × A_jk -> A_ik stored as d_ik × (d_ij·d_jk) matrices.
struct MoritaContextData {
  Field field;
  std::array<std::array<std::size_t, 2>, 2> dims{};
  std::array<std::array<std::array<Matrix, 2>, 2>, 2> products;
  StructureAlgebra a() const;
  StructureAlgebra b() const;
  Vec multiply(int i, int j, int k, const Vec& x, const Vec& y) const;
};

/// Context spanned by four subspaces of an ambient algebra (A_00, A_01, A_10, A_11).
MoritaContextData context_from_subspaces(const StructureAlgebra& ambient,
                                         const std::array<std::array<Subspace, 2>, 2>& parts);

enum class MoritaVerdict { Strict, SurjectiveOnly, NotSurjective };
std::string_view morita_verdict_name(MoritaVerdict v);

/// Throws AxiomViolation on associativity failure, NonUnital if A or B has no unit.
MoritaVerdict verify_morita(const MoritaContextData& ctx, std::stop_token stop = {});

struct CornerResult {
  StructureAlgebra corner;   // pDp on the echelon basis of pDp
  Subspace corner_space;     // pDp inside D
  MoritaContextData context; // (D, Dp, pD, pDp)
  bool full = false;         // DpD = D
};
CornerResult corner(const StructureAlgebra& d, const Vec& p);

}  // namespace hopfkit
