#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfkit/matrix.hpp"

namespace hopfkit {

/// Reduced row-echelon form: `rows` holds only the nonzero rows (rank × cols),
/// `pivots[i]` is the pivot column of row i.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
};

/// Canonical RREF. Fraction-free (Bareiss) elimination over Q, Gauss-Jordan over F_p.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A linear subspace of k^n in canonical echelon form, so that equality of
/// subspaces is equality of representations.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of k^ambient.
  Subspace(Field field, std::size_t ambient);

  static Subspace full(Field field, std::size_t ambient);
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace column_space(const Matrix& m);
  /// Assumes `e` is already a canonical echelon form.
  static Subspace from_echelon(Echelon e);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  /// Rows form the echelon basis.
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vec basis_vector(std::size_t i) const { return basis_.row_vec(i); }
  std::vector<Vec> basis_vectors() const;
  /// ambient × dim, columns are the basis vectors.
  Matrix embedding() const { return basis_.transpose(); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates in the echelon basis, or nullopt when v is not contained.
  std::optional<Vec> coordinates(const Vec& v) const;
  Vec from_coordinates(const Vec& c) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// {x : b . x = 0 for every basis row b}
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Echelon basis grown one vector at a time (pivots in insertion order).
/// Optional tags record the combination of inputs that produced each row.
class IncrementalBasis {
 public:
  IncrementalBasis(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  void reduce(Vec& v, Vec* tag = nullptr) const;
  /// Stores a reduced nonzero vector.
  void insert_reduced(Vec v, Vec tag = {});
  /// Reduces and inserts; true when the span grew.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<Vec>& rows() const noexcept { return rows_; }
  Subspace subspace() const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<Vec> tags_;
  std::vector<std::size_t> piv_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

/// Some X with M X = b, free variables set to zero; nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
std::optional<Vec> solve_vec(const Matrix& m, const Vec& b);
std::optional<Matrix> try_inverse(const Matrix& m);
/// Throws Singular / NonSquare.
Matrix inverse(const Matrix& m);

/// Kronecker product, e_i (x) f_j at index i*dim(W)+j.
Matrix tensor(const Matrix& a, const Matrix& b);
Vec tensor(const Vec& a, const Vec& b);

struct QuotientMap {
  Matrix projection;  // q × ambient
  Matrix section;     // ambient × q
};

/// Quotient of k^ambient by `relations`; its basis is the set of non-pivot
/// coordinates of the relation echelon form.
QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& relations);

}  // namespace hopfkit
