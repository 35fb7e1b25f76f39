#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

/// Dense exact matrix over a single Field, stored row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_ints(Field field, const std::vector<std::vector<long long>>& rows);
  /// Columns are the given vectors (all of length `rows`).
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vec>& columns);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix column(const Vec& v);
  static Matrix row(const Vec& v);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row_vec(std::size_t r) const;
  Vec col_vec(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);
  void set_col(std::size_t c, const Vec& v);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Columns listed in `indices`, in order.
  Matrix select_cols(const std::vector<std::size_t>& indices) const;
  Matrix select_rows(const std::vector<std::size_t>& indices) const;

  /// M v
  Vec apply(const Vec& v) const;
  /// v^T M, i.e. a row vector times the matrix.
  Vec apply_left(const Vec& v) const;

  bool is_zero() const;
  bool is_identity() const;
  Scalar trace() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Field& field, std::size_t cols, const std::vector<Matrix>& blocks);
Matrix power(const Matrix& m, unsigned exponent);

}  // namespace hopfkit
