#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "quiverfg/field.hpp"

namespace qfg {

using Vector = std::vector<Scalar>;

// Dense row-major matrix with exact entries in a fixed field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<std::vector<long>>& rows);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Vector apply(const Vector& v) const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

  void swap_rows(std::size_t a, std::size_t b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

// Reduced row echelon form. Pivots are chosen column by column, taking the
// first row with a nonzero entry, so the output is deterministic.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);
// Kernel basis as the columns of a cols x nullity matrix.
Matrix kernel_matrix(const Matrix& m);
std::optional<Vector> solve_right(const Matrix& m, const Vector& b);
// Indices of columns that form a basis of the column space.
std::vector<std::size_t> pivot_columns(const Matrix& m);
// Columns of m forming a basis of its image.
Matrix image_matrix(const Matrix& m);
// Inverse of a square invertible matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

Vector zero_vector(const Field& f, std::size_t n);
bool is_zero(const Vector& v);
Vector add(const Field& f, const Vector& a, const Vector& b);
Vector sub(const Field& f, const Vector& a, const Vector& b);
Vector scale(const Field& f, const Scalar& s, const Vector& a);

// Solves m x = b repeatedly for a fixed m.
class LinearSolver {
 public:
  LinearSolver() = default;
  explicit LinearSolver(const Matrix& m);

  std::optional<Vector> solve(const Vector& b) const;
  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return cols_; }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Matrix transform_;  // transform_ * m = reduced
  std::vector<std::size_t> pivots_;
  Matrix reduced_;
};

// Incrementally maintained span of vectors of a fixed length.  Tracks how
// each echelon row is expressed through the accepted generators so that
// membership queries can return coordinates.
class SpanBasis {
 public:
  SpanBasis(Field f, std::size_t length) : field_(f), length_(length) {}

  // Adds v when it is independent of the current span; returns whether it was added.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  // Coordinates of v with respect to the accepted generators, in acceptance order.
  std::optional<Vector> coordinates(const Vector& v) const;
  // Residual of v after reduction against the span.
  Vector reduce(const Vector& v) const;

  std::size_t dimension() const noexcept { return rows_.size(); }
  std::size_t length() const noexcept { return length_; }
  const std::vector<Vector>& generators() const noexcept { return generators_; }

 private:
  Field field_;
  std::size_t length_;
  std::vector<Vector> rows_;          // echelon rows, pivot entry 1
  std::vector<std::size_t> pivots_;   // pivot column per row
  std::vector<Vector> combos_;        // rows_[i] = sum combos_[i][j] * generators_[j]
  std::vector<Vector> generators_;
};

}  // namespace qfg
