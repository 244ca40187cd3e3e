#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qrep/field.hpp"

namespace qrep {

/// Dense row-major matrix over an exact field. Zero rows or columns are
/// allowed and stand for maps to or from the zero space.
class Matrix {
 public:
  Matrix() = default;
  /// The zero matrix.
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Row-major integer entries; entries.size() must equal rows * cols.
  Matrix(Field field, std::size_t rows, std::size_t cols, std::span<const long> entries);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::initializer_list<long> entries);

  static Matrix identity(Field field, std::size_t n);
  /// Column vector from integers.
  static Matrix column(Field field, std::span<const long> entries);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const noexcept { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  Matrix row_block(std::size_t first, std::size_t count) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Same entries reinterpreted over another field. Rational entries must
  /// have denominators invertible in the target field.
  Matrix change_field(Field target) const;

  std::string to_string() const;

 private:
  Field field_ = Field::rationals();
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// [a | b]; row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]; column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);
/// [[a, 0], [0, b]].
Matrix block_diagonal(const Matrix& a, const Matrix& b);
/// copies of m down the diagonal.
Matrix repeat_diagonal(const Matrix& m, std::size_t copies);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivots are taken leftmost column first, from the
/// first row holding a nonzero entry in that column.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}. One vector per non-pivot column f of rref(m), with
/// a 1 in position f and zeros in every other free position.
std::vector<Matrix> kernel_basis(const Matrix& m);

/// The kernel basis as the columns of one matrix (cols(m) x nullity).
Matrix kernel_matrix(const Matrix& m);

/// A solution of a x = b with all free variables set to zero, or nullopt when
/// the system is inconsistent. b must be a column with a.rows() entries.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

}  // namespace qrep
