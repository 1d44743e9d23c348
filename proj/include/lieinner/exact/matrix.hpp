#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>

#include "lieinner/exact/scalar.hpp"

namespace lieinner {

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  // Throws std::length_error unless entries.size() == rows * cols.
  Matrix(std::size_t rows, std::size_t cols, Vector entries);

  static Matrix identity(std::size_t n);
  // Matrix unit e_ij of the given shape.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) { return unit(n, n, i, j); }
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows);
  static Matrix column(const Vector& v);
  static Matrix row(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  // Row-major flattening; this is the coordinate vector of the matrix.
  const Vector& entries() const { return entries_; }

  Vector column_vector(std::size_t j) const;
  Vector row_vector(std::size_t i) const;

  Matrix transpose() const;
  Scalar trace() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& a);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Scalar& s, Matrix a);
// Skips zero entries of the left factor, which matters for the sparse
// matrix-unit bases used throughout.
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix block_diagonal(std::span<const Matrix> blocks);
Matrix power(const Matrix& a, unsigned k);

std::string to_string(const Matrix& m);

}  // namespace lieinner
