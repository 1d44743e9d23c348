#include "lieinner/exact/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace lieinner {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, Vector entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw std::length_error("matrix: expected " + std::to_string(rows * cols) + " entries, got " +
                            std::to_string(entries_.size()));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  if (i >= rows || j >= cols) throw std::out_of_range("matrix unit index out of range");
  Matrix m(rows, cols);
  m(i, j) = 1;
  return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::length_error("from_ints: ragged rows");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix Matrix::column(const Vector& v) { return Matrix(v.size(), 1, v); }

Matrix Matrix::row(const Vector& v) { return Matrix(1, v.size(), v); }

bool Matrix::is_zero() const { return lieinner::is_zero(entries_); }

Vector Matrix::column_vector(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row_vector(std::size_t i) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Scalar t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("set_block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::length_error("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!lieinner::is_zero(o.entries_[k])) entries_[k] += o.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::length_error("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!lieinner::is_zero(o.entries_[k])) entries_[k] -= o.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& a) {
  for (auto& x : entries_) x *= a;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }

Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

Matrix operator-(Matrix a) { return a *= Scalar(-1); }

Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::length_error("matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (!is_zero(bkj)) c(i, j) += aik * bkj;
      }
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw std::length_error("matrix-vector product: shape mismatch");
  Vector y = zero_vector(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!is_zero(a(i, k)) && !is_zero(x[k])) y[i] += a(i, k) * x[k];
  return y;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix block_diagonal(std::span<const Matrix> blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Matrix power(const Matrix& a, unsigned k) {
  Matrix r = Matrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << format_scalar(m(i, j));
  }
  os << ']';
  return os.str();
}

}  // namespace lieinner
