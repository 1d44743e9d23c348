#include "lieinner/exact/linalg.hpp"

#include <stdexcept>

namespace lieinner {

EchelonForm rref(Matrix m) {
  EchelonForm out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Scalar inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      Scalar c = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= c * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::length_error("solve_linear: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  EchelonForm e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x = zero_vector(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

Subspace kernel(const Matrix& a) {
  EchelonForm e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return canonicalize(basis, a.cols());
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix::identity(n));
  EchelonForm e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Subspace column_space(const Matrix& a) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column_vector(j));
  return canonicalize(cols, a.rows());
}

Subspace row_space(const Matrix& a) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row_vector(i));
  return canonicalize(rows, a.cols());
}

Matrix from_columns(std::span<const Vector> cols, std::size_t length) {
  Matrix m(length, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != length) throw std::length_error("from_columns: length mismatch");
    for (std::size_t i = 0; i < length; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

}  // namespace lieinner
