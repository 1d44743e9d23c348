#pragma once

#include <optional>
#include <vector>

#include "lieinner/exact/matrix.hpp"
#include "lieinner/exact/subspace.hpp"

namespace lieinner {

struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

EchelonForm rref(Matrix m);
std::size_t rank(const Matrix& m);

// One exact solution of a x = b with free variables set to zero, or nullopt
// when the system is inconsistent.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

Subspace kernel(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

Subspace column_space(const Matrix& a);
Subspace row_space(const Matrix& a);

// Matrix whose columns are the given vectors.
Matrix from_columns(std::span<const Vector> cols, std::size_t length);

}  // namespace lieinner
