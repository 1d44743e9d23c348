#include "lieinner/exact/random.hpp"

#include <stdexcept>

#include "lieinner/exact/linalg.hpp"

namespace lieinner {

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::integer: empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Scalar Rng::small_rational(std::int64_t num_bound, std::int64_t den_bound) {
  Scalar r(static_cast<long>(integer(-num_bound, num_bound)), static_cast<long>(integer(1, den_bound)));
  r.canonicalize();
  return r;
}

Vector Rng::vector(std::size_t n, std::int64_t bound) {
  Vector v(n);
  for (auto& x : v) x = static_cast<long>(integer(-bound, bound));
  return v;
}

Matrix Rng::matrix(std::size_t rows, std::size_t cols, std::int64_t bound) {
  return Matrix(rows, cols, vector(rows * cols, bound));
}

Matrix Rng::rational_matrix(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational();
  return m;
}

Matrix Rng::matrix_of_rank(std::size_t n, std::size_t r, std::int64_t bound) {
  if (r > n) throw std::invalid_argument("matrix_of_rank: rank exceeds size");
  for (;;) {
    Matrix m = matrix(n, r, bound) * matrix(r, n, bound);
    if (rank(m) == r) return m;
  }
}

Matrix Rng::invertible(std::size_t n, std::int64_t bound) {
  for (;;) {
    Matrix m = matrix(n, n, bound);
    if (rank(m) == n) return m;
  }
}

}  // namespace lieinner
