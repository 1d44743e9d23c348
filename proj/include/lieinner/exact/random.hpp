#pragma once

#include <cstdint>
#include <random>

#include "lieinner/exact/matrix.hpp"
#include "lieinner/exact/subspace.hpp"

namespace lieinner {

// Seeded source of small exact test data. Draws are reduced with plain
// modulo arithmetic on the mt19937_64 stream so a seed gives the same
// instances on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool coin() { return integer(0, 1) == 1; }
  Scalar small_rational(std::int64_t num_bound = 3, std::int64_t den_bound = 2);

  Vector vector(std::size_t n, std::int64_t bound = 3);
  Matrix matrix(std::size_t rows, std::size_t cols, std::int64_t bound = 3);
  Matrix rational_matrix(std::size_t rows, std::size_t cols);
  Matrix matrix_of_rank(std::size_t n, std::size_t rank, std::int64_t bound = 2);
  Matrix invertible(std::size_t n, std::int64_t bound = 2);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lieinner
