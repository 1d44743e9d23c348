#pragma once

#include <cstdint>
#include <vector>

#include "lieinner/assoc/ideals.hpp"
#include "lieinner/exact/linalg.hpp"
#include "lieinner/exact/random.hpp"

namespace lieinner::testing {

inline constexpr std::uint64_t kSeed = 20240611;

inline Subspace random_subspace(Rng& rng, std::size_t ambient, std::size_t count, std::int64_t bound = 2) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < count; ++i) vs.push_back(rng.vector(ambient, bound));
  return canonicalize(vs, ambient);
}

// Sparse random element: a few nonzero entries keeps spans low-rank.
inline Vector sparse_vector(Rng& rng, std::size_t ambient, std::size_t nonzeros) {
  Vector v = zero_vector(ambient);
  for (std::size_t k = 0; k < nonzeros; ++k)
    v[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(ambient) - 1))] = rng.integer(-2, 2);
  return v;
}

inline Subspace sparse_subspace(Rng& rng, std::size_t ambient, std::size_t count, std::size_t nonzeros) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < count; ++i) vs.push_back(sparse_vector(rng, ambient, nonzeros));
  return canonicalize(vs, ambient);
}

inline AlgebraElement random_element(Rng& rng, const InvolutiveAlgebra& alg) {
  return alg.unflatten(rng.vector(alg.dim(), 2));
}

inline Matrix random_idempotent(Rng& rng, std::size_t n, std::size_t r) {
  Matrix p = rng.invertible(n);
  Matrix d(n, n);
  for (std::size_t i = 0; i < r; ++i) d(i, i) = 1;
  return p * d * *inverse(p);
}

}  // namespace lieinner::testing
