#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lieinner/assoc/algebra.hpp"
#include "lieinner/exact/random.hpp"
#include "lieinner/lie/lie_algebra.hpp"

namespace lieinner {

// Random idempotents e, f in M_n with fe = 0 and the given ranks
// (rank e + rank f <= n). Ranks are drawn when not given.
std::pair<Matrix, Matrix> random_orthogonal_idempotents(Rng& rng, std::size_t n,
                                                        std::optional<std::size_t> rank_e = std::nullopt,
                                                        std::optional<std::size_t> rank_f = std::nullopt);

// Coordinate vectors spanning a totally isotropic subspace, chosen greedily.
std::vector<Vector> standard_isotropic_basis(const InvolutiveAlgebra& alg);

// g with g* g = 1, via the Cayley transform of a random skew element.
Matrix random_isometry(Rng& rng, const InvolutiveAlgebra& alg);

struct IsotropicIdempotent {
  Matrix e;
  std::vector<Vector> image;  // basis of the totally isotropic image of e
};

// Idempotent e with e* e = 0 and image a random totally isotropic subspace
// of dimension k (drawn from 1..Witt index when not given).
IsotropicIdempotent random_isotropic_idempotent(Rng& rng, const InvolutiveAlgebra& alg,
                                                std::optional<std::size_t> k = std::nullopt);

// so(n) for the form with a hyperbolic pair on the first two coordinates and
// the identity elsewhere, with the inner ideal spanned by e_1j - e_j2, j >= 3.
struct HyperbolicPlaneInstance {
  LieAlgebra lie;
  Subspace ideal;
};
HyperbolicPlaneInstance hyperbolic_plane_instance(std::size_t n);

// span{[u, w] : w in ws} in so(n), [u, w] = u*w - w*u.
Subspace bracket_with_vector(const LieAlgebra& so, const Vector& u, const std::vector<Vector>& ws);

}  // namespace lieinner
