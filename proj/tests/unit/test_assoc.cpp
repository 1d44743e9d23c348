#include <doctest.h>

#include "lieinner/assoc/ideals.hpp"
#include "lieinner/exact/linalg.hpp"
#include "support.hpp"

using namespace lieinner;
using namespace lieinner::testing;

namespace {

std::vector<InvolutiveAlgebra> involutive_algebras() {
  return {InvolutiveAlgebra::transpose(3),
          InvolutiveAlgebra::orthogonal(3),
          InvolutiveAlgebra::orthogonal(4, split_orthogonal_gram(4)),
          InvolutiveAlgebra::symplectic(4),
          InvolutiveAlgebra::symplectic(4, hyperbolic_gram(4, -1)),
          InvolutiveAlgebra::doubled(3)};
}

}  // namespace

TEST_CASE("involution contract") {
  Rng rng(kSeed);
  for (const auto& alg : involutive_algebras()) {
    CAPTURE(to_string(alg.involution()));
    for (int t = 0; t < 10; ++t) {
      auto a = random_element(rng, alg), b = random_element(rng, alg);
      CHECK(alg.star(alg.star(a)) == a);
      CHECK(alg.star(alg.mul(a, b)) == alg.mul(alg.star(b), alg.star(a)));
      Scalar s = rng.small_rational();
      CHECK(alg.star(alg.add(alg.scale(s, a), b)) == alg.add(alg.scale(s, alg.star(a)), alg.star(b)));
    }
  }
}

TEST_CASE("form involutions are adjoints") {
  Rng rng(kSeed + 1);
  for (const auto& alg : {InvolutiveAlgebra::orthogonal(4, split_orthogonal_gram(4)), InvolutiveAlgebra::symplectic(4)}) {
    auto a = random_element(rng, alg);
    Matrix as = alg.star(a).primary;
    const Matrix& g = alg.gram();
    // Phi(a x, y) = Phi(x, a* y) for all x, y.
    CHECK(a.primary.transpose() * g == g * as);
  }
}

TEST_CASE("invalid forms and missing involution") {
  CHECK_THROWS_AS(InvolutiveAlgebra::symplectic(3), std::invalid_argument);
  CHECK_THROWS_AS(InvolutiveAlgebra::orthogonal(2, Matrix::from_ints({{0, 1}, {-1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(InvolutiveAlgebra::orthogonal(2, Matrix::from_ints({{1, 1}, {1, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(InvolutiveAlgebra::symplectic(2, Matrix::identity(2)), std::invalid_argument);
  auto alg = InvolutiveAlgebra::full(2);
  CHECK_THROWS_AS(alg.star(alg.identity()), std::invalid_argument);
  CHECK_THROWS(alg.element(Matrix(3, 3)));
}

TEST_CASE("doubled algebra multiplies the opposite component in reverse") {
  auto alg = InvolutiveAlgebra::doubled(2);
  Matrix a = Matrix::from_ints({{1, 2}, {0, 1}}), b = Matrix::from_ints({{0, 1}, {1, 0}});
  auto x = alg.element(a, b), y = alg.element(b, a);
  auto p = alg.mul(x, y);
  CHECK(p.primary == a * b);
  CHECK(p.opposite == a * b);
  CHECK(alg.star(x) == alg.element(b, a));
  CHECK(skew_elements(alg).dim() == 4);
}

TEST_CASE("one-sided ideals: tensor fast path matches raw products") {
  Rng rng(kSeed + 2);
  for (auto alg : {InvolutiveAlgebra::full(3), InvolutiveAlgebra::doubled(3)}) {
    for (int t = 0; t < 8; ++t) {
      auto s = sparse_subspace(rng, alg.dim(), static_cast<std::size_t>(rng.integer(1, 3)), 2);
      for (Side side : {Side::Left, Side::Right}) {
        auto fast = ideal_generated(alg, s, side);
        CHECK(fast.space == detail::ideal_generated_by_products(alg, s, side));
        CHECK(is_one_sided_ideal(alg, fast.space, side));
        CHECK(fast.space.contains(s));
      }
      auto s2 = sparse_subspace(rng, alg.dim(), 2, 2);
      CHECK(sandwich_space(alg, s, s2) == detail::sandwich_by_products(alg, s, s2));
    }
  }
}

TEST_CASE("right times left ideal equals intersection in a full matrix algebra") {
  Rng rng(kSeed + 3);
  auto alg = InvolutiveAlgebra::full(4);
  for (int t = 0; t < 10; ++t) {
    auto l = ideal_generated(alg, sparse_subspace(rng, alg.dim(), 2, 3), Side::Left).space;
    auto r = ideal_generated(alg, sparse_subspace(rng, alg.dim(), 2, 3), Side::Right).space;
    auto rl = product_space(alg, r, l);
    auto both = subspace_intersect(r, l);
    CHECK(both.contains(rl));
    CHECK(rl == both);
  }
}

TEST_CASE("idempotent generators round trip") {
  Rng rng(kSeed + 4);
  auto alg = InvolutiveAlgebra::full(4);
  for (int t = 0; t < 10; ++t) {
    std::size_t r = static_cast<std::size_t>(rng.integer(0, 4));
    Matrix e = random_idempotent(rng, 4, r);
    for (Side side : {Side::Left, Side::Right}) {
      auto ideal = ideal_generated(alg, alg.element(e), side);
      CHECK(ideal.space.dim() == 4 * r);
      auto f = idempotent_generator(alg, ideal);
      CHECK(alg.is_idempotent(f));
      CHECK(ideal_generated(alg, f, side).space == ideal.space);
      CHECK(rank(f.primary) == r);
    }
  }
}

TEST_CASE("idempotent recovery in the doubled algebra") {
  Rng rng(kSeed + 5);
  auto alg = InvolutiveAlgebra::doubled(3);
  auto x = alg.element(random_idempotent(rng, 3, 1), random_idempotent(rng, 3, 2));
  for (Side side : {Side::Left, Side::Right}) {
    auto ideal = ideal_generated(alg, x, side);
    auto f = idempotent_generator(alg, ideal);
    CHECK(alg.is_idempotent(f));
    CHECK(ideal_generated(alg, f, side).space == ideal.space);
  }
}

TEST_CASE("von Neumann regularity of matrix algebras") {
  Rng rng(kSeed + 6);
  auto alg = InvolutiveAlgebra::full(3);
  for (int t = 0; t < 10; ++t) {
    auto x = alg.element(rng.matrix_of_rank(3, static_cast<std::size_t>(rng.integer(0, 3))));
    auto y = von_neumann_witness(alg, x);
    REQUIRE(y);
    CHECK(alg.mul(alg.mul(x, *y), x) == x);
    std::size_t r = rank(x.primary);
    CHECK(sandwich_dimension(alg, x) == r * r);
  }
}

TEST_CASE("skew part and star image") {
  auto alg = InvolutiveAlgebra::transpose(3);
  CHECK(skew_elements(alg).dim() == 3);
  auto sym = InvolutiveAlgebra::symplectic(4);
  CHECK(skew_elements(sym).dim() == 10);
  auto so = InvolutiveAlgebra::orthogonal(5, split_orthogonal_gram(5));
  CHECK(skew_elements(so).dim() == 10);
  Rng rng(kSeed + 7);
  auto s = sparse_subspace(rng, so.dim(), 3, 2);
  CHECK(star_image(so, star_image(so, s)) == s);
}
