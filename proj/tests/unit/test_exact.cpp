#include <doctest.h>

#include "lieinner/exact/json_io.hpp"
#include "lieinner/exact/linalg.hpp"
#include "lieinner/exact/random.hpp"
#include "support.hpp"

using namespace lieinner;
using lieinner::testing::kSeed;
using lieinner::testing::random_subspace;

TEST_CASE("scalar parsing") {
  CHECK(parse_scalar("3/4") == Scalar(3, 4));
  CHECK(parse_scalar("-6/8") == Scalar(-3, 4));
  CHECK(parse_scalar("12") == 12);
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
  CHECK(parse_scalar(format_scalar(Scalar(-7, 3))) == Scalar(-7, 3));
}

TEST_CASE("matrix arithmetic") {
  Matrix a = Matrix::from_ints({{1, 2}, {3, 4}});
  Matrix b = Matrix::from_ints({{0, 1}, {1, 0}});
  CHECK(a * b == Matrix::from_ints({{2, 1}, {4, 3}}));
  CHECK(commutator(a, b) == a * b - b * a);
  CHECK(a.trace() == 5);
  CHECK(power(b, 2) == Matrix::identity(2));
  CHECK_THROWS(Matrix(2, 2, Vector(3)));

  Rng rng(kSeed);
  for (int t = 0; t < 20; ++t) {
    Matrix x = rng.matrix(3, 4), y = rng.matrix(4, 2), z = rng.matrix(2, 3);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * y).transpose() == y.transpose() * x.transpose());
  }
}

TEST_CASE("rank-nullity and solving") {
  Rng rng(kSeed + 1);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = static_cast<std::size_t>(rng.integer(0, 5));
    Matrix a = rng.matrix_of_rank(5, r);
    CHECK(rank(a) == r);
    Subspace k = kernel(a);
    CHECK(rank(a) + k.dim() == a.cols());
    for (const auto& v : k.basis()) CHECK(is_zero(a * v));
    CHECK(column_space(a).dim() == r);
    CHECK(row_space(a).dim() == r);

    Vector x = rng.vector(5);
    Vector b = a * x;
    auto sol = solve_linear(a, b);
    REQUIRE(sol);
    CHECK(a * *sol == b);
  }
  Matrix singular = Matrix::from_ints({{1, 1}, {1, 1}});
  CHECK_FALSE(solve_linear(singular, Vector{1, 0}));
  CHECK_FALSE(inverse(singular));
}

TEST_CASE("inverse") {
  Rng rng(kSeed + 2);
  for (int t = 0; t < 20; ++t) {
    Matrix a = rng.invertible(4);
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(4));
    CHECK(*inv * a == Matrix::identity(4));
  }
}

TEST_CASE("rref is canonical") {
  Rng rng(kSeed + 3);
  for (int t = 0; t < 30; ++t) {
    Matrix a = rng.matrix(4, 6);
    auto e = rref(a);
    CHECK(rref(e.reduced).reduced == e.reduced);
    // A different spanning set of the same row space.
    Matrix mixed = rng.invertible(4) * a;
    CHECK(row_space(mixed) == row_space(a));
  }
}

TEST_CASE("subspace sum and intersection: Grassmann identity") {
  Rng rng(kSeed + 4);
  for (int t = 0; t < 40; ++t) {
    auto u = random_subspace(rng, 7, static_cast<std::size_t>(rng.integer(0, 5)));
    auto w = random_subspace(rng, 7, static_cast<std::size_t>(rng.integer(0, 5)));
    auto s = subspace_sum(u, w), i = subspace_intersect(u, w);
    CHECK(s.dim() + i.dim() == u.dim() + w.dim());
    CHECK(s.contains(u));
    CHECK(s.contains(w));
    CHECK(u.contains(i));
    CHECK(w.contains(i));
  }
}

TEST_CASE("subspace membership and coordinates") {
  Rng rng(kSeed + 5);
  auto s = random_subspace(rng, 6, 3);
  Vector c = rng.vector(s.dim());
  Vector v = s.combine(c);
  auto back = s.coordinates(v);
  REQUIRE(back);
  CHECK(*back == c);
  Vector outside = zero_vector(6);
  for (std::size_t p = 0; p < 6; ++p)
    if (std::find(s.pivots().begin(), s.pivots().end(), p) == s.pivots().end()) {
      outside[p] = 1;
      break;
    }
  CHECK_FALSE(s.contains(outside));
  CHECK_FALSE(s.coordinates(outside));
  CHECK_THROWS(s.contains(Vector(5)));
}

TEST_CASE("span builder agrees with canonicalize") {
  Rng rng(kSeed + 6);
  std::vector<Vector> vs;
  SpanBuilder b(5);
  for (int k = 0; k < 7; ++k) {
    vs.push_back(rng.vector(5));
    b.add(vs.back());
  }
  CHECK(b.build() == canonicalize(vs, 5));
  CHECK_THROWS(Subspace::from_canonical(2, {Vector{2, 0}}));
}

TEST_CASE("json round trip") {
  Rng rng(kSeed + 7);
  Matrix m = rng.rational_matrix(3, 2);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  auto s = random_subspace(rng, 5, 2);
  CHECK(subspace_from_json(subspace_to_json(s)) == s);
  CHECK(scalar_from_json(Json(5)) == 5);
  CHECK(scalar_from_json(Json("-1/3")) == Scalar(-1, 3));
  CHECK_THROWS(matrix_from_json(Json::parse(R"({"rows":2,"cols":2,"entries":[1,2,3]})")));
}
