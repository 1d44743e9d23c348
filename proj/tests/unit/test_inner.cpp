#include <doctest.h>

#include "lieinner/exact/linalg.hpp"
#include "lieinner/inner/inner_ideals.hpp"
#include "lieinner/inner/instances.hpp"
#include "support.hpp"

using namespace lieinner;
using namespace lieinner::testing;

namespace {

// Membership by rank of the stacked basis, independent of the span builder.
bool in_span_by_rank(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) return is_zero(v);
  std::vector<Vector> cols = basis;
  std::size_t before = rank(from_columns(cols, v.size()));
  cols.push_back(v);
  return rank(from_columns(cols, v.size())) == before;
}

// [i, [j, x]] in I for all basis i, j of I and x of L, by raw commutators.
bool brute_force_inner(const Subspace& i, const LieAlgebra& l) {
  const std::size_t n = l.algebra().n();
  auto mat = [n](const Vector& v) { return Matrix(n, n, v); };
  for (const auto& a : i.basis())
    for (const auto& b : i.basis())
      for (const auto& x : l.space().basis())
        if (!in_span_by_rank(i.basis(), commutator(mat(a), commutator(mat(b), mat(x))).entries())) return false;
  return true;
}

Subspace line_of(const Matrix& m) { return canonicalize(std::vector<Vector>{m.entries()}, m.rows() * m.cols()); }

}  // namespace

TEST_CASE("inner ideals of sl(2)") {
  auto sl2 = construct_sl(2);
  auto e12 = line_of(Matrix::unit(2, 0, 1));
  CHECK(is_inner_ideal(e12, sl2));
  CHECK(brute_force_inner(e12, sl2));
  CHECK(is_inner_ideal(sl2.space(), sl2));
  CHECK(is_inner_ideal(Subspace(4), sl2));
  auto h = line_of(Matrix::from_ints({{1, 0}, {0, -1}}));
  CHECK_FALSE(is_inner_ideal(h, sl2));
  CHECK_FALSE(brute_force_inner(h, sl2));
  // [h, [h, e]] = 4e.
  Matrix hm = Matrix::from_ints({{1, 0}, {0, -1}}), em = Matrix::unit(2, 0, 1);
  CHECK(commutator(hm, commutator(hm, em)) == Scalar(4) * em);
  CHECK_THROWS_AS(is_inner_ideal(line_of(Matrix::unit(2, 0, 0)), sl2), PreconditionError);
}

TEST_CASE("eAf construction") {
  auto sl2 = construct_sl(2);
  auto i = construct_eAf(sl2, Matrix::unit(2, 0, 0), Matrix::unit(2, 1, 1));
  CHECK(i == line_of(Matrix::unit(2, 0, 1)));
  CHECK(construct_eAf(sl2, Matrix(2, 2), Matrix::unit(2, 1, 1)).is_zero());
  CHECK_THROWS_AS(construct_eAf(sl2, Scalar(2) * Matrix::from_ints({{1, 1}, {0, 0}}), Matrix(2, 2)),
                  PreconditionError);
  CHECK_THROWS_AS(construct_eAf(sl2, Matrix::unit(2, 0, 0), Matrix::unit(2, 0, 0)), PreconditionError);

  Rng rng(kSeed);
  for (std::size_t n = 2; n <= 5; ++n) {
    auto l = construct_sl(n);
    for (int t = 0; t < 6; ++t) {
      auto [e, f] = random_orthogonal_idempotents(rng, n);
      CHECK((f * e).is_zero());
      CHECK(e * e == e);
      CHECK(f * f == f);
      auto ideal = construct_eAf(l, e, f);
      CHECK(ideal.dim() == rank(e) * rank(f));
      CHECK(is_inner_ideal(ideal, l));
      CHECK(brute_force_inner(ideal, l));
      CHECK(square_space(l.algebra(), ideal).is_zero());
      CHECK(is_regular(ideal, l.algebra()));
      CHECK(is_jordan_lie(ideal, l.algebra()));
      CHECK(check_abelian(ideal, l));
      CHECK(triple_power(ideal, l).is_zero());
      CHECK(check_I3V(ideal, l));
      if (!ideal.is_zero()) CHECK(check_fundamental(ideal, l));
    }
  }
}

TEST_CASE("classification round trip in sl(n)") {
  Rng rng(kSeed + 1);
  auto sl2 = construct_sl(2);
  auto c = classify_sl_inner(line_of(Matrix::unit(2, 0, 1)), sl2);
  REQUIRE(c.verified);
  CHECK(rank(c.e) == 1);
  CHECK(rank(c.f) == 1);
  CHECK(c.e * Matrix::unit(2, 0, 1) == Matrix::unit(2, 0, 1));
  CHECK(Matrix::unit(2, 0, 1) * c.f == Matrix::unit(2, 0, 1));

  for (std::size_t n = 2; n <= 5; ++n) {
    auto l = construct_sl(n);
    for (int t = 0; t < 8; ++t) {
      auto [e, f] = random_orthogonal_idempotents(rng, n);
      auto ideal = construct_eAf(l, e, f);
      if (ideal == l.space()) continue;
      auto k = classify_sl_inner(ideal, l);
      REQUIRE(k.verified);
      CHECK((k.f * k.e).is_zero());
      CHECK(construct_eAf(l, k.e, k.f) == ideal);
    }
  }
  // Block form e_{1..k} A e_{k+1..n}.
  auto l = construct_sl(4);
  Matrix e(4, 4), f(4, 4);
  e(0, 0) = e(1, 1) = 1;
  f(2, 2) = f(3, 3) = 1;
  auto k = classify_sl_inner(construct_eAf(l, e, f), l);
  REQUIRE(k.verified);
  CHECK(construct_eAf(l, k.e, k.f) == construct_eAf(l, e, f));

  CHECK_THROWS_AS(classify_sl_inner(l.space(), l), PreconditionError);
  CHECK_THROWS_AS(classify_sl_inner(line_of(Matrix::from_ints({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})), l),
                  PreconditionError);
}

TEST_CASE("regular decomposition") {
  auto l = construct_sl(3);
  auto i = line_of(Matrix::unit(3, 0, 1));
  auto d = regular_decompose(i, l);
  CHECK(d.lr_zero);
  CHECK(d.sandwich_holds);
  // A e12: matrices supported on the second column; e12 A: on the first row.
  CHECK(d.left.space.dim() == 3);
  CHECK(d.right.space.dim() == 3);
  for (const auto& v : d.left.space.basis()) {
    Matrix m(3, 3, v);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        if (c != 1) CHECK(is_zero(m(r, c)));
  }
  auto z = regular_decompose(Subspace(9), l);
  CHECK(z.left.space.is_zero());
  CHECK(z.sandwich_holds);
  CHECK_THROWS_AS(regular_decompose(line_of(Matrix::unit(3, 0, 1) + Matrix::unit(3, 1, 0)), l), PreconditionError);
}

TEST_CASE("converse of the sandwich characterisation") {
  Rng rng(kSeed + 2);
  for (std::size_t n = 3; n <= 4; ++n) {
    auto l = construct_sl(n);
    const auto& alg = l.algebra();
    for (int t = 0; t < 5; ++t) {
      auto [e, f] = random_orthogonal_idempotents(rng, n);
      auto left = ideal_generated(alg, alg.element(f), Side::Left);
      auto right = ideal_generated(alg, alg.element(e), Side::Right);
      auto rl = product_space(alg, right.space, left.space);
      auto top = subspace_intersect(subspace_intersect(right.space, left.space), l.space());
      CHECK(rl == top);
      CHECK(sandwich_condition(l, right, left, rl));
      CHECK(is_inner_ideal(rl, l));
      CHECK(is_regular(rl, alg));
    }
  }
}

TEST_CASE("star sandwich characterisation in sp(4)") {
  Rng rng(kSeed + 3);
  auto l = construct_sp(4);
  const auto& alg = l.algebra();
  for (int t = 0; t < 5; ++t) {
    auto iso = random_isotropic_idempotent(rng, alg);
    auto es = alg.star(alg.element(iso.e));
    auto left = ideal_generated(alg, es, Side::Left);  // L = A e*, L L* = A e* e A = 0
    auto ls = star_image(alg, left.space);
    auto bottom = skew_part(alg, product_space(alg, ls, left.space));
    CHECK(star_sandwich_condition(l, left, bottom));
    CHECK(is_inner_ideal(bottom, l));
    CHECK(is_star_regular(bottom, alg));
    auto d = star_regular_decompose(bottom, l);
    CHECK(d.ll_star_zero);
    CHECK(d.sandwich_holds);
  }
}

TEST_CASE("isotropic constructions") {
  Rng rng(kSeed + 4);
  struct Case {
    LieAlgebra l;
    bool symplectic;
  };
  std::vector<Case> cases = {{construct_sp(4), true},
                             {construct_sp(6), true},
                             {construct_so(5, split_orthogonal_gram(5)), false},
                             {construct_so(6, split_orthogonal_gram(6)), false}};
  for (auto& c : cases) {
    const auto& alg = c.l.algebra();
    for (int t = 0; t < 4; ++t) {
      auto iso = random_isotropic_idempotent(rng, alg);
      const std::size_t k = iso.image.size();
      auto e = alg.element(iso.e);
      CHECK(alg.is_idempotent(e));
      CHECK(alg.mul(alg.star(e), e).primary.is_zero());
      CHECK(column_space(iso.e) == canonicalize(iso.image, alg.n()));
      auto i = construct_eLestar(c.l, e);
      CHECK(is_inner_ideal(i, c.l));
      CHECK(brute_force_inner(i, c.l));
      CHECK(square_space(alg, i).is_zero());
      CHECK(check_I3V(i, c.l));
      auto uu = isotropic_bracket_span(alg, iso.image);
      CHECK(i == uu);
      CHECK(i.dim() == (c.symplectic ? k * (k + 1) / 2 : k * (k - 1) / 2));
    }
  }
  auto so = construct_so(3);
  CHECK_THROWS_AS(construct_eLestar(so, so.algebra().identity()), PreconditionError);
  CHECK_THROWS_AS(construct_eLestar(construct_sl(2), construct_sl(2).algebra().identity()), PreconditionError);
}

TEST_CASE("isometries preserve the form") {
  Rng rng(kSeed + 5);
  for (auto alg : {InvolutiveAlgebra::symplectic(4), InvolutiveAlgebra::orthogonal(5, split_orthogonal_gram(5))}) {
    Matrix g = random_isometry(rng, alg);
    CHECK(g.transpose() * alg.gram() * g == alg.gram());
  }
}

TEST_CASE("hyperbolic plane ideal in so(n)") {
  for (std::size_t n = 4; n <= 7; ++n) {
    auto inst = hyperbolic_plane_instance(n);
    const auto& alg = inst.lie.algebra();
    CHECK(inst.ideal.dim() == n - 2);
    CHECK(inst.lie.contains(inst.ideal));
    CHECK(is_inner_ideal(inst.ideal, inst.lie));
    CHECK(brute_force_inner(inst.ideal, inst.lie));
    CHECK(square_space(alg, inst.ideal) == line_of(Matrix::unit(n, 0, 1)));
    CHECK(product_space(alg, inst.ideal, square_space(alg, inst.ideal)).is_zero());
    CHECK(check_I3V(inst.ideal, inst.lie));
  }
}

TEST_CASE("point spaces") {
  Rng rng(kSeed + 6);
  auto so5 = construct_so(5, split_orthogonal_gram(5));
  Vector e1 = zero_vector(5), e2 = zero_vector(5);
  e1[0] = 1;
  e2[1] = 1;
  auto p = bracket_with_vector(so5, e1, {e2});
  CHECK(p.dim() == 1);
  Matrix x(5, 5, p.basis()[0]);
  CHECK((x * x).is_zero());
  CHECK(is_point_space(p, so5, rng));
  CHECK(is_inner_ideal(p, so5));

  auto so7 = construct_so(7, split_orthogonal_gram(7));
  Vector u = zero_vector(7), w1 = zero_vector(7), w2 = zero_vector(7);
  u[0] = w1[1] = w2[2] = 1;
  auto p7 = bracket_with_vector(so7, u, {w1, w2});
  CHECK(p7.dim() == 2);
  CHECK(is_point_space(p7, so7, rng));
  CHECK(is_type1_point_space(p7, so7, rng));
  CHECK(is_inner_ideal(p7, so7));
  // Common image line is F u.
  auto xs = p7.basis();
  CHECK(subspace_intersect(column_space(Matrix(7, 7, xs[0])), column_space(Matrix(7, 7, xs[1]))) ==
        canonicalize(std::vector<Vector>{u}, 7));

  // [P, P] != 0.
  auto bad = canonicalize(std::vector<Vector>{so5.space().basis()[0], so5.space().basis()[1]}, 25);
  if (!bracket_space(so5.algebra(), bad, bad).is_zero()) CHECK_FALSE(is_point_space(bad, so5, rng));
  auto sl3 = construct_sl(3);
  CHECK_THROWS_AS(is_type1_point_space(line_of(Matrix::unit(3, 0, 1)), sl3, rng), PreconditionError);
}

TEST_CASE("Jordan-Lie inner ideals") {
  auto alg = InvolutiveAlgebra::full(2);
  CHECK_FALSE(is_jordan_lie(line_of(Matrix::unit(2, 0, 1) + Matrix::unit(2, 1, 0)), alg));
  CHECK(is_jordan_lie(line_of(Matrix::unit(2, 0, 1)), alg));
}

TEST_CASE("subspaces of square-zero ideals: inner iff symmetric sandwich closed") {
  Rng rng(kSeed + 7);
  int inner_seen = 0, other_seen = 0;
  for (std::size_t n = 3; n <= 4; ++n) {
    auto l = construct_sl(n);
    const auto& alg = l.algebra();
    for (int t = 0; t < 12; ++t) {
      auto [e, f] = random_orthogonal_idempotents(rng, n, 1 + rng.integer(0, 1), n == 3 ? 1 : 1 + rng.integer(0, 1));
      auto big = construct_eAf(l, e, f);
      if (big.dim() < 2) continue;
      std::size_t take = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(big.dim()) - 1));
      std::vector<Vector> vs;
      for (std::size_t k = 0; k < take; ++k) vs.push_back(big.combine(rng.vector(big.dim(), 1)));
      auto j = canonicalize(vs, alg.dim());
      CHECK(square_space(alg, j).is_zero());
      bool inner = is_inner_ideal(j, l);
      CHECK(inner == symmetric_sandwich_closed(j, l));
      CHECK(inner == brute_force_inner(j, l));
      if (inner) CHECK(square_sandwich_closed(j, l));
      CHECK(l.contains(sandwich_space(alg, j, j)));
      (inner ? inner_seen : other_seen)++;
    }
  }
  CHECK(inner_seen > 0);
  CHECK(other_seen > 0);
}

TEST_CASE("star-regularity transfers through the doubled algebra") {
  Rng rng(kSeed + 8);
  const std::size_t n = 3;
  auto dbl = InvolutiveAlgebra::doubled(n);
  auto k = construct_su_star(dbl);
  auto sl = construct_sl(n);
  int regular_seen = 0;
  for (int t = 0; t < 10; ++t) {
    auto [e, f] = random_orthogonal_idempotents(rng, n, 1, 1 + rng.integer(0, 1));
    auto big = construct_eAf(sl, e, f);
    std::vector<Vector> lifted;
    std::size_t take = t % 2 == 0 ? big.dim() : 1;
    for (std::size_t c = 0; c < take; ++c) {
      Matrix m(n, n, t % 2 == 0 ? big.basis()[c] : big.combine(rng.vector(big.dim(), 1)));
      lifted.push_back(dbl.flatten(dbl.element(m, -m)));
    }
    auto i = canonicalize(lifted, dbl.dim());
    REQUIRE(k.contains(i));
    auto phi = doubled_projection(dbl, i);
    bool star_regular = is_star_regular(i, dbl);
    CHECK(star_regular == is_regular(phi, sl.algebra()));
    if (star_regular) {
      ++regular_seen;
      CHECK(is_inner_ideal(i, k));
    }
  }
  CHECK(regular_seen > 0);
}

TEST_CASE("intersection with a subalgebra stays inner") {
  Rng rng(kSeed + 9);
  auto l = construct_sl(4);
  // sl(3) in the top-left corner of sl(4).
  auto h = direct_sum({{std::make_shared<const LieAlgebra>(construct_sl(3)), 0}}, 4);
  LieAlgebra sub(l.algebra(), h.space(), LieKind::Custom);
  for (int t = 0; t < 6; ++t) {
    auto [e, f] = random_orthogonal_idempotents(rng, 4);
    auto i = construct_eAf(l, e, f);
    CHECK(is_inner_ideal(subspace_intersect(i, sub.space()), sub));
  }
}

TEST_CASE("component decomposition of direct sums") {
  auto sum = direct_sum({construct_sl(2), construct_sl(3)});
  const auto& alg = sum.algebra();
  Matrix upper = Matrix::unit(5, 0, 1);
  auto i = line_of(upper);
  auto d = decompose_components(i, sum);
  CHECK(d.exact);
  CHECK(d.parts[0] == line_of(Matrix::unit(2, 0, 1)));
  CHECK(d.parts[1].is_zero());

  auto z = decompose_components(Subspace(alg.dim()), sum);
  CHECK(z.exact);
  for (const auto& p : z.parts) CHECK(p.is_zero());

  Rng rng(kSeed + 10);
  for (int t = 0; t < 5; ++t) {
    auto [e1, f1] = random_orthogonal_idempotents(rng, 2);
    auto [e2, f2] = random_orthogonal_idempotents(rng, 3);
    auto p1 = construct_eAf(InvolutiveAlgebra::full(2), e1, f1);
    auto p2 = construct_eAf(InvolutiveAlgebra::full(3), e2, f2);
    std::vector<Vector> pieces;
    for (const auto& v : p1.basis()) pieces.push_back(embed_component(sum, 0, v));
    for (const auto& v : p2.basis()) pieces.push_back(embed_component(sum, 1, v));
    auto whole = canonicalize(pieces, alg.dim());
    CHECK(is_inner_ideal(whole, sum));
    auto dd = decompose_components(whole, sum);
    CHECK(dd.exact);
    CHECK(dd.parts[0] == p1);
    CHECK(dd.parts[1] == p2);
  }
  // A diagonal line across both blocks is not a sum of its pieces.
  Matrix diag = Matrix::unit(5, 0, 1) + Matrix::unit(5, 2, 3);
  auto bad = decompose_components(line_of(diag), sum);
  CHECK_FALSE(bad.exact);
  CHECK(bad.counterexample);
}
