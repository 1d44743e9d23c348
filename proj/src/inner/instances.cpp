#include "lieinner/inner/instances.hpp"

#include <stdexcept>

#include "lieinner/assoc/ideals.hpp"
#include "lieinner/exact/linalg.hpp"
#include "lieinner/inner/inner_ideals.hpp"

namespace lieinner {

namespace {

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.integer(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

Matrix columns_to_matrix(const std::vector<Vector>& cols, std::size_t n) { return from_columns(cols, n); }

}  // namespace

std::pair<Matrix, Matrix> random_orthogonal_idempotents(Rng& rng, std::size_t n, std::optional<std::size_t> rank_e,
                                                        std::optional<std::size_t> rank_f) {
  const std::size_t a = rank_e ? *rank_e : draw(rng, 0, n);
  if (a > n) throw std::invalid_argument("rank of e exceeds n");
  const std::size_t b = rank_f ? *rank_f : draw(rng, 0, n - a);
  if (a + b > n) throw std::invalid_argument("rank e + rank f exceeds n");

  Matrix p = rng.invertible(n);
  Matrix da(n, n);
  for (std::size_t i = 0; i < a; ++i) da(i, i) = 1;
  Matrix e = p * da * *inverse(p);

  // f is the identity on b fresh vectors and kills image(e) plus a complement.
  for (;;) {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < b; ++i) cols.push_back(rng.vector(n, 2));
    for (std::size_t i = 0; i < a; ++i) cols.push_back(p.column_vector(i));
    while (cols.size() < n) cols.push_back(rng.vector(n, 2));
    Matrix q = columns_to_matrix(cols, n);
    auto qi = inverse(q);
    if (!qi) continue;
    Matrix db(n, n);
    for (std::size_t i = 0; i < b; ++i) db(i, i) = 1;
    return {e, q * db * *qi};
  }
}

std::vector<Vector> standard_isotropic_basis(const InvolutiveAlgebra& alg) {
  const Matrix& g = alg.gram();
  const std::size_t n = alg.n();
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(g(i, i))) continue;
    bool ok = true;
    for (std::size_t j : chosen) ok = ok && is_zero(g(i, j)) && is_zero(g(j, i));
    if (ok) chosen.push_back(i);
  }
  std::vector<Vector> out;
  for (std::size_t i : chosen) {
    Vector v = zero_vector(n);
    v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

Matrix random_isometry(Rng& rng, const InvolutiveAlgebra& alg) {
  if (alg.involution() != InvolutionKind::OrthogonalForm && alg.involution() != InvolutionKind::SymplecticForm)
    throw std::invalid_argument("isometries need a bilinear form");
  const std::size_t n = alg.n();
  const Matrix id = Matrix::identity(n);
  for (;;) {
    Matrix x = rng.matrix(n, n, 1);
    Matrix s = x - alg.star(alg.element(x)).primary;
    auto inv = inverse(id - s);
    if (inv) return *inv * (id + s);
  }
}

IsotropicIdempotent random_isotropic_idempotent(Rng& rng, const InvolutiveAlgebra& alg,
                                                std::optional<std::size_t> k) {
  const std::size_t n = alg.n();
  auto base = standard_isotropic_basis(alg);
  if (base.empty()) {
    if (k && *k > 0) throw std::invalid_argument("form has no isotropic vectors among coordinates");
    return {Matrix(n, n), {}};
  }
  const std::size_t dim = k ? *k : draw(rng, 1, base.size());
  if (dim > base.size()) throw std::invalid_argument("requested isotropic dimension exceeds the standard one");
  Matrix g = random_isometry(rng, alg);
  std::vector<Vector> image;
  for (std::size_t i = 0; i < dim; ++i) image.push_back(g * base[i]);
  if (dim == 0) return {Matrix(n, n), {}};
  Matrix b = columns_to_matrix(image, n);
  for (;;) {
    Matrix c0 = rng.matrix(dim, n, 2);
    auto m = inverse(c0 * b);
    if (!m) continue;
    return {b * (*m * c0), image};
  }
}

HyperbolicPlaneInstance hyperbolic_plane_instance(std::size_t n) {
  if (n < 3) throw std::invalid_argument("hyperbolic plane instance needs n >= 3");
  Matrix g = Matrix::identity(n);
  g(0, 0) = 0;
  g(1, 1) = 0;
  g(0, 1) = 1;
  g(1, 0) = 1;
  auto lie = construct_so(n, g);
  std::vector<Vector> span;
  for (std::size_t j = 2; j < n; ++j) span.push_back((Matrix::unit(n, 0, j) - Matrix::unit(n, j, 1)).entries());
  return {std::move(lie), canonicalize(span, n * n)};
}

Subspace bracket_with_vector(const LieAlgebra& so, const Vector& u, const std::vector<Vector>& ws) {
  const auto& alg = so.algebra();
  std::vector<Vector> out;
  for (const auto& w : ws) out.push_back((rank_one_operator(alg, u, w) - rank_one_operator(alg, w, u)).entries());
  return canonicalize(out, alg.dim());
}

}  // namespace lieinner
