#include "lieinner/assoc/algebra.hpp"

#include <stdexcept>

#include "lieinner/exact/linalg.hpp"

namespace lieinner {

std::string to_string(Shape s) { return s == Shape::Full ? "full" : "doubled"; }

std::string to_string(InvolutionKind k) {
  switch (k) {
    case InvolutionKind::None: return "none";
    case InvolutionKind::Transpose: return "transpose";
    case InvolutionKind::OrthogonalForm: return "orthogonal";
    case InvolutionKind::SymplecticForm: return "symplectic";
    case InvolutionKind::Exchange: return "exchange";
  }
  return "unknown";
}

InvolutiveAlgebra::InvolutiveAlgebra(Shape shape, std::size_t n, InvolutionKind kind, Matrix gram,
                                     Matrix gram_inv)
    : shape_(shape), n_(n), kind_(kind), gram_(std::move(gram)), gram_inv_(std::move(gram_inv)) {
  if (n == 0) throw std::invalid_argument("algebra size must be positive");
}

InvolutiveAlgebra InvolutiveAlgebra::full(std::size_t n) {
  return InvolutiveAlgebra(Shape::Full, n, InvolutionKind::None, {}, {});
}

InvolutiveAlgebra InvolutiveAlgebra::transpose(std::size_t n) {
  return InvolutiveAlgebra(Shape::Full, n, InvolutionKind::Transpose, Matrix::identity(n),
                           Matrix::identity(n));
}

InvolutiveAlgebra InvolutiveAlgebra::orthogonal(std::size_t n, std::optional<Matrix> gram) {
  Matrix g = gram ? *gram : Matrix::identity(n);
  if (g.rows() != n || g.cols() != n) throw std::invalid_argument("orthogonal Gram matrix has wrong shape");
  if (g.transpose() != g) throw std::invalid_argument("orthogonal Gram matrix must be symmetric");
  auto inv = inverse(g);
  if (!inv) throw std::invalid_argument("orthogonal Gram matrix must be invertible");
  return InvolutiveAlgebra(Shape::Full, n, InvolutionKind::OrthogonalForm, std::move(g), std::move(*inv));
}

InvolutiveAlgebra InvolutiveAlgebra::symplectic(std::size_t n, std::optional<Matrix> gram) {
  if (n % 2 != 0) throw std::invalid_argument("symplectic form needs even dimension");
  Matrix g = gram ? *gram : standard_symplectic_gram(n);
  if (g.rows() != n || g.cols() != n) throw std::invalid_argument("symplectic Gram matrix has wrong shape");
  if (g.transpose() != -g) throw std::invalid_argument("symplectic Gram matrix must be skew-symmetric");
  auto inv = inverse(g);
  if (!inv) throw std::invalid_argument("symplectic Gram matrix must be invertible");
  return InvolutiveAlgebra(Shape::Full, n, InvolutionKind::SymplecticForm, std::move(g), std::move(*inv));
}

InvolutiveAlgebra InvolutiveAlgebra::doubled(std::size_t n, bool exchange) {
  return InvolutiveAlgebra(Shape::Doubled, n, exchange ? InvolutionKind::Exchange : InvolutionKind::None, {},
                           {});
}

void InvolutiveAlgebra::check_shape(const AlgebraElement& a) const {
  bool ok = a.primary.rows() == n_ && a.primary.cols() == n_;
  if (shape_ == Shape::Full)
    ok = ok && a.opposite.rows() == 0 && a.opposite.cols() == 0;
  else
    ok = ok && a.opposite.rows() == n_ && a.opposite.cols() == n_;
  if (!ok) throw std::invalid_argument("element shape does not match the algebra");
}

AlgebraElement InvolutiveAlgebra::zero() const {
  return shape_ == Shape::Full ? AlgebraElement{Matrix(n_, n_), {}} : AlgebraElement{Matrix(n_, n_), Matrix(n_, n_)};
}

AlgebraElement InvolutiveAlgebra::identity() const {
  auto i = Matrix::identity(n_);
  return shape_ == Shape::Full ? AlgebraElement{i, {}} : AlgebraElement{i, i};
}

AlgebraElement InvolutiveAlgebra::basis_element(std::size_t k) const {
  if (k >= dim()) throw std::out_of_range("basis index out of range");
  Vector v = zero_vector(dim());
  v[k] = 1;
  return unflatten(v);
}

AlgebraElement InvolutiveAlgebra::element(Matrix m) const {
  if (shape_ != Shape::Full) throw std::invalid_argument("doubled algebra elements need two components");
  AlgebraElement a{std::move(m), {}};
  check_shape(a);
  return a;
}

AlgebraElement InvolutiveAlgebra::element(Matrix primary, Matrix opposite) const {
  AlgebraElement a{std::move(primary), std::move(opposite)};
  check_shape(a);
  return a;
}

AlgebraElement InvolutiveAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
  if (shape_ == Shape::Full) return {a.primary + b.primary, {}};
  return {a.primary + b.primary, a.opposite + b.opposite};
}

AlgebraElement InvolutiveAlgebra::sub(const AlgebraElement& a, const AlgebraElement& b) const {
  if (shape_ == Shape::Full) return {a.primary - b.primary, {}};
  return {a.primary - b.primary, a.opposite - b.opposite};
}

AlgebraElement InvolutiveAlgebra::scale(const Scalar& s, const AlgebraElement& a) const {
  if (shape_ == Shape::Full) return {s * a.primary, {}};
  return {s * a.primary, s * a.opposite};
}

AlgebraElement InvolutiveAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
  if (shape_ == Shape::Full) return {a.primary * b.primary, {}};
  return {a.primary * b.primary, b.opposite * a.opposite};
}

AlgebraElement InvolutiveAlgebra::bracket(const AlgebraElement& a, const AlgebraElement& b) const {
  return sub(mul(a, b), mul(b, a));
}

AlgebraElement InvolutiveAlgebra::star(const AlgebraElement& a) const {
  switch (kind_) {
    case InvolutionKind::None: throw std::invalid_argument("algebra has no involution");
    case InvolutionKind::Transpose: return {a.primary.transpose(), {}};
    case InvolutionKind::OrthogonalForm:
    case InvolutionKind::SymplecticForm: return {gram_inv_ * a.primary.transpose() * gram_, {}};
    case InvolutionKind::Exchange: return {a.opposite, a.primary};
  }
  throw std::logic_error("unreachable involution kind");
}

Vector InvolutiveAlgebra::flatten(const AlgebraElement& a) const {
  check_shape(a);
  Vector v = a.primary.entries();
  if (shape_ == Shape::Doubled) v.insert(v.end(), a.opposite.entries().begin(), a.opposite.entries().end());
  return v;
}

AlgebraElement InvolutiveAlgebra::unflatten(const Vector& v) const {
  if (v.size() != dim()) throw std::length_error("coordinate vector does not match algebra dimension");
  const auto nn = static_cast<std::ptrdiff_t>(n_ * n_);
  Matrix p(n_, n_, Vector(v.begin(), v.begin() + nn));
  if (shape_ == Shape::Full) return {std::move(p), {}};
  return {std::move(p), Matrix(n_, n_, Vector(v.begin() + nn, v.end()))};
}

Vector InvolutiveAlgebra::mul(const Vector& a, const Vector& b) const {
  return flatten(mul(unflatten(a), unflatten(b)));
}

Vector InvolutiveAlgebra::bracket(const Vector& a, const Vector& b) const {
  return flatten(bracket(unflatten(a), unflatten(b)));
}

Vector InvolutiveAlgebra::star(const Vector& a) const { return flatten(star(unflatten(a))); }

bool InvolutiveAlgebra::is_idempotent(const AlgebraElement& a) const { return mul(a, a) == a; }

Matrix standard_symplectic_gram(std::size_t n) {
  if (n % 2 != 0) throw std::invalid_argument("symplectic Gram needs even dimension");
  const std::size_t m = n / 2;
  Matrix g(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    g(i, m + i) = 1;
    g(m + i, i) = -1;
  }
  return g;
}

Matrix split_orthogonal_gram(std::size_t n) {
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, n - 1 - i) = 1;
  return g;
}

Matrix hyperbolic_gram(std::size_t n, int epsilon) {
  if (n % 2 != 0) throw std::invalid_argument("hyperbolic Gram needs even dimension");
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  Matrix g(n, n);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    g(i, i + 1) = 1;
    g(i + 1, i) = epsilon;
  }
  return g;
}

}  // namespace lieinner
