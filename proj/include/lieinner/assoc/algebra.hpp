#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "lieinner/exact/matrix.hpp"

namespace lieinner {

enum class Shape { Full, Doubled };

enum class InvolutionKind { None, Transpose, OrthogonalForm, SymplecticForm, Exchange };

std::string to_string(Shape s);
std::string to_string(InvolutionKind k);

// An element of M_n (opposite is empty) or of M_n (+) M_n^op.
struct AlgebraElement {
  Matrix primary;
  Matrix opposite;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

// M_n or the doubled algebra M_n (+) M_n^op, optionally with an involution.
// The doubled algebra multiplies (a, b)(c, d) = (ac, db), so the exchange
// (a, b) -> (b, a) is an involution without transposes.
//
// Forms follow Phi(x, y) = x^T G y, so the induced involution is
// a* = G^{-1} a^T G.
class InvolutiveAlgebra {
 public:
  static InvolutiveAlgebra full(std::size_t n);
  static InvolutiveAlgebra transpose(std::size_t n);
  // Gram defaults to the identity; must be symmetric and invertible.
  static InvolutiveAlgebra orthogonal(std::size_t n, std::optional<Matrix> gram = std::nullopt);
  // Gram defaults to [[0, I], [-I, 0]]; must be skew-symmetric and invertible.
  static InvolutiveAlgebra symplectic(std::size_t n, std::optional<Matrix> gram = std::nullopt);
  static InvolutiveAlgebra doubled(std::size_t n, bool exchange = true);

  Shape shape() const { return shape_; }
  std::size_t n() const { return n_; }
  InvolutionKind involution() const { return kind_; }
  bool has_involution() const { return kind_ != InvolutionKind::None; }
  const Matrix& gram() const { return gram_; }
  std::size_t dim() const { return shape_ == Shape::Full ? n_ * n_ : 2 * n_ * n_; }

  AlgebraElement zero() const;
  AlgebraElement identity() const;
  AlgebraElement basis_element(std::size_t k) const;
  // Full only: wraps a matrix.
  AlgebraElement element(Matrix m) const;
  AlgebraElement element(Matrix primary, Matrix opposite) const;

  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement scale(const Scalar& s, const AlgebraElement& a) const;
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) const;
  // Throws std::invalid_argument when the algebra has no involution.
  AlgebraElement star(const AlgebraElement& a) const;

  Vector flatten(const AlgebraElement& a) const;
  AlgebraElement unflatten(const Vector& v) const;

  // Vector-level shortcuts used by the subspace calculus.
  Vector mul(const Vector& a, const Vector& b) const;
  Vector bracket(const Vector& a, const Vector& b) const;
  Vector star(const Vector& a) const;

  bool is_idempotent(const AlgebraElement& a) const;
  void check_shape(const AlgebraElement& a) const;

  friend bool operator==(const InvolutiveAlgebra&, const InvolutiveAlgebra&) = default;

 private:
  InvolutiveAlgebra(Shape shape, std::size_t n, InvolutionKind kind, Matrix gram, Matrix gram_inv);

  Shape shape_ = Shape::Full;
  std::size_t n_ = 0;
  InvolutionKind kind_ = InvolutionKind::None;
  Matrix gram_;
  Matrix gram_inv_;
};

// [[0, I_m], [-I_m, 0]] for n = 2m.
Matrix standard_symplectic_gram(std::size_t n);
// Ones on the anti-diagonal: the split form whose standard isotropic
// vectors are e_1 .. e_{floor(n/2)}.
Matrix split_orthogonal_gram(std::size_t n);
// Block diagonal with 2x2 blocks [[0,1],[eps,0]] on coordinate pairs
// (2i, 2i+1); n must be even.
Matrix hyperbolic_gram(std::size_t n, int epsilon);

}  // namespace lieinner
