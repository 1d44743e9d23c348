#include "lieinner/assoc/ideals.hpp"

#include "lieinner/exact/linalg.hpp"

namespace lieinner {

namespace {

enum class Component { Primary, Opposite };

const Matrix& component(const AlgebraElement& a, Component c) {
  return c == Component::Primary ? a.primary : a.opposite;
}

// Sum of the column (or row) spaces of one matrix component over a basis.
Subspace component_columns(const InvolutiveAlgebra& alg, const Subspace& s, Component c) {
  SpanBuilder b(alg.n());
  for (const auto& v : s.basis()) {
    AlgebraElement a = alg.unflatten(v);
    const Matrix& m = component(a, c);
    for (std::size_t j = 0; j < m.cols(); ++j) b.add(m.column_vector(j));
  }
  return b.build();
}

Subspace component_rows(const InvolutiveAlgebra& alg, const Subspace& s, Component c) {
  SpanBuilder b(alg.n());
  for (const auto& v : s.basis()) {
    AlgebraElement a = alg.unflatten(v);
    const Matrix& m = component(a, c);
    for (std::size_t i = 0; i < m.rows(); ++i) b.add(m.row_vector(i));
  }
  return b.build();
}

// Adds all u v^T (u in cols, v in rows) placed in the given component.
void add_tensor(const InvolutiveAlgebra& alg, SpanBuilder& out, const Subspace& cols, const Subspace& rows,
                Component c) {
  const std::size_t n = alg.n(), offset = c == Component::Primary ? 0 : n * n;
  for (const auto& u : cols.basis())
    for (const auto& w : rows.basis()) {
      Vector v = zero_vector(alg.dim());
      for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(u[i])) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!is_zero(w[j])) v[offset + i * n + j] = u[i] * w[j];
      }
      out.add(std::move(v));
    }
}

Subspace whole_component_space(const InvolutiveAlgebra& alg) { return Subspace::whole(alg.n()); }

}  // namespace

Subspace span_of(const InvolutiveAlgebra& alg, std::span<const AlgebraElement> elements) {
  SpanBuilder b(alg.dim());
  for (const auto& e : elements) b.add(alg.flatten(e));
  return b.build();
}

Subspace whole_algebra(const InvolutiveAlgebra& alg) { return Subspace::whole(alg.dim()); }

std::vector<AlgebraElement> elements_of(const InvolutiveAlgebra& alg, const Subspace& s) {
  std::vector<AlgebraElement> out;
  out.reserve(s.dim());
  for (const auto& v : s.basis()) out.push_back(alg.unflatten(v));
  return out;
}

Subspace product_space(const InvolutiveAlgebra& alg, const Subspace& s, const Subspace& t) {
  SpanBuilder b(alg.dim());
  auto ts = elements_of(alg, t);
  for (const auto& x : elements_of(alg, s))
    for (const auto& y : ts) b.add(alg.flatten(alg.mul(x, y)));
  return b.build();
}

Subspace sandwich_space(const InvolutiveAlgebra& alg, const Subspace& s, const Subspace& t) {
  SpanBuilder b(alg.dim());
  add_tensor(alg, b, component_columns(alg, s, Component::Primary), component_rows(alg, t, Component::Primary),
             Component::Primary);
  if (alg.shape() == Shape::Doubled)
    add_tensor(alg, b, component_columns(alg, t, Component::Opposite),
               component_rows(alg, s, Component::Opposite), Component::Opposite);
  return b.build();
}

Subspace skew_part(const InvolutiveAlgebra& alg, const Subspace& s) {
  SpanBuilder b(alg.dim());
  for (const auto& v : s.basis()) b.add(subtract(v, alg.star(v)));
  return b.build();
}

Subspace skew_elements(const InvolutiveAlgebra& alg) { return skew_part(alg, whole_algebra(alg)); }

Subspace star_image(const InvolutiveAlgebra& alg, const Subspace& s) {
  SpanBuilder b(alg.dim());
  for (const auto& v : s.basis()) b.add(alg.star(v));
  return b.build();
}

bool is_one_sided_ideal(const InvolutiveAlgebra& alg, const Subspace& s, Side side) {
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    AlgebraElement a = alg.basis_element(k);
    for (const auto& x : elements_of(alg, s)) {
      auto p = side == Side::Left ? alg.mul(a, x) : alg.mul(x, a);
      if (!s.contains(alg.flatten(p))) return false;
    }
  }
  return true;
}

OneSidedIdeal ideal_generated(const InvolutiveAlgebra& alg, const Subspace& s, Side side) {
  SpanBuilder b(alg.dim());
  auto all = whole_component_space(alg);
  if (side == Side::Left) {
    add_tensor(alg, b, all, component_rows(alg, s, Component::Primary), Component::Primary);
    if (alg.shape() == Shape::Doubled)
      add_tensor(alg, b, component_columns(alg, s, Component::Opposite), all, Component::Opposite);
  } else {
    add_tensor(alg, b, component_columns(alg, s, Component::Primary), all, Component::Primary);
    if (alg.shape() == Shape::Doubled)
      add_tensor(alg, b, all, component_rows(alg, s, Component::Opposite), Component::Opposite);
  }
  return {side, b.build()};
}

OneSidedIdeal ideal_generated(const InvolutiveAlgebra& alg, const AlgebraElement& x, Side side) {
  return ideal_generated(alg, canonicalize(std::vector<Vector>{alg.flatten(x)}, alg.dim()), side);
}

AlgebraElement idempotent_generator(const InvolutiveAlgebra& alg, const OneSidedIdeal& ideal) {
  const auto& basis = ideal.space.basis();
  const std::size_t d = basis.size(), dim = alg.dim();
  if (d == 0) return alg.zero();
  // Unknown f = sum_k c_k b_k with x f = x (left) or f x = x (right) for every
  // basis vector x of the ideal.
  Matrix system(d * dim, d);
  Vector rhs(d * dim);
  auto elems = elements_of(alg, ideal.space);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      auto p = ideal.side == Side::Left ? alg.mul(elems[i], elems[k]) : alg.mul(elems[k], elems[i]);
      Vector pv = alg.flatten(p);
      for (std::size_t r = 0; r < dim; ++r) system(i * dim + r, k) = pv[r];
    }
    for (std::size_t r = 0; r < dim; ++r) rhs[i * dim + r] = basis[i][r];
  }
  auto c = solve_linear(system, rhs);
  if (!c) throw InternalError("no one-sided identity inside the ideal; is the algebra semisimple?");
  AlgebraElement f = alg.unflatten(ideal.space.combine(*c));
  if (!alg.is_idempotent(f)) throw InternalError("recovered generator is not idempotent");
  if (ideal_generated(alg, f, ideal.side).space != ideal.space)
    throw InternalError("recovered idempotent does not generate the ideal");
  return f;
}

std::optional<AlgebraElement> von_neumann_witness(const InvolutiveAlgebra& alg, const AlgebraElement& x) {
  const std::size_t dim = alg.dim();
  std::vector<Vector> cols;
  cols.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) cols.push_back(alg.flatten(alg.mul(alg.mul(x, alg.basis_element(k)), x)));
  auto y = solve_linear(from_columns(cols, dim), alg.flatten(x));
  if (!y) return std::nullopt;
  return alg.unflatten(*y);
}

std::size_t sandwich_dimension(const InvolutiveAlgebra& alg, const AlgebraElement& x) {
  SpanBuilder b(alg.dim());
  for (std::size_t k = 0; k < alg.dim(); ++k) b.add(alg.flatten(alg.mul(alg.mul(x, alg.basis_element(k)), x)));
  return b.dim();
}

namespace detail {

Subspace ideal_generated_by_products(const InvolutiveAlgebra& alg, const Subspace& s, Side side) {
  SpanBuilder b(alg.dim());
  for (const auto& v : s.basis()) b.add(v);
  auto xs = elements_of(alg, s);
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    AlgebraElement a = alg.basis_element(k);
    for (const auto& x : xs) b.add(alg.flatten(side == Side::Left ? alg.mul(a, x) : alg.mul(x, a)));
  }
  return b.build();
}

Subspace sandwich_by_products(const InvolutiveAlgebra& alg, const Subspace& s, const Subspace& t) {
  SpanBuilder b(alg.dim());
  auto ss = elements_of(alg, s), ts = elements_of(alg, t);
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    AlgebraElement a = alg.basis_element(k);
    for (const auto& x : ss) {
      AlgebraElement xa = alg.mul(x, a);
      for (const auto& y : ts) b.add(alg.flatten(alg.mul(xa, y)));
    }
  }
  return b.build();
}

}  // namespace detail

}  // namespace lieinner
