#include "lieinner/lie/lie_algebra.hpp"

#include <stdexcept>

#include "lieinner/assoc/ideals.hpp"
#include "lieinner/exact/linalg.hpp"

namespace lieinner {

std::string to_string(LieKind k) {
  switch (k) {
    case LieKind::SL: return "sl";
    case LieKind::SO: return "so";
    case LieKind::SP: return "sp";
    case LieKind::SuStar: return "su_star";
    case LieKind::Derived: return "derived";
    case LieKind::DirectSum: return "direct_sum";
    case LieKind::Custom: return "custom";
  }
  return "unknown";
}

LieAlgebra::LieAlgebra(InvolutiveAlgebra algebra, Subspace space, LieKind kind,
                       std::vector<BlockComponent> components)
    : algebra_(std::move(algebra)), space_(std::move(space)), kind_(kind), components_(std::move(components)) {
  if (space_.ambient() != algebra_.dim()) throw std::invalid_argument("Lie algebra subspace has wrong ambient");
}

bool LieAlgebra::is_simple_by_construction() const {
  const std::size_t n = algebra_.n();
  switch (kind_) {
    case LieKind::SL: return n >= 2;
    case LieKind::SP: return n >= 2;
    case LieKind::SO: return n == 3 || n >= 5;
    case LieKind::SuStar: return algebra_.shape() == Shape::Doubled && n >= 2;
    default: return false;
  }
}

Subspace bracket_space(const InvolutiveAlgebra& alg, const Subspace& s, const Subspace& t) {
  SpanBuilder b(alg.dim());
  auto ts = elements_of(alg, t);
  for (const auto& x : elements_of(alg, s))
    for (const auto& y : ts) b.add(alg.flatten(alg.bracket(x, y)));
  return b.build();
}

LieAlgebra construct_sl(std::size_t n) {
  if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
  auto alg = InvolutiveAlgebra::full(n);
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && i == n - 1) continue;
      Matrix m = Matrix::unit(n, i, j);
      if (i == j) m(n - 1, n - 1) = -1;
      basis.push_back(m.entries());
    }
  return LieAlgebra(alg, canonicalize(basis, alg.dim()), LieKind::SL);
}

LieAlgebra construct_so(std::size_t n, std::optional<Matrix> gram) {
  if (n < 2) throw std::invalid_argument("so(n) needs n >= 2");
  auto alg = InvolutiveAlgebra::orthogonal(n, std::move(gram));
  return LieAlgebra(alg, skew_elements(alg), LieKind::SO);
}

LieAlgebra construct_sp(std::size_t n, std::optional<Matrix> gram) {
  if (n < 2) throw std::invalid_argument("sp(n) needs n >= 2");
  auto alg = InvolutiveAlgebra::symplectic(n, std::move(gram));
  return LieAlgebra(alg, skew_elements(alg), LieKind::SP);
}

LieAlgebra construct_classical(ClassicalKind kind, std::size_t n, std::optional<Matrix> gram) {
  switch (kind) {
    case ClassicalKind::SL:
      if (gram) throw std::invalid_argument("sl(n) takes no form");
      return construct_sl(n);
    case ClassicalKind::SO: return construct_so(n, std::move(gram));
    case ClassicalKind::SP: return construct_sp(n, std::move(gram));
  }
  throw std::invalid_argument("unknown classical kind");
}

LieAlgebra construct_su_star(const InvolutiveAlgebra& alg) {
  Subspace u = skew_elements(alg);
  return LieAlgebra(alg, bracket_space(alg, u, u), LieKind::SuStar);
}

LieAlgebra as_lie_algebra(const InvolutiveAlgebra& alg) {
  return LieAlgebra(alg, whole_algebra(alg), LieKind::Custom);
}

bool is_bracket_closed(const LieAlgebra& l) {
  auto xs = elements_of(l.algebra(), l.space());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!l.contains(l.algebra().flatten(l.algebra().bracket(xs[i], xs[j])))) return false;
  return true;
}

LieAlgebra derived_algebra(const LieAlgebra& l) {
  return LieAlgebra(l.algebra(), bracket_space(l.algebra(), l.space(), l.space()), LieKind::Derived);
}

bool is_perfect(const LieAlgebra& l) {
  return bracket_space(l.algebra(), l.space(), l.space()) == l.space();
}

Matrix killing_form(const LieAlgebra& l) {
  const std::size_t d = l.dim();
  const auto& alg = l.algebra();
  auto xs = elements_of(alg, l.space());
  std::vector<Matrix> ad(d, Matrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = l.space().coordinates(alg.flatten(alg.bracket(xs[i], xs[j])));
      if (!c) throw std::invalid_argument("killing_form: subspace is not bracket-closed");
      for (std::size_t k = 0; k < d; ++k) ad[i](k, j) = (*c)[k];
    }
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Scalar t = 0;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < d; ++m)
          if (!is_zero(ad[i](k, m)) && !is_zero(ad[j](m, k))) t += ad[i](k, m) * ad[j](m, k);
      g(i, j) = t;
      g(j, i) = t;
    }
  return g;
}

bool is_semisimple(const LieAlgebra& l) {
  if (l.dim() == 0) return true;
  return rank(killing_form(l)) == l.dim();
}

namespace {

InvolutiveAlgebra combined_algebra(const std::vector<BlockComponent>& blocks, std::size_t total) {
  InvolutionKind shared = blocks.front().lie->algebra().involution();
  for (const auto& b : blocks)
    if (b.lie->algebra().involution() != shared) shared = InvolutionKind::None;
  bool covers = true;
  std::size_t next = 0;
  for (const auto& b : blocks) {
    covers = covers && b.offset == next;
    next = b.offset + b.lie->algebra().n();
  }
  covers = covers && next == total;
  if (shared == InvolutionKind::None || !covers) return InvolutiveAlgebra::full(total);
  std::vector<Matrix> grams;
  for (const auto& b : blocks) grams.push_back(b.lie->algebra().gram());
  Matrix g = block_diagonal(grams);
  switch (shared) {
    case InvolutionKind::Transpose: return InvolutiveAlgebra::transpose(total);
    case InvolutionKind::OrthogonalForm: return InvolutiveAlgebra::orthogonal(total, g);
    case InvolutionKind::SymplecticForm: return InvolutiveAlgebra::symplectic(total, g);
    default: return InvolutiveAlgebra::full(total);
  }
}

}  // namespace

LieAlgebra direct_sum(std::vector<BlockComponent> blocks, std::size_t total) {
  if (blocks.empty()) throw std::invalid_argument("direct_sum needs at least one component");
  std::vector<bool> used(total, false);
  for (const auto& b : blocks) {
    if (!b.lie) throw std::invalid_argument("direct_sum: null component");
    if (b.lie->algebra().shape() != Shape::Full) throw std::invalid_argument("direct_sum: components must be Full");
    const std::size_t m = b.lie->algebra().n();
    if (b.offset + m > total) throw std::invalid_argument("direct_sum: block exceeds ambient size");
    for (std::size_t i = b.offset; i < b.offset + m; ++i) {
      if (used[i]) throw std::invalid_argument("direct_sum: overlapping blocks");
      used[i] = true;
    }
  }
  auto alg = combined_algebra(blocks, total);
  SpanBuilder span(alg.dim());
  LieAlgebra shell(alg, Subspace(alg.dim()), LieKind::DirectSum, blocks);
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (const auto& v : blocks[k].lie->space().basis()) span.add(embed_component(shell, k, v));
  return LieAlgebra(alg, span.build(), LieKind::DirectSum, std::move(blocks));
}

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts) {
  std::vector<BlockComponent> blocks;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    blocks.push_back({std::make_shared<const LieAlgebra>(p), offset});
    offset += p.algebra().n();
  }
  return direct_sum(std::move(blocks), offset);
}

Vector embed_component(const LieAlgebra& sum, std::size_t k, const Vector& x) {
  const auto& b = sum.components().at(k);
  Matrix m = b.lie->algebra().unflatten(x).primary;
  Matrix big(sum.algebra().n(), sum.algebra().n());
  big.set_block(b.offset, b.offset, m);
  return big.entries();
}

Vector project_component(const LieAlgebra& sum, std::size_t k, const Vector& x) {
  const auto& b = sum.components().at(k);
  const std::size_t m = b.lie->algebra().n();
  Matrix big = sum.algebra().unflatten(x).primary;
  return big.block(b.offset, b.offset, m, m).entries();
}

Subspace component_space(const LieAlgebra& sum, std::size_t k) {
  SpanBuilder span(sum.algebra().dim());
  for (const auto& v : sum.components().at(k).lie->space().basis()) span.add(embed_component(sum, k, v));
  return span.build();
}

}  // namespace lieinner
