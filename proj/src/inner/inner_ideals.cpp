#include "lieinner/inner/inner_ideals.hpp"

#include "lieinner/exact/linalg.hpp"

namespace lieinner {

namespace {

void require_inside(const Subspace& i, const LieAlgebra& l) {
  if (i.ambient() != l.space().ambient()) throw PreconditionError("subspace lives in a different algebra");
  if (!l.contains(i)) throw PreconditionError("subspace is not contained in the Lie algebra");
}

Subspace line(const InvolutiveAlgebra& alg, const AlgebraElement& x) {
  return canonicalize(std::vector<Vector>{alg.flatten(x)}, alg.dim());
}

Vector random_combination(Rng& rng, const Subspace& s) {
  for (;;) {
    Vector c(s.dim());
    for (auto& x : c) x = rng.integer(-3, 3);
    Vector v = s.combine(c);
    if (!is_zero(v)) return v;
  }
}

std::vector<Vector> sample_points(const Subspace& s, Rng& rng, std::size_t samples) {
  std::vector<Vector> xs = s.basis();
  if (s.dim() > 1)
    for (std::size_t k = 0; k < samples; ++k) xs.push_back(random_combination(rng, s));
  return xs;
}

}  // namespace

InnerIdealCandidate make_candidate(std::shared_ptr<const LieAlgebra> lie, Subspace space) {
  if (!lie) throw PreconditionError("candidate needs a Lie algebra");
  require_inside(space, *lie);
  return {std::move(lie), std::move(space)};
}

bool is_inner_ideal(const Subspace& i, const LieAlgebra& l) {
  require_inside(i, l);
  if (i.is_zero() || i == l.space()) return true;
  const auto& alg = l.algebra();
  return i.contains(bracket_space(alg, i, bracket_space(alg, i, l.space())));
}

Subspace construct_eAf(const InvolutiveAlgebra& alg, const Matrix& e, const Matrix& f) {
  if (alg.shape() != Shape::Full) throw PreconditionError("eAf needs a full matrix algebra");
  auto ee = alg.element(e), ff = alg.element(f);
  if (!alg.is_idempotent(ee)) throw PreconditionError("e is not idempotent");
  if (!alg.is_idempotent(ff)) throw PreconditionError("f is not idempotent");
  if (!(f * e).is_zero()) throw PreconditionError("fe is not zero");
  return sandwich_space(alg, line(alg, ee), line(alg, ff));
}

Subspace construct_eAf(const LieAlgebra& l, const Matrix& e, const Matrix& f) {
  Subspace i = construct_eAf(l.algebra(), e, f);
  if (!l.contains(i)) throw InternalError("eAf is not contained in the Lie algebra");
  return i;
}

Subspace construct_eLestar(const LieAlgebra& l, const AlgebraElement& e) {
  const auto& alg = l.algebra();
  if (!alg.has_involution()) throw PreconditionError("eLe* needs an involution");
  alg.check_shape(e);
  if (!alg.is_idempotent(e)) throw PreconditionError("e is not idempotent");
  AlgebraElement es = alg.star(e);
  if (!is_zero(alg.flatten(alg.mul(es, e)))) throw PreconditionError("e*e is not zero");
  SpanBuilder b(alg.dim());
  for (const auto& x : elements_of(alg, l.space())) b.add(alg.flatten(alg.mul(alg.mul(e, x), es)));
  Subspace i = b.build();
  if (l.contains(i)) return i;
  if (l.kind() == LieKind::SO || l.kind() == LieKind::SP) throw InternalError("eLe* is not contained in L");
  return subspace_intersect(i, l.space());
}

Matrix rank_one_operator(const InvolutiveAlgebra& alg, const Vector& u, const Vector& v) {
  return Matrix::column(v) * Matrix::row(alg.gram() * u);
}

Subspace isotropic_bracket_span(const InvolutiveAlgebra& alg, std::span<const Vector> u) {
  if (alg.involution() != InvolutionKind::OrthogonalForm && alg.involution() != InvolutionKind::SymplecticForm)
    throw PreconditionError("[U, U] needs a bilinear form");
  const int sign = alg.involution() == InvolutionKind::SymplecticForm ? 1 : -1;
  SpanBuilder b(alg.dim());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i; j < u.size(); ++j) {
      Matrix m = rank_one_operator(alg, u[i], u[j]);
      Matrix t = rank_one_operator(alg, u[j], u[i]);
      b.add((sign > 0 ? m + t : m - t).entries());
    }
  return b.build();
}

Subspace square_space(const InvolutiveAlgebra& alg, const Subspace& i) { return product_space(alg, i, i); }

bool is_regular(const Subspace& i, const InvolutiveAlgebra& alg) {
  if (!square_space(alg, i).is_zero()) return false;
  return i.contains(sandwich_space(alg, i, i));
}

bool is_star_regular(const Subspace& i, const InvolutiveAlgebra& alg) {
  if (!square_space(alg, i).is_zero()) return false;
  return i.contains(skew_part(alg, sandwich_space(alg, i, i)));
}

bool sandwich_condition(const LieAlgebra& l, const OneSidedIdeal& right, const OneSidedIdeal& left,
                        const Subspace& i) {
  const auto& alg = l.algebra();
  if (!product_space(alg, left.space, right.space).is_zero()) return false;
  if (!i.contains(product_space(alg, right.space, left.space))) return false;
  return subspace_intersect(subspace_intersect(right.space, left.space), l.space()).contains(i);
}

bool star_sandwich_condition(const LieAlgebra& k, const OneSidedIdeal& left, const Subspace& i) {
  const auto& alg = k.algebra();
  Subspace ls = star_image(alg, left.space);
  if (!product_space(alg, left.space, ls).is_zero()) return false;
  if (!i.contains(skew_part(alg, product_space(alg, ls, left.space)))) return false;
  return subspace_intersect(subspace_intersect(ls, left.space), k.space()).contains(i);
}

RegularDecomposition regular_decompose(const Subspace& i, const LieAlgebra& l) {
  const auto& alg = l.algebra();
  require_inside(i, l);
  if (!is_regular(i, alg)) throw PreconditionError("subspace is not a regular inner ideal");
  RegularDecomposition d{ideal_generated(alg, i, Side::Left), ideal_generated(alg, i, Side::Right)};
  d.lr_zero = product_space(alg, d.left.space, d.right.space).is_zero();
  d.sandwich_holds = sandwich_condition(l, d.right, d.left, i);
  auto whole = whole_algebra(alg);
  if (product_space(alg, whole, d.left.space) != product_space(alg, whole, i) ||
      product_space(alg, d.right.space, whole) != product_space(alg, i, whole))
    throw InternalError("A L != A I or R A != I A for a regular inner ideal");
  return d;
}

StarRegularDecomposition star_regular_decompose(const Subspace& i, const LieAlgebra& k) {
  const auto& alg = k.algebra();
  require_inside(i, k);
  if (!alg.has_involution()) throw PreconditionError("star-regularity needs an involution");
  if (!is_star_regular(i, alg)) throw PreconditionError("subspace is not a star-regular inner ideal");
  StarRegularDecomposition d{ideal_generated(alg, i, Side::Left)};
  d.ll_star_zero = product_space(alg, d.left.space, star_image(alg, d.left.space)).is_zero();
  d.sandwich_holds = star_sandwich_condition(k, d.left, i);
  return d;
}

SlClassification classify_sl_inner(const Subspace& i, const LieAlgebra& sl) {
  if (sl.kind() != LieKind::SL) throw PreconditionError("classification needs sl(n)");
  require_inside(i, sl);
  if (i == sl.space()) throw PreconditionError("inner ideal is not proper");
  if (!is_inner_ideal(i, sl)) throw PreconditionError("subspace is not an inner ideal");
  const auto& alg = sl.algebra();
  const std::size_t n = alg.n();
  SlClassification out{Matrix(n, n), Matrix(n, n)};
  auto fail = [&](std::string claim) {
    out.verified = false;
    out.counterexample = Counterexample{std::move(claim), i.basis()};
    return out;
  };
  try {
    auto left = ideal_generated(alg, i, Side::Left);
    auto right = ideal_generated(alg, i, Side::Right);
    out.f = idempotent_generator(alg, left).primary;
    out.e = idempotent_generator(alg, right).primary;
  } catch (const InternalError& err) {
    return fail(err.what());
  }
  if (!(out.f * out.e).is_zero()) return fail("recovered idempotents have fe != 0");
  if (construct_eAf(alg, out.e, out.f) != i) return fail("eAf differs from the inner ideal");
  out.verified = true;
  return out;
}

bool check_abelian(const Subspace& i, const LieAlgebra& l) {
  require_inside(i, l);
  return bracket_space(l.algebra(), i, i).is_zero();
}

Subspace triple_power(const Subspace& i, const LieAlgebra& l) {
  require_inside(i, l);
  const auto& alg = l.algebra();
  Subspace t = bracket_space(alg, i, bracket_space(alg, i, i));
  if (!is_inner_ideal(t, l)) throw InternalError("[I, [I, I]] is not an inner ideal");
  return t;
}

bool check_fundamental(const Subspace& i, const LieAlgebra& l) {
  if (!l.is_simple_by_construction()) throw PreconditionError("fundamental check needs a simple Lie algebra");
  require_inside(i, l);
  const auto& alg = l.algebra();
  return bracket_space(alg, i, bracket_space(alg, i, l.space())) == i;
}

ComponentDecomposition decompose_components(const Subspace& i, const LieAlgebra& sum) {
  if (sum.components().empty()) throw PreconditionError("decomposition needs a direct sum");
  require_inside(i, sum);
  ComponentDecomposition d;
  SpanBuilder total(i.ambient());
  for (std::size_t k = 0; k < sum.components().size(); ++k) {
    Subspace amb = subspace_intersect(i, component_space(sum, k));
    std::vector<Vector> local;
    for (const auto& v : amb.basis()) {
      total.add(v);
      local.push_back(project_component(sum, k, v));
    }
    d.parts.push_back(canonicalize(local, sum.components()[k].lie->algebra().dim()));
    d.ambient_parts.push_back(std::move(amb));
  }
  d.exact = total.build() == i;
  if (!d.exact) {
    std::vector<Vector> missing;
    for (const auto& v : i.basis())
      if (!total.contains(v)) missing.push_back(v);
    d.counterexample = Counterexample{"I is not the direct sum of its component intersections", missing};
  }
  return d;
}

bool check_I3V(const Subspace& i, const LieAlgebra& l) {
  require_inside(i, l);
  const auto& alg = l.algebra();
  bool zero = product_space(alg, i, product_space(alg, i, i)).is_zero();
  if (zero)
    for (const auto& x : elements_of(alg, i))
      if (!is_zero(alg.flatten(alg.mul(alg.mul(x, x), x)))) throw InternalError("I^3 = 0 but x^3 != 0");
  return zero;
}

bool is_point_space(const Subspace& p, const LieAlgebra& l, Rng& rng, std::size_t samples) {
  require_inside(p, l);
  if (p.is_zero()) return false;
  const auto& alg = l.algebra();
  if (!bracket_space(alg, p, p).is_zero()) return false;
  auto ys = elements_of(alg, l.space());
  for (const auto& v : sample_points(p, rng, samples)) {
    AlgebraElement x = alg.unflatten(v);
    SpanBuilder b(alg.dim());
    for (const auto& y : ys) b.add(alg.flatten(alg.bracket(x, alg.bracket(x, y))));
    if (b.build() != canonicalize(std::vector<Vector>{v}, alg.dim())) return false;
  }
  return true;
}

bool is_type1_point_space(const Subspace& p, const LieAlgebra& l, Rng& rng, std::size_t samples) {
  if (l.kind() != LieKind::SO) throw PreconditionError("type 1 point spaces live in so(n)");
  if (!is_point_space(p, l, rng, samples)) return false;
  const auto& alg = l.algebra();
  std::optional<Subspace> common;
  for (const auto& v : sample_points(p, rng, samples)) {
    Subspace im = column_space(alg.unflatten(v).primary);
    common = common ? subspace_intersect(*common, im) : im;
    if (common->is_zero()) return false;
  }
  return true;
}

bool is_jordan_lie(const Subspace& i, const InvolutiveAlgebra& alg) {
  if (!square_space(alg, i).is_zero()) return false;
  bool inner = is_inner_ideal(i, as_lie_algebra(alg));
  bool sandwich = i.contains(sandwich_space(alg, i, i));
  if (inner != sandwich) throw InternalError("inner in A^(-) disagrees with IAI subset of I");
  return inner;
}

bool symmetric_sandwich_closed(const Subspace& i, const LieAlgebra& l) {
  require_inside(i, l);
  const auto& alg = l.algebra();
  auto is = elements_of(alg, i), xs = elements_of(alg, l.space());
  for (std::size_t a = 0; a < is.size(); ++a)
    for (std::size_t b = a; b < is.size(); ++b)
      for (const auto& x : xs) {
        auto s = alg.add(alg.mul(alg.mul(is[a], x), is[b]), alg.mul(alg.mul(is[b], x), is[a]));
        if (!i.contains(alg.flatten(s))) return false;
      }
  return true;
}

bool square_sandwich_closed(const Subspace& i, const LieAlgebra& l) {
  require_inside(i, l);
  const auto& alg = l.algebra();
  auto xs = elements_of(alg, l.space());
  for (const auto& a : elements_of(alg, i))
    for (const auto& x : xs)
      if (!i.contains(alg.flatten(alg.mul(alg.mul(a, x), a)))) return false;
  return true;
}

Subspace doubled_projection(const InvolutiveAlgebra& doubled, const Subspace& i) {
  if (doubled.shape() != Shape::Doubled) throw PreconditionError("projection needs the doubled algebra");
  const std::size_t n = doubled.n();
  std::vector<Vector> vs;
  for (const auto& v : i.basis()) vs.push_back(doubled.unflatten(v).primary.entries());
  return canonicalize(vs, n * n);
}

}  // namespace lieinner
