#include "lieinner/finitary/finitary.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lieinner/exact/linalg.hpp"
#include "lieinner/lie/lie_algebra.hpp"

namespace lieinner {

FinVector FinVector::basis(std::size_t i) {
  FinVector v;
  v.entries_[i] = 1;
  return v;
}

FinVector FinVector::from_dense(const Vector& v) {
  FinVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.set(i, v[i]);
  return out;
}

Scalar FinVector::at(std::size_t i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Scalar(0) : it->second;
}

void FinVector::set(std::size_t i, const Scalar& x) {
  if (lieinner::is_zero(x))
    entries_.erase(i);
  else
    entries_[i] = x;
}

std::size_t FinVector::bound() const { return entries_.empty() ? 0 : entries_.rbegin()->first + 1; }

Vector FinVector::dense(std::size_t n) const {
  if (bound() > n) throw std::invalid_argument("vector support exceeds the truncation");
  Vector v = zero_vector(n);
  for (const auto& [i, x] : entries_) v[i] = x;
  return v;
}

FinVector& FinVector::axpy(const Scalar& a, const FinVector& x) {
  if (lieinner::is_zero(a)) return *this;
  for (const auto& [i, v] : x.entries_) set(i, at(i) + a * v);
  return *this;
}

FinVector operator*(const Scalar& s, const FinVector& a) {
  FinVector out;
  return out.axpy(s, a);
}

std::string to_string(PairingKind k) {
  switch (k) {
    case PairingKind::Standard: return "standard";
    case PairingKind::SymmetricHyperbolic: return "symmetric";
    case PairingKind::SkewStandard: return "skew";
  }
  return "unknown";
}

int DualPairSpec::epsilon() const {
  if (!self_dual()) throw std::invalid_argument("the standard pairing has no sign");
  return kind == PairingKind::SymmetricHyperbolic ? 1 : -1;
}

Scalar DualPairSpec::pair(std::size_t i, std::size_t j) const {
  if (kind == PairingKind::Standard) return i == j ? 1 : 0;
  if ((i ^ 1) != j) return 0;
  return i % 2 == 0 ? 1 : epsilon();
}

Scalar DualPairSpec::pair(const FinVector& x, const FinVector& y) const {
  Scalar s = 0;
  for (const auto& [i, a] : x.support()) {
    const std::size_t j = kind == PairingKind::Standard ? i : (i ^ 1);
    Scalar b = y.at(j);
    if (!is_zero(b)) s += a * b * pair(i, j);
  }
  return s;
}

Matrix DualPairSpec::gram(std::size_t n) const {
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = pair(i, j);
  return g;
}

namespace {

std::vector<std::size_t> support_union(const std::vector<FinRankOperator::Term>& terms, bool of_w) {
  std::set<std::size_t> s;
  for (const auto& t : terms)
    for (const auto& [i, x] : (of_w ? t.w : t.u).support()) s.insert(i);
  return {s.begin(), s.end()};
}

// M = sum u w^T over the used indices, then M = C R with R the reduced
// row echelon basis of the row space: the canonical terms are (R_k, C e_k).
std::vector<FinRankOperator::Term> canonical_terms(const std::vector<FinRankOperator::Term>& terms) {
  auto rows = support_union(terms, false);
  auto cols = support_union(terms, true);
  if (rows.empty() || cols.empty()) return {};
  auto pos = [](const std::vector<std::size_t>& idx, std::size_t i) {
    return static_cast<std::size_t>(std::lower_bound(idx.begin(), idx.end(), i) - idx.begin());
  };
  Matrix m(rows.size(), cols.size());
  for (const auto& t : terms)
    for (const auto& [i, a] : t.u.support())
      for (const auto& [j, b] : t.w.support()) m(pos(rows, i), pos(cols, j)) += a * b;
  EchelonForm e = rref(m);
  std::vector<FinRankOperator::Term> out;
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    FinRankOperator::Term t;
    for (std::size_t j = 0; j < cols.size(); ++j) t.w.set(cols[j], e.reduced(k, j));
    for (std::size_t i = 0; i < rows.size(); ++i) t.u.set(rows[i], m(i, e.pivots[k]));
    out.push_back(std::move(t));
  }
  return out;
}

void require_same(const FinRankOperator& a, const FinRankOperator& b) {
  if (!(a.spec() == b.spec())) throw std::invalid_argument("operators over different pairings");
}

void require_self_dual(const DualPairSpec& spec) {
  if (!spec.self_dual()) throw std::invalid_argument("operation needs a self-dual pairing");
}

std::vector<FinRankOperator::Term> joined(const FinRankOperator& a, const FinRankOperator& b, const Scalar& sb) {
  auto terms = a.terms();
  for (const auto& t : b.terms()) terms.push_back({t.w, sb * t.u});
  return terms;
}

}  // namespace

FinRankOperator::FinRankOperator(DualPairSpec spec, std::vector<Term> terms)
    : spec_(spec), terms_(canonical_terms(terms)) {}

FinRankOperator FinRankOperator::rank_one(DualPairSpec spec, const FinVector& w, const FinVector& u) {
  return FinRankOperator(spec, {{w, u}});
}

std::size_t FinRankOperator::bound() const {
  std::size_t b = 0;
  for (const auto& t : terms_) b = std::max({b, t.w.bound(), t.u.bound()});
  return b;
}

FinRankOperator operator+(const FinRankOperator& a, const FinRankOperator& b) {
  require_same(a, b);
  return FinRankOperator(a.spec(), joined(a, b, 1));
}

FinRankOperator operator-(const FinRankOperator& a, const FinRankOperator& b) {
  require_same(a, b);
  return FinRankOperator(a.spec(), joined(a, b, -1));
}

FinRankOperator operator*(const Scalar& s, const FinRankOperator& a) {
  std::vector<FinRankOperator::Term> terms;
  for (const auto& t : a.terms()) terms.push_back({t.w, s * t.u});
  return FinRankOperator(a.spec(), std::move(terms));
}

FinVector apply(const FinRankOperator& a, const FinVector& x) {
  FinVector out;
  for (const auto& t : a.terms()) out.axpy(a.spec().pair(x, t.w), t.u);
  return out;
}

FinRankOperator compose(const FinRankOperator& a, const FinRankOperator& b) {
  require_same(a, b);
  // (w2* u2)(w1* u1) = g(u1, w2) w1* u2
  std::vector<FinRankOperator::Term> terms;
  for (const auto& t1 : b.terms())
    for (const auto& t2 : a.terms()) {
      Scalar c = a.spec().pair(t1.u, t2.w);
      if (!is_zero(c)) terms.push_back({t1.w, c * t2.u});
    }
  return FinRankOperator(a.spec(), std::move(terms));
}

FinRankOperator lie_bracket(const FinRankOperator& a, const FinRankOperator& b) {
  return compose(a, b) - compose(b, a);
}

FinRankOperator adjoint(const FinRankOperator& a) {
  require_self_dual(a.spec());
  const Scalar eps = a.spec().epsilon();
  std::vector<FinRankOperator::Term> terms;
  for (const auto& t : a.terms()) terms.push_back({t.u, eps * t.w});
  return FinRankOperator(a.spec(), std::move(terms));
}

FinRankOperator bracket_vectors(const DualPairSpec& spec, const FinVector& x, const FinVector& y) {
  require_self_dual(spec);
  const Scalar eps = spec.epsilon();
  return FinRankOperator(spec, {{x, y}, {y, -eps * x}});
}

std::size_t truncation_size(const DualPairSpec& spec, std::size_t bound) {
  std::size_t n = std::max<std::size_t>(bound, 2);
  if (spec.self_dual() && n % 2 == 1) ++n;
  return n;
}

Matrix truncate(const FinRankOperator& a, std::size_t n) {
  if (a.bound() > n) throw std::invalid_argument("operator support exceeds the truncation");
  if (a.spec().self_dual() && n % 2 == 1) throw std::invalid_argument("self-dual truncation needs even size");
  // column j is a(e_j) = sum_k g(e_j, w_k) u_k
  Matrix m(n, n);
  for (const auto& t : a.terms())
    for (std::size_t j = 0; j < n; ++j) {
      Scalar c = a.spec().pair(FinVector::basis(j), t.w);
      if (is_zero(c)) continue;
      for (const auto& [i, x] : t.u.support()) m(i, j) += c * x;
    }
  return m;
}

InvolutiveAlgebra truncation_algebra(const DualPairSpec& spec, std::size_t n) {
  switch (spec.kind) {
    case PairingKind::Standard: return InvolutiveAlgebra::full(n);
    case PairingKind::SymmetricHyperbolic: return InvolutiveAlgebra::orthogonal(n, spec.gram(n));
    case PairingKind::SkewStandard: return InvolutiveAlgebra::symplectic(n, spec.gram(n));
  }
  throw std::invalid_argument("unknown pairing");
}

std::vector<FinRankOperator> build_WstarU(const std::vector<FinVector>& u, const std::vector<FinVector>& w) {
  const DualPairSpec spec{};
  for (const auto& x : u)
    for (const auto& y : w)
      if (!is_zero(spec.pair(x, y))) throw PreconditionError("U and W must be orthogonal");
  std::vector<FinRankOperator> out;
  for (const auto& y : w)
    for (const auto& x : u) {
      auto op = FinRankOperator::rank_one(spec, y, x);
      if (!op.is_zero()) out.push_back(std::move(op));
    }
  return out;
}

std::vector<FinRankOperator> build_UU(const DualPairSpec& spec, const std::vector<FinVector>& u) {
  require_self_dual(spec);
  for (const auto& x : u)
    for (const auto& y : u)
      if (!is_zero(spec.pair(x, y))) throw PreconditionError("U must be totally isotropic");
  std::vector<FinRankOperator> out;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i; j < u.size(); ++j) {
      auto op = bracket_vectors(spec, u[i], u[j]);
      if (!op.is_zero()) out.push_back(std::move(op));
    }
  return out;
}

FinRankOperator minimal_fsp_ideal(const DualPairSpec& spec, const FinVector& v) {
  if (spec.kind != PairingKind::SkewStandard) throw std::invalid_argument("minimal fsp ideal needs the skew pairing");
  if (v.is_zero()) throw PreconditionError("v must be nonzero");
  return FinRankOperator::rank_one(spec, v, v);
}

FinRankOperator minimal_fso_ideal(const DualPairSpec& spec, const FinVector& x, const FinVector& y) {
  if (spec.kind != PairingKind::SymmetricHyperbolic)
    throw std::invalid_argument("minimal fso ideal needs the symmetric pairing");
  if (!is_zero(spec.pair(x, x)) || !is_zero(spec.pair(y, y)) || !is_zero(spec.pair(x, y)))
    throw PreconditionError("x and y must span a totally isotropic subspace");
  auto op = bracket_vectors(spec, x, y);
  if (op.is_zero()) throw PreconditionError("x and y must be linearly independent");
  return op;
}

Subspace operator_span(const std::vector<FinRankOperator>& ops, std::size_t n) {
  std::vector<Vector> vs;
  for (const auto& op : ops) vs.push_back(truncate(op, n).entries());
  return canonicalize(vs, n * n);
}

namespace {

FinVector random_vector(Rng& rng, std::size_t n) {
  FinVector v;
  for (std::size_t i = 0; i < n; ++i)
    if (rng.integer(0, 2) == 0) v.set(i, rng.integer(-2, 2));
  return v;
}

FinRankOperator random_combination(Rng& rng, const DualPairSpec& spec, const std::vector<FinRankOperator>& gens) {
  FinRankOperator out(spec);
  for (const auto& g : gens) out = out + Scalar(rng.integer(-2, 2)) * g;
  return out;
}

// A random element of fsl (trace zero) or of the skew elements.
FinRankOperator random_finitary(Rng& rng, const DualPairSpec& spec, std::size_t n) {
  FinRankOperator out(spec);
  for (int k = 0; k < 3; ++k) {
    FinVector a = random_vector(rng, n), b = random_vector(rng, n);
    if (spec.self_dual()) {
      out = out + bracket_vectors(spec, a, b);
    } else {
      const std::size_t t = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(n) - 1));
      out = out + FinRankOperator::rank_one(spec, a, b) -
            spec.pair(b, a) * FinRankOperator::rank_one(spec, FinVector::basis(t), FinVector::basis(t));
    }
  }
  return out;
}

LieAlgebra truncated_lie(const DualPairSpec& spec, std::size_t n) {
  switch (spec.kind) {
    case PairingKind::Standard: return construct_sl(n);
    case PairingKind::SymmetricHyperbolic: return construct_so(n, spec.gram(n));
    case PairingKind::SkewStandard: return construct_sp(n, spec.gram(n));
  }
  throw std::invalid_argument("unknown pairing");
}

}  // namespace

FinitaryInnerReport check_finitary_inner(Rng& rng, const std::vector<FinRankOperator>& generators,
                                         std::size_t samples) {
  FinitaryInnerReport report;
  if (generators.empty()) {
    report.square_zero = report.truncated_inner = report.passed = true;
    return report;
  }
  const DualPairSpec spec = generators.front().spec();
  std::size_t bound = 0;
  for (const auto& g : generators) {
    require_same(g, generators.front());
    bound = std::max(bound, g.bound());
  }
  const std::size_t n = truncation_size(spec, bound + 2);
  report.truncation = n;
  const Subspace span = operator_span(generators, n);

  report.square_zero = true;
  for (const auto& a : generators)
    for (const auto& b : generators)
      if (!compose(a, b).is_zero()) report.square_zero = false;

  for (std::size_t s = 0; s < samples; ++s) {
    auto i = random_combination(rng, spec, generators);
    auto j = random_combination(rng, spec, generators);
    auto x = random_finitary(rng, spec, n);
    auto y = lie_bracket(i, lie_bracket(j, x));
    ++report.samples;
    if (!span.contains(truncate(y, n).entries())) {
      ++report.sample_failures;
      if (!report.counterexample)
        report.counterexample = Counterexample{
            "[i, [j, x]] lies in the span of the generators",
            {truncate(i, n).entries(), truncate(j, n).entries(), truncate(x, n).entries()}};
    }
  }

  LieAlgebra lie = truncated_lie(spec, n);
  report.truncated_inner = lie.contains(span) && is_inner_ideal(span, lie);
  report.passed = report.square_zero && report.sample_failures == 0 && report.truncated_inner;
  return report;
}

FinitaryInnerReport check_fsl_inner(Rng& rng, const std::vector<FinVector>& u, const std::vector<FinVector>& w,
                                    std::size_t samples) {
  return check_finitary_inner(rng, build_WstarU(u, w), samples);
}

}  // namespace lieinner
