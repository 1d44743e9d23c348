#include "lieinner/suite/suite.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>

#include "lieinner/assoc/ideals.hpp"
#include "lieinner/delta/delta.hpp"
#include "lieinner/embed/embedding.hpp"
#include "lieinner/exact/linalg.hpp"
#include "lieinner/finitary/finitary.hpp"
#include "lieinner/inner/inner_ideals.hpp"
#include "lieinner/inner/instances.hpp"
#include "lieinner/limits/tower.hpp"
#include "lieinner/suite/reports.hpp"

namespace lieinner {

namespace {

// Counts instances and keeps the first failure.
struct Tally {
  std::size_t instances = 0;
  std::size_t failures = 0;
  Json first_failure;
  Json first_instance;

  void record(bool ok, const std::function<Json()>& detail) {
    if (instances++ == 0) first_instance = detail();
    if (ok) return;
    if (failures++ == 0) first_failure = detail();
  }
  bool passed() const { return failures == 0; }
  Json json() const {
    Json j = {{"instances", instances}, {"failures", failures}};
    if (instances > 0) j["first_instance"] = first_instance;
    if (failures > 0) j["first_failure"] = first_failure;
    return j;
  }
};

Rng stream(const RunConfig& c, int id) { return Rng(c.seed * 1000003ULL + static_cast<std::uint64_t>(id)); }

Subspace line_of(const Matrix& m) { return canonicalize(std::vector<Vector>{m.entries()}, m.rows() * m.cols()); }

std::vector<std::size_t> sl_sizes(const RunConfig& c) {
  std::vector<std::size_t> ns;
  for (std::size_t n = 2; n <= std::min<std::size_t>(5, c.caps.max_n); ++n) ns.push_back(n);
  return ns;
}

struct SlInstance {
  std::size_t n;
  Matrix e, f;
};

// The random idempotent pairs behind the eAf criteria, shared so the
// nilpotency criterion sees exactly the same ideals.
std::vector<SlInstance> sl_instances(const RunConfig& c) {
  Rng rng = stream(c, 1);
  std::vector<SlInstance> out;
  for (std::size_t n : sl_sizes(c))
    for (std::size_t t = 0; t < c.samples.inner_pairs; ++t) {
      auto [e, f] = random_orthogonal_idempotents(rng, n);
      out.push_back({n, std::move(e), std::move(f)});
    }
  return out;
}

struct InvolutionAlgebraSpec {
  std::string name;
  ClassicalKind kind;
  std::size_t n;
};

std::vector<InvolutionAlgebraSpec> involution_algebras(const RunConfig& c) {
  std::vector<InvolutionAlgebraSpec> all = {{"sp4", ClassicalKind::SP, 4},
                                            {"sp6", ClassicalKind::SP, 6},
                                            {"so5", ClassicalKind::SO, 5},
                                            {"so6", ClassicalKind::SO, 6},
                                            {"so7", ClassicalKind::SO, 7}};
  std::vector<InvolutionAlgebraSpec> out;
  for (const auto& a : all)
    if (a.n <= c.caps.max_n) out.push_back(a);
  return out;
}

LieAlgebra involution_lie(const InvolutionAlgebraSpec& a) {
  return a.kind == ClassicalKind::SP ? construct_sp(a.n) : construct_so(a.n, split_orthogonal_gram(a.n));
}

struct IsotropicInstance {
  std::size_t algebra;
  IsotropicIdempotent iso;
};

std::vector<IsotropicInstance> isotropic_instances(const RunConfig& c, const std::vector<LieAlgebra>& lies) {
  Rng rng = stream(c, 2);
  std::vector<IsotropicInstance> out;
  for (std::size_t a = 0; a < lies.size(); ++a)
    for (std::size_t t = 0; t < c.samples.involution; ++t)
      out.push_back({a, random_isotropic_idempotent(rng, lies[a].algebra())});
  return out;
}

CriterionResult criterion_1(const RunConfig& c) {
  CriterionResult r{1, "eAf inner ideals in sl(n)",
                    "for idempotents with fe = 0, I = eAf is an inner ideal of sl(n) with I^2 = 0 and "
                    "[I,[I,L]] = I when nonzero",
                    0, false, {}};
  Tally inner, square, fundamental;
  std::map<std::string, std::size_t> per_n;
  std::map<std::size_t, LieAlgebra> lies;
  for (std::size_t n : sl_sizes(c)) lies.emplace(n, construct_sl(n));
  for (const auto& s : sl_instances(c)) {
    const auto& l = lies.at(s.n);
    Subspace i = construct_eAf(l, s.e, s.f);
    auto detail = [&] { return Json{{"n", s.n}, {"e", matrix_to_json(s.e)}, {"f", matrix_to_json(s.f)}}; };
    inner.record(is_inner_ideal(i, l), detail);
    square.record(square_space(l.algebra(), i).is_zero(), detail);
    if (!i.is_zero()) fundamental.record(check_fundamental(i, l), detail);
    ++per_n[std::to_string(s.n)];
  }
  r.instances = inner.instances;
  r.passed = inner.passed() && square.passed() && fundamental.passed() && r.instances > 0;
  r.certificate = {{"per_n", per_n},
                   {"inner", inner.json()},
                   {"square_zero", square.json()},
                   {"fundamental_nonzero", fundamental.json()}};
  return r;
}

CriterionResult criterion_2(const RunConfig& c) {
  CriterionResult r{2, "eLe* inner ideals for form involutions",
                    "for e idempotent with e*e = 0, eLe* is an inner ideal with I^2 = 0, equal to the span of "
                    "u*v + v*u (sp) or u*v - v*u (so) over the isotropic image U",
                    0, false, {}};
  auto specs = involution_algebras(c);
  std::vector<LieAlgebra> lies;
  for (const auto& a : specs) lies.push_back(involution_lie(a));
  Tally inner, square, span;
  Json per_alg = Json::object();
  for (const auto& inst : isotropic_instances(c, lies)) {
    const auto& l = lies[inst.algebra];
    const auto& alg = l.algebra();
    Subspace i = construct_eLestar(l, alg.element(inst.iso.e));
    auto detail = [&] { return Json{{"algebra", specs[inst.algebra].name}, {"e", matrix_to_json(inst.iso.e)}}; };
    inner.record(is_inner_ideal(i, l), detail);
    square.record(square_space(alg, i).is_zero(), detail);
    span.record(i == isotropic_bracket_span(alg, inst.iso.image), detail);
    const std::string& name = specs[inst.algebra].name;
    per_alg[name] = per_alg.value(name, 0) + 1;
  }
  r.instances = inner.instances;
  r.passed = inner.passed() && square.passed() && span.passed();
  r.certificate = {{"per_algebra", per_alg},
                   {"inner", inner.json()},
                   {"square_zero", square.json()},
                   {"isotropic_span", span.json()}};
  if (specs.empty()) r.certificate["note"] = "no algebra within the size cap";
  return r;
}

CriterionResult criterion_3(const RunConfig& c) {
  CriterionResult r{3, "classification round trip in sl(n)",
                    "every proper inner ideal of sl(n) is eAf: classify then reconstruct returns the same subspace",
                    0, false, {}};
  Rng rng = stream(c, 3);
  auto ns = sl_sizes(c);
  Tally trip;
  if (!ns.empty()) {
    const std::size_t per_n = (c.samples.roundtrip + ns.size() - 1) / ns.size();
    for (std::size_t n : ns) {
      auto l = construct_sl(n);
      for (std::size_t t = 0; t < per_n; ++t) {
        auto [e, f] = random_orthogonal_idempotents(rng, n);
        Subspace i = construct_eAf(l, e, f);
        auto k = classify_sl_inner(i, l);
        bool ok = k.verified && (k.f * k.e).is_zero() && construct_eAf(l, k.e, k.f) == i;
        trip.record(ok, [&] {
          Json j = {{"n", n}, {"e", matrix_to_json(e)}, {"f", matrix_to_json(f)}};
          if (k.counterexample) j["counterexample"] = to_json(*k.counterexample);
          return j;
        });
      }
    }
  }
  r.instances = trip.instances;
  r.passed = trip.passed() && r.instances > 0;
  r.certificate = {{"round_trip", trip.json()}};
  return r;
}

CriterionResult criterion_4(const RunConfig& c) {
  CriterionResult r{4, "regularity calculus",
                    "regular inner ideals satisfy RL in I in R n L n [A,A] with LR = 0 and conversely; the star "
                    "variant likewise; RL = R n L for one-sided ideals of M_n; M_4 is von Neumann regular",
                    0, false, {}};
  Rng rng = stream(c, 4);
  Tally forward, converse, star, rl, vn;
  for (std::size_t n : sl_sizes(c)) {
    auto l = construct_sl(n);
    const auto& alg = l.algebra();
    for (int t = 0; t < 10; ++t) {
      auto [e, f] = random_orthogonal_idempotents(rng, n);
      Subspace i = construct_eAf(l, e, f);
      auto detail = [&] { return Json{{"n", n}, {"e", matrix_to_json(e)}, {"f", matrix_to_json(f)}}; };
      auto d = regular_decompose(i, l);
      forward.record(is_regular(i, alg) && d.lr_zero && d.sandwich_holds, detail);
      auto left = ideal_generated(alg, alg.element(f), Side::Left);
      auto right = ideal_generated(alg, alg.element(e), Side::Right);
      Subspace between = product_space(alg, right.space, left.space);
      bool ok = !sandwich_condition(l, right, left, between) ||
                (is_inner_ideal(between, l) && is_regular(between, alg));
      converse.record(ok && sandwich_condition(l, right, left, between), detail);
    }
  }
  for (const auto& a : involution_algebras(c)) {
    if (a.kind != ClassicalKind::SP) continue;
    auto l = involution_lie(a);
    const auto& alg = l.algebra();
    for (int t = 0; t < 10; ++t) {
      auto iso = random_isotropic_idempotent(rng, alg);
      auto left = ideal_generated(alg, alg.star(alg.element(iso.e)), Side::Left);
      Subspace bottom = skew_part(alg, product_space(alg, star_image(alg, left.space), left.space));
      auto d = star_regular_decompose(bottom, l);
      bool ok = star_sandwich_condition(l, left, bottom) && is_inner_ideal(bottom, l) &&
                is_star_regular(bottom, alg) && d.ll_star_zero && d.sandwich_holds;
      star.record(ok, [&] { return Json{{"algebra", a.name}, {"e", matrix_to_json(iso.e)}}; });
    }
  }
  auto ns = sl_sizes(c);
  for (std::size_t t = 0; t < c.samples.regular_pairs && !ns.empty(); ++t) {
    const std::size_t n = ns[t % ns.size()];
    auto alg = InvolutiveAlgebra::full(n);
    auto gens = [&] {
      std::vector<Vector> vs;
      for (int k = 0; k < 2; ++k) {
        Vector v = zero_vector(alg.dim());
        for (int z = 0; z < 3; ++z) v[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(alg.dim()) - 1))] = rng.integer(-2, 2);
        vs.push_back(v);
      }
      return canonicalize(vs, alg.dim());
    };
    auto left = ideal_generated(alg, gens(), Side::Left).space;
    auto right = ideal_generated(alg, gens(), Side::Right).space;
    rl.record(product_space(alg, right, left) == subspace_intersect(right, left),
              [&] { return Json{{"n", n}, {"left", subspace_to_json(left)}, {"right", subspace_to_json(right)}}; });
  }
  if (c.caps.max_n >= 4) {
    auto alg = InvolutiveAlgebra::full(4);
    for (std::size_t t = 0; t < c.samples.von_neumann; ++t) {
      Matrix x = rng.matrix_of_rank(4, static_cast<std::size_t>(rng.integer(0, 4)));
      auto xe = alg.element(x);
      auto y = von_neumann_witness(alg, xe);
      vn.record(y && alg.mul(alg.mul(xe, *y), xe) == xe, [&] { return Json{{"x", matrix_to_json(x)}}; });
    }
  }
  r.instances = forward.instances + converse.instances + star.instances + rl.instances + vn.instances;
  r.passed = forward.passed() && converse.passed() && star.passed() && rl.passed() && vn.passed();
  r.certificate = {{"regular_to_sandwich", forward.json()},
                   {"sandwich_to_regular", converse.json()},
                   {"star_sandwich", star.json()},
                   {"rl_equals_intersection", rl.json()},
                   {"von_neumann_m4", vn.json()}};
  return r;
}

// The table written out the way it is usually displayed, independent of
// the library's formula.
std::vector<long> displayed_row(Family f, std::size_t m) {
  std::vector<long> row;
  switch (f) {
    case Family::A: {
      const std::size_t k = m / 2;
      for (std::size_t i = 1; i <= k; ++i) row.push_back(static_cast<long>(i));
      if (m % 2 == 1) row.push_back(static_cast<long>(k + 1));
      for (std::size_t i = k; i >= 1; --i) row.push_back(static_cast<long>(i));
      break;
    }
    case Family::B:
      for (std::size_t i = 1; i < m; ++i) row.push_back(static_cast<long>(i));
      row.push_back(static_cast<long>(m / 2));
      break;
    case Family::C:
      for (std::size_t i = 1; i <= m; ++i) row.push_back(static_cast<long>(i));
      break;
    case Family::D: {
      const std::size_t k = m / 2;
      if (m % 2 == 0) {
        for (std::size_t i = 1; i <= 2 * k - 2; ++i) row.push_back(static_cast<long>(i));
        row.push_back(static_cast<long>(k - 1));
        row.push_back(static_cast<long>(k));
      } else {
        for (std::size_t i = 1; i <= 2 * k - 1; ++i) row.push_back(static_cast<long>(i));
        row.push_back(static_cast<long>(k));
        row.push_back(static_cast<long>(k));
      }
      break;
    }
    case Family::E6: row = {2, 2, 3, 4, 3, 2}; break;
    case Family::E7: row = {2, 2, 3, 4, 3, 2, 1}; break;
    case Family::E8: row = {4, 5, 7, 10, 8, 6, 4, 2}; break;
    case Family::F4: row = {2, 3, 2, 1}; break;
    case Family::G2: row = {1, 2}; break;
  }
  return row;
}

CriterionResult criterion_5(const RunConfig& c) {
  (void)c;
  CriterionResult r{5, "delta table",
                    "the delta values on fundamental weights match the displayed rows, and delta is non-negative "
                    "on simple roots",
                    0, false, {}};
  std::vector<RootType> types;
  for (std::size_t m = 1; m <= 25; ++m) types.push_back(RootType::make(Family::A, m));
  for (std::size_t m = 3; m <= 25; ++m) types.push_back(RootType::make(Family::B, m));
  for (std::size_t m = 2; m <= 25; ++m) types.push_back(RootType::make(Family::C, m));
  for (std::size_t m = 4; m <= 25; ++m) types.push_back(RootType::make(Family::D, m));
  for (auto f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2})
    types.push_back(RootType::parse(to_string(f), 0));
  Tally rows, simple, first;
  Json exceptional = Json::object();
  for (const auto& t : types) {
    auto table = delta_table(t);
    auto expected = displayed_row(t.family, t.rank);
    std::vector<Scalar> want(expected.begin(), expected.end());
    rows.record(table.values == want, [&] { return Json{{"type", to_string(t)}, {"expected", expected}}; });
    auto roots = delta_of_simple_roots(t);
    simple.record(std::all_of(roots.begin(), roots.end(), [](const Scalar& x) { return sgn(x) >= 0; }),
                  [&] { return Json{{"type", to_string(t)}}; });
    first.record(delta_of_module(Weight::fundamental(t, 0)) == want[0], [&] { return Json{{"type", to_string(t)}}; });
    if (!t.is_classical()) {
      Json vs = Json::array();
      for (const auto& v : table.values) vs.push_back(scalar_to_json(v));
      exceptional[to_string(t)] = vs;
    }
  }
  r.instances = rows.instances;
  r.passed = rows.passed() && simple.passed() && first.passed();
  r.certificate = {{"rows", rows.json()},
                   {"simple_roots_non_negative", simple.json()},
                   {"first_entry", first.json()},
                   {"exceptional_rows", exceptional}};
  return r;
}

CriterionResult criterion_6(const RunConfig& c) {
  CriterionResult r{6, "embedding classifier",
                    "restricted natural modules decompose with exact dimension bookkeeping; doubling is diagonal and "
                    "plain, dual doubling diagonal and not plain, the adjoint embedding non-diagonal with delta 2",
                    0, false, {}};
  struct Case {
    std::string name;
    std::function<LieEmbedding()> make;
    std::optional<bool> diagonal, plain;
    std::optional<Scalar> delta;
  };
  auto sl = [](std::size_t n) { return std::make_shared<const LieAlgebra>(construct_sl(n)); };
  std::vector<Case> cases;
  const std::size_t cap = c.caps.max_n;
  const std::size_t small = cap >= 3 ? 3 : 2;
  cases.push_back({"doubling sl(" + std::to_string(small) + ")",
                   [&] { return block_embedding(sl(small), {BlockAction::Natural, BlockAction::Natural}); }, true, true,
                   Scalar(1)});
  if (cap >= 3) {
    cases.push_back({"dual doubling sl(3)",
                     [&] { return block_embedding(sl(3), {BlockAction::Natural, BlockAction::Dual}); }, true, false,
                     Scalar(1)});
    cases.push_back({"identity sl(3)", [&] { return block_embedding(sl(3), {BlockAction::Natural}); }, true, true,
                     Scalar(1)});
  }
  if (cap >= 4)
    cases.push_back({"adjoint sl(4)", [&] { return adjoint_embedding(sl(4)); }, false, std::nullopt, Scalar(2)});
  if (c.caps.rank11) {
    cases.push_back({"doubling sl(12)",
                     [&] { return block_embedding(sl(12), {BlockAction::Natural, BlockAction::Natural}); }, true, true,
                     Scalar(1)});
    cases.push_back({"sl(12) in sl(13) then exterior square of sl(13)",
                     [&] {
                       return compose(block_embedding(sl(12), {BlockAction::Natural, BlockAction::Trivial}),
                                      exterior_square_embedding(sl(13)));
                     },
                     false, std::nullopt, Scalar(2)});
  }
  if (c.large)
    cases.push_back({"adjoint sl(12)", [&] { return adjoint_embedding(sl(12)); }, false, std::nullopt, Scalar(2)});

  Json items = Json::array();
  bool all = true;
  for (const auto& cs : cases) {
    Json item = {{"embedding", cs.name}};
    try {
      auto emb = cs.make();
      Json a = analyze_embedding(emb);
      bool ok = a["homomorphism"].get<bool>() && a["injective"].get<bool>() && a["maps_into_target"].get<bool>();
      for (const auto& m : a["modules"])
        ok = ok && m["dims_consistent"].get<bool>() && m["characters_consistent"].get<bool>() &&
             m["delta_supremacy"].get<bool>();
      if (cs.diagonal) ok = ok && a["diagonal"].get<bool>() == *cs.diagonal;
      if (cs.plain) ok = ok && a["plain"].get<bool>() == *cs.plain;
      if (cs.delta) ok = ok && scalar_from_json(a["delta"]) == *cs.delta;
      // Diagonal exactly when delta <= 1.
      ok = ok && a["diagonal"].get<bool>() == (scalar_from_json(a["delta"]) <= 1);
      a.erase("modules");
      item["analysis"] = a;
      item["passed"] = ok;
      all = all && ok;
    } catch (const std::exception& e) {
      item["error"] = e.what();
      item["passed"] = false;
      all = false;
    }
    items.push_back(item);
    ++r.instances;
  }
  r.passed = all && r.instances > 0;
  r.certificate = {{"embeddings", items}};
  return r;
}

CriterionResult criterion_7(const RunConfig& c) {
  CriterionResult r{7, "nilpotency on the natural module",
                    "every constructed proper inner ideal satisfies I^3 V = 0; the so(n) ideal spanned by "
                    "e_1j - e_j2 has I^2 spanned by one matrix unit and I^3 = 0",
                    0, false, {}};
  Tally sl_side, form_side, plane;
  std::map<std::size_t, LieAlgebra> lies;
  for (std::size_t n : sl_sizes(c)) lies.emplace(n, construct_sl(n));
  for (const auto& s : sl_instances(c)) {
    const auto& l = lies.at(s.n);
    Subspace i = construct_eAf(l, s.e, s.f);
    if (i == l.space()) continue;
    sl_side.record(check_I3V(i, l), [&] { return Json{{"n", s.n}, {"e", matrix_to_json(s.e)}}; });
  }
  auto specs = involution_algebras(c);
  std::vector<LieAlgebra> forms;
  for (const auto& a : specs) forms.push_back(involution_lie(a));
  for (const auto& inst : isotropic_instances(c, forms)) {
    const auto& l = forms[inst.algebra];
    Subspace i = construct_eLestar(l, l.algebra().element(inst.iso.e));
    form_side.record(check_I3V(i, l), [&] { return Json{{"algebra", specs[inst.algebra].name}}; });
  }
  for (std::size_t n = 4; n <= std::max<std::size_t>(c.caps.max_n, 4) && n <= 7; ++n) {
    if (n > c.caps.max_n) break;
    auto h = hyperbolic_plane_instance(n);
    const auto& alg = h.lie.algebra();
    Subspace sq = square_space(alg, h.ideal);
    bool ok = is_inner_ideal(h.ideal, h.lie) && sq == line_of(Matrix::unit(n, 0, 1)) &&
              product_space(alg, sq, h.ideal).is_zero() && check_I3V(h.ideal, h.lie);
    plane.record(ok, [&] { return Json{{"n", n}}; });
  }
  r.instances = sl_side.instances + form_side.instances + plane.instances;
  r.passed = sl_side.passed() && form_side.passed() && plane.passed();
  r.certificate = {{"sl_eAf", sl_side.json()}, {"form_eLestar", form_side.json()}, {"hyperbolic_plane", plane.json()}};
  return r;
}

FinVector random_fin(Rng& rng, std::size_t n) {
  FinVector v;
  for (std::size_t i = 0; i < n; ++i)
    if (rng.coin()) v.set(i, rng.integer(-3, 3));
  return v;
}

CriterionResult criterion_8(const RunConfig& c) {
  CriterionResult r{8, "finitary model",
                    "composition of finite-rank operators matches truncated matrix multiplication; W*U with "
                    "g(U,W) = 0 and [U,U] for isotropic U are inner; F v*v and F[x,y] are one-dimensional inner ideals",
                    0, false, {}};
  Rng rng = stream(c, 8);
  const DualPairSpec specs[] = {{PairingKind::Standard}, {PairingKind::SymmetricHyperbolic}, {PairingKind::SkewStandard}};
  Tally compose_rule, grids, uu, minimal;
  for (const auto& spec : specs)
    for (std::size_t t = 0; t < c.samples.finitary_pairs; ++t) {
      auto make = [&] {
        std::vector<FinRankOperator::Term> terms;
        const auto k = rng.integer(1, 3);
        for (std::int64_t i = 0; i < k; ++i) terms.push_back({random_fin(rng, 6), random_fin(rng, 6)});
        return FinRankOperator(spec, terms);
      };
      auto a = make(), b = make();
      compose_rule.record(truncate(compose(a, b), 6) == truncate(a, 6) * truncate(b, 6),
                          [&] { return Json{{"a", to_json(a)}, {"b", to_json(b)}}; });
    }
  const std::size_t grid_cap = std::min<std::size_t>(3, std::max<std::size_t>(c.caps.max_n / 2, 1));
  Json grid_reports = Json::array();
  for (std::size_t a = 1; a <= grid_cap; ++a)
    for (std::size_t b = 1; b <= grid_cap; ++b) {
      const std::size_t n = a + b + 2;
      std::vector<FinVector> w;
      std::vector<Vector> wd;
      for (std::size_t k = 0; k < b; ++k) {
        w.push_back(random_fin(rng, n));
        wd.push_back(w.back().dense(n));
      }
      Matrix wm = from_columns(wd, n).transpose();
      Subspace orth = kernel(wm);
      std::vector<FinVector> u;
      std::vector<Vector> ud;
      for (std::size_t k = 0; k < a; ++k) {
        Vector v = zero_vector(n);
        for (const auto& bv : orth.basis()) axpy(v, Scalar(rng.integer(-2, 2)), bv);
        u.push_back(FinVector::from_dense(v));
        ud.push_back(v);
      }
      auto rep = check_fsl_inner(rng, u, w, c.samples.finitary_samples);
      const std::size_t expected = rank(from_columns(ud, n)) * rank(wm);
      const std::size_t dim = operator_span(build_WstarU(u, w), rep.truncation).dim();
      grids.record(rep.passed && dim == expected, [&] { return Json{{"grid", {a, b}}, {"report", to_json(rep)}}; });
      grid_reports.push_back({{"grid", {a, b}}, {"dim", dim}, {"passed", rep.passed}});
    }
  for (PairingKind kind : {PairingKind::SymmetricHyperbolic, PairingKind::SkewStandard}) {
    DualPairSpec spec{kind};
    for (std::size_t k = 2; k <= 3; ++k) {
      // Vectors on even coordinates are totally isotropic for both forms.
      std::vector<FinVector> us;
      for (std::size_t i = 0; i < k; ++i) {
        FinVector v;
        for (std::size_t j = 0; j < 4; ++j) v.set(2 * j, rng.integer(-2, 2));
        us.push_back(v);
      }
      auto rep = check_finitary_inner(rng, build_UU(spec, us), c.samples.finitary_samples);
      uu.record(rep.passed, [&] { return Json{{"pairing", to_string(kind)}, {"report", to_json(rep)}}; });
    }
  }
  {
    DualPairSpec skew{PairingKind::SkewStandard};
    FinVector v = random_fin(rng, 6);
    if (v.is_zero()) v = FinVector::basis(0);
    auto m = minimal_fsp_ideal(skew, v);
    auto rep = check_finitary_inner(rng, {m}, c.samples.finitary_samples);
    bool ok = rep.passed && operator_span({m}, rep.truncation).dim() == 1 &&
              bracket_vectors(skew, v, v) == Scalar(2) * m;
    minimal.record(ok, [&] { return Json{{"skew", to_json(rep)}}; });

    DualPairSpec sym{PairingKind::SymmetricHyperbolic};
    FinVector x = FinVector::basis(0) + Scalar(2) * FinVector::basis(4);
    FinVector y = FinVector::basis(2) - FinVector::basis(6);
    auto mo = minimal_fso_ideal(sym, x, y);
    auto ro = check_finitary_inner(rng, {mo}, c.samples.finitary_samples);
    minimal.record(ro.passed && operator_span({mo}, ro.truncation).dim() == 1 &&
                       bracket_vectors(sym, x, x).is_zero(),
                   [&] { return Json{{"symmetric", to_json(ro)}}; });
  }
  r.instances = compose_rule.instances + grids.instances + uu.instances + minimal.instances;
  r.passed = compose_rule.passed() && grids.passed() && uu.passed() && minimal.passed();
  r.certificate = {{"composition_rule", compose_rule.json()},
                   {"WstarU_grids", grids.json()},
                   {"grid_dims", grid_reports},
                   {"UU", uu.json()},
                   {"minimal_ideals", minimal.json()}};
  return r;
}

CriterionResult criterion_9(const RunConfig& c) {
  CriterionResult r{9, "direct limits of idempotent chains",
                    "directed idempotent systems verify at every level pair, level ideals are regular and coherent, "
                    "and pushed ranks are constant for one copy and grow geometrically for two or more",
                    0, false, {}};
  const std::vector<TowerSignature> signatures = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 0, 0}};
  Json items = Json::array();
  bool all = true;
  const std::size_t depth = std::max<std::size_t>(c.caps.tower_depth, 1);
  for (auto kind : {TowerKind::Plain, TowerKind::Orthogonal})
    for (const auto& s : signatures) {
      Tower tower(kind, 2, s, depth);
      bool steps = true;
      for (std::size_t k = 0; k + 1 < tower.depth(); ++k)
        steps = steps && tower.is_step_homomorphism(k) && tower.is_step_star_compatible(k);
      auto chain = standard_chain(tower);
      auto vr = verify_chain(tower, chain);
      auto lr = limit_report(tower, chain, c.caps.tower_inner_cap);
      auto ranks = rank_growth(tower, Matrix::unit(2, 0, 0));
      const bool one_copy = s.copies() == 1;
      bool dichotomy = depth < 2 || (one_copy ? rank_constant(ranks) : rank_growing(ranks));
      std::size_t expected = 1;
      for (std::size_t k = 0; k < ranks.size(); ++k, expected *= s.copies()) dichotomy = dichotomy && ranks[k] == expected;
      bool ok = steps && vr.passed() && lr.passed() && dichotomy;
      all = all && ok;
      items.push_back({{"kind", to_string(kind)},
                       {"signature", to_string(s)},
                       {"steps_homomorphic", steps},
                       {"chain", to_json(vr)},
                       {"levels", to_json(lr)},
                       {"ranks", ranks},
                       {"rank_behaviour", one_copy ? "constant" : "growing"},
                       {"passed", ok}});
      ++r.instances;
    }
  r.passed = all;
  r.certificate = {{"towers", items}, {"depth", depth}};
  return r;
}

CriterionResult criterion_10(const RunConfig& c) {
  CriterionResult r{10, "sandwich dimension",
                    "dim x M_n x = (rank x)^2, so a rank k element has a sandwich of dimension at most k^2", 0, false,
                    {}};
  Rng rng = stream(c, 10);
  Tally t;
  const std::size_t hi = std::min<std::size_t>(6, std::max<std::size_t>(c.caps.max_n, 2));
  std::map<std::string, std::size_t> per_n;
  for (std::size_t s = 0; s < c.samples.sandwich; ++s) {
    const auto n = static_cast<std::size_t>(rng.integer(2, static_cast<std::int64_t>(hi)));
    const auto k = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(n)));
    Matrix x = rng.matrix_of_rank(n, k);
    auto alg = InvolutiveAlgebra::full(n);
    const std::size_t rk = rank(x);
    t.record(sandwich_dimension(alg, alg.element(x)) == rk * rk,
             [&] { return Json{{"n", n}, {"x", matrix_to_json(x)}}; });
    ++per_n[std::to_string(n)];
  }
  r.instances = t.instances;
  r.passed = t.passed() && r.instances > 0;
  r.certificate = {{"sandwich", t.json()}, {"per_n", per_n}};
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const RunConfig& config) {
  using Fn = CriterionResult (*)(const RunConfig&);
  static constexpr Fn kFns[] = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("unknown criterion id");
  try {
    return kFns[id - 1](config);
  } catch (const std::exception& e) {
    CriterionResult r;
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.passed = false;
    r.certificate = {{"error", e.what()}};
    return r;
  }
}

std::vector<CriterionResult> verify_suite(const RunConfig& config) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), id) == config.only.end()) continue;
    out.push_back(run_criterion(id, config));
  }
  return out;
}

Json to_json(const CriterionResult& r) {
  return {{"id", r.id},
          {"title", r.title},
          {"statement", r.statement},
          {"instances", r.instances},
          {"passed", r.passed},
          {"certificate", r.certificate}};
}

Json to_json(const RunConfig& c) {
  return {{"seed", c.seed},
          {"samples",
           {{"inner_pairs", c.samples.inner_pairs},
            {"involution", c.samples.involution},
            {"roundtrip", c.samples.roundtrip},
            {"regular_pairs", c.samples.regular_pairs},
            {"von_neumann", c.samples.von_neumann},
            {"finitary_pairs", c.samples.finitary_pairs},
            {"finitary_samples", c.samples.finitary_samples},
            {"sandwich", c.samples.sandwich}}},
          {"size_caps",
           {{"max_n", c.caps.max_n},
            {"tower_depth", c.caps.tower_depth},
            {"tower_inner_cap", c.caps.tower_inner_cap},
            {"rank11", c.caps.rank11}}},
          {"large", c.large},
          {"only", c.only}};
}

Json suite_report(const RunConfig& config, const std::vector<CriterionResult>& results) {
  Json items = Json::array();
  bool all = true;
  for (const auto& r : results) {
    items.push_back(to_json(r));
    all = all && r.passed;
  }
  return {{"schema_version", kSchemaVersion}, {"config", to_json(config)}, {"criteria", items}, {"passed", all}};
}

}  // namespace lieinner
