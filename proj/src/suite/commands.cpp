#include "lieinner/suite/commands.hpp"

#include <sstream>
#include <stdexcept>

#include "lieinner/exact/linalg.hpp"

namespace lieinner {

std::vector<std::int64_t> parse_weight(const std::string& text) {
  std::vector<std::int64_t> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      coords.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("weight coordinates must be integers");
  }
  return coords;
}

CommandResult delta_command(const std::string& type, std::size_t rank, const std::vector<std::int64_t>& weight) {
  RootType t = RootType::parse(type, rank);
  Json values = Json::array();
  for (const auto& v : delta_table(t).values) values.push_back(scalar_to_json(v));
  Json simple = Json::array();
  for (const auto& v : delta_of_simple_roots(t)) simple.push_back(scalar_to_json(v));
  Json j = {{"type", to_string(t)}, {"fundamental", values}, {"simple_roots", simple}};
  if (!weight.empty()) {
    auto c = classify_module(Weight(t, weight));
    j["module"] = {{"highest_weight", weight},
                   {"delta", scalar_to_json(c.delta)},
                   {"class", to_string(c.kind)},
                   {"classification_valid", c.valid}};
  }
  return {j, true};
}

InnerIdealCandidate candidate_from_json(const Json& j) {
  try {
    auto lie = lie_from_json(j.at("algebra"));
    const std::size_t ambient = lie->algebra().dim();
    Subspace s(ambient);
    if (j.contains("subspace")) {
      s = subspace_from_json(j.at("subspace"));
    } else {
      std::vector<Vector> vs;
      for (const auto& m : j.at("elements")) {
        Matrix x = matrix_from_json(m);
        if (x.rows() * x.cols() != ambient) throw std::invalid_argument("element has the wrong size");
        vs.push_back(x.entries());
      }
      s = canonicalize(vs, ambient);
    }
    return make_candidate(lie, s);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed candidate: ") + e.what());
  }
}

CommandResult check_inner_command(const Json& input) {
  auto c = candidate_from_json(input);
  const auto& alg = c.lie->algebra();
  const bool inner = is_inner_ideal(c.space, *c.lie);
  Json j = {{"algebra", to_string(c.lie->kind())},
            {"dim", c.space.dim()},
            {"inner", inner},
            {"square_zero", square_space(alg, c.space).is_zero()},
            {"abelian", check_abelian(c.space, *c.lie)},
            {"regular", is_regular(c.space, alg)}};
  if (c.lie->kind() != LieKind::SL) j["star_regular"] = is_star_regular(c.space, alg);
  if (inner && !c.space.is_zero() && c.space != c.lie->space()) j["I3V_zero"] = check_I3V(c.space, *c.lie);
  return {j, inner};
}

CommandResult classify_sl_command(const Json& input) {
  auto c = candidate_from_json(input);
  if (c.lie->kind() != LieKind::SL) throw std::invalid_argument("classify-sl needs an sl algebra");
  auto k = classify_sl_inner(c.space, *c.lie);
  Json j = {{"verified", k.verified}};
  if (k.verified) {
    j["e"] = matrix_to_json(k.e);
    j["f"] = matrix_to_json(k.f);
  }
  if (k.counterexample) j["counterexample"] = to_json(*k.counterexample);
  return {j, k.verified};
}

CommandResult embed_analyze_command(const Json& input) {
  Json j = analyze_embedding(embedding_from_json(input));
  return {j, j["maps_into_target"].get<bool>()};
}

CommandResult finitary_demo_command(std::uint64_t seed, std::size_t samples) {
  Rng rng(seed);
  Json j;
  std::vector<FinVector> u = {FinVector::basis(0) + FinVector::basis(3), FinVector::basis(1)};
  std::vector<FinVector> w = {FinVector::basis(2), FinVector::basis(0) - FinVector::basis(3)};
  auto rep = check_fsl_inner(rng, u, w, samples);
  j["WstarU"] = {{"U", {to_json(u[0]), to_json(u[1])}},
                 {"W", {to_json(w[0]), to_json(w[1])}},
                 {"dim", operator_span(build_WstarU(u, w), rep.truncation).dim()},
                 {"report", to_json(rep)}};
  DualPairSpec skew{PairingKind::SkewStandard};
  auto m = minimal_fsp_ideal(skew, FinVector::basis(0) + FinVector::basis(2));
  auto rs = check_finitary_inner(rng, {m}, samples);
  j["minimal_skew"] = {{"generator", to_json(m)}, {"report", to_json(rs)}};
  DualPairSpec sym{PairingKind::SymmetricHyperbolic};
  auto mo = minimal_fso_ideal(sym, FinVector::basis(0), FinVector::basis(2));
  auto ro = check_finitary_inner(rng, {mo}, samples);
  j["minimal_symmetric"] = {{"generator", to_json(mo)}, {"report", to_json(ro)}};
  return {j, rep.passed && rs.passed && ro.passed};
}

CommandResult limit_demo_command(const std::string& signature, std::size_t depth, const std::string& kind,
                                 std::size_t inner_cap) {
  TowerKind k;
  if (kind == "plain")
    k = TowerKind::Plain;
  else if (kind == "orthogonal")
    k = TowerKind::Orthogonal;
  else
    throw std::invalid_argument("kind must be plain or orthogonal");
  Tower tower(k, 2, TowerSignature::parse(signature), depth);
  auto chain = standard_chain(tower);
  auto vr = verify_chain(tower, chain);
  auto lr = limit_report(tower, chain, inner_cap);
  auto ranks = rank_growth(tower, Matrix::unit(2, 0, 0));
  Json sizes = Json::array();
  for (std::size_t a = 0; a < tower.depth(); ++a) sizes.push_back(tower.size(a));
  Json j = {{"kind", to_string(k)},
            {"signature", to_string(tower.signature())},
            {"sizes", sizes},
            {"chain", to_json(vr)},
            {"levels", to_json(lr)},
            {"ranks", ranks},
            {"rank_constant", rank_constant(ranks)}};
  return {j, vr.passed() && lr.passed()};
}

RunConfig minimal_config(std::uint64_t seed) {
  RunConfig c;
  c.seed = seed;
  c.caps = SizeCaps::minimal();
  c.samples = {5, 5, 5, 5, 5, 20, 5, 10};
  return c;
}

CommandResult verify_suite_command(const RunConfig& config) {
  for (int id : config.only)
    if (id < 1 || id > kCriterionCount) throw std::invalid_argument("criterion ids run from 1 to 10");
  Json report = suite_report(config, verify_suite(config));
  const bool ok = report["passed"].get<bool>();
  return {std::move(report), ok};
}

}  // namespace lieinner
