#include "lieinner/suite/reports.hpp"

#include <memory>
#include <stdexcept>

namespace lieinner {

Json to_json(const Counterexample& c) {
  Json w = Json::array();
  for (const auto& v : c.witnesses) w.push_back(vector_to_json(v));
  return {{"claim", c.claim}, {"witnesses", w}};
}

Json to_json(const Weight& w) { return {{"type", to_string(w.type)}, {"coords", w.coords}}; }

Json to_json(const CompositionFactorReport& r) {
  Json fs = Json::array();
  for (const auto& f : r.factors)
    fs.push_back({{"highest_weight", f.highest.coords},
                  {"dim", f.dim},
                  {"multiplicity", f.multiplicity},
                  {"tag", to_string(f.tag)},
                  {"delta", scalar_to_json(delta_of_module(f.highest))}});
  return {{"module_dim", r.module_dim},
          {"factors", fs},
          {"dims_consistent", r.dims_consistent},
          {"characters_consistent", r.characters_consistent},
          {"delta_supremacy", r.delta_supremacy}};
}

Json to_json(const FinVector& v) {
  Json out = Json::object();
  for (const auto& [i, x] : v.support()) out[std::to_string(i)] = scalar_to_json(x);
  return out;
}

Json to_json(const FinRankOperator& a) {
  Json terms = Json::array();
  for (const auto& t : a.terms()) terms.push_back({{"w", to_json(t.w)}, {"u", to_json(t.u)}});
  return {{"pairing", to_string(a.spec().kind)}, {"rank", a.rank()}, {"terms", terms}};
}

Json to_json(const FinitaryInnerReport& r) {
  Json j = {{"samples", r.samples},
            {"sample_failures", r.sample_failures},
            {"truncation", r.truncation},
            {"square_zero", r.square_zero},
            {"truncated_inner", r.truncated_inner},
            {"passed", r.passed}};
  if (r.counterexample) j["counterexample"] = to_json(*r.counterexample);
  return j;
}

Json to_json(const ChainReport& r) {
  Json fs = Json::array();
  for (const auto& f : r.failures) fs.push_back({{"relation", f.relation}, {"from", f.from}, {"to", f.to}});
  return {{"relations_checked", r.relations_checked}, {"failures", fs}, {"passed", r.passed()}};
}

Json to_json(const LimitReport& r) {
  Json ls = Json::array();
  for (const auto& l : r.levels) {
    Json j = {{"level", l.level},
              {"size", l.size},
              {"dim", l.dim},
              {"regular", l.regular},
              {"coherent_with_next", l.coherent_with_next}};
    j["inner"] = l.inner ? Json(*l.inner) : Json(nullptr);
    ls.push_back(j);
  }
  Json j = {{"levels", ls}, {"passed", r.passed()}};
  if (r.counterexample) j["counterexample"] = to_json(*r.counterexample);
  return j;
}

Json analyze_embedding(const LieEmbedding& emb) {
  Json j;
  j["homomorphism"] = is_lie_homomorphism_on_generators(emb);
  j["maps_into_target"] = maps_into_target(emb);
  j["injective"] = is_injective(emb);
  if (!j["homomorphism"].get<bool>()) throw std::invalid_argument("map is not a Lie homomorphism");
  const RootType type = standard_form(emb.source()).type;
  Json modules = Json::array();
  bool diagonal = true, plain = true;
  Scalar delta = 0;
  for (std::size_t k = 0; k < natural_module_count(emb); ++k) {
    auto r = restrict_and_decompose(emb, k);
    diagonal = diagonal && report_is_diagonal(r);
    plain = plain && report_is_plain(r, type);
    for (const auto& f : r.factors) delta = std::max(delta, delta_of_module(f.highest));
    modules.push_back(to_json(r));
  }
  j["source_type"] = to_string(type);
  j["modules"] = modules;
  j["factors"] = modules.empty() ? Json::array() : modules[0]["factors"];
  j["diagonal"] = diagonal;
  j["plain"] = plain;
  j["delta"] = scalar_to_json(delta);
  return j;
}

std::shared_ptr<const LieAlgebra> lie_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("n")) throw std::invalid_argument("source needs kind and n");
  const std::string kind = j.at("kind").get<std::string>();
  const auto n = j.at("n").get<std::size_t>();
  if (kind == "sl") return std::make_shared<LieAlgebra>(construct_sl(n));
  if (kind == "so") return std::make_shared<LieAlgebra>(construct_so(n, split_orthogonal_gram(n)));
  if (kind == "sp") return std::make_shared<LieAlgebra>(construct_sp(n));
  throw std::invalid_argument("unknown algebra kind: " + kind);
}

namespace {

ClassicalKind classical_kind(const std::string& s) {
  if (s == "sl") return ClassicalKind::SL;
  if (s == "so") return ClassicalKind::SO;
  if (s == "sp") return ClassicalKind::SP;
  throw std::invalid_argument("unknown block kind: " + s);
}

EmbeddingTarget target_from_json(const Json& j) {
  const auto n = j.at("n").get<std::size_t>();
  if (!j.contains("blocks")) return EmbeddingTarget::sl(n);
  EmbeddingTarget t{n, {}};
  for (const auto& b : j.at("blocks")) {
    TargetBlock tb{classical_kind(b.at("kind").get<std::string>()), b.at("size").get<std::size_t>(),
                   b.at("offset").get<std::size_t>(), {}};
    if (tb.offset + tb.size > n) throw std::invalid_argument("target block overflows");
    if (tb.kind == ClassicalKind::SO)
      tb.gram = b.contains("gram") ? matrix_from_json(b.at("gram")) : split_orthogonal_gram(tb.size);
    if (tb.kind == ClassicalKind::SP)
      tb.gram = b.contains("gram") ? matrix_from_json(b.at("gram")) : standard_symplectic_gram(tb.size);
    t.blocks.push_back(std::move(tb));
  }
  return t;
}

}  // namespace

LieEmbedding embedding_from_json(const Json& j) {
  try {
    auto source = lie_from_json(j.at("source"));
    const Json& map = j.at("map");
    const std::string type = map.at("type").get<std::string>();
    if (type == "blocks") {
      std::vector<BlockAction> blocks;
      for (const auto& b : map.at("blocks")) {
        const std::string s = b.get<std::string>();
        if (s == "natural")
          blocks.push_back(BlockAction::Natural);
        else if (s == "dual")
          blocks.push_back(BlockAction::Dual);
        else if (s == "trivial")
          blocks.push_back(BlockAction::Trivial);
        else
          throw std::invalid_argument("unknown block action: " + s);
      }
      return block_embedding(source, blocks);
    }
    if (type == "adjoint") return adjoint_embedding(source);
    if (type == "exterior_square") return exterior_square_embedding(source);
    if (type == "images") {
      std::vector<Matrix> images;
      for (const auto& m : map.at("images")) images.push_back(matrix_from_json(m));
      return LieEmbedding(source, target_from_json(j.at("target")), std::move(images));
    }
    throw std::invalid_argument("unknown map type: " + type);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed embedding description: ") + e.what());
  }
}

}  // namespace lieinner
