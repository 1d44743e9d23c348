#include <doctest.h>

#include "lieinner/suite/reports.hpp"
#include "lieinner/suite/suite.hpp"

using namespace lieinner;

namespace {

RunConfig tiny(std::uint64_t seed) {
  RunConfig c;
  c.seed = seed;
  c.caps = SizeCaps::minimal();
  c.samples = {4, 3, 4, 4, 4, 10, 4, 8};
  return c;
}

std::vector<bool> verdicts(const std::vector<CriterionResult>& rs) {
  std::vector<bool> v;
  for (const auto& r : rs) v.push_back(r.passed);
  return v;
}

}  // namespace

TEST_CASE("minimal caps still run every criterion with n = 2") {
  auto c = tiny(7);
  auto rs = verify_suite(c);
  REQUIRE(rs.size() == static_cast<std::size_t>(kCriterionCount));
  for (const auto& r : rs) {
    INFO(r.id << " " << r.certificate.dump());
    CHECK(r.passed);
  }
  CHECK(rs[0].certificate["per_n"].size() == 1);
  CHECK(rs[0].certificate["per_n"].contains("2"));
}

TEST_CASE("fixed seed gives a byte identical report") {
  auto c = tiny(11);
  c.only = {1, 3, 8, 10};
  const std::string a = suite_report(c, verify_suite(c)).dump();
  const std::string b = suite_report(c, verify_suite(c)).dump();
  CHECK(a == b);
  auto j = Json::parse(a);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["criteria"].size() == 4);
}

TEST_CASE("seed change keeps verdicts and moves instances") {
  auto c1 = tiny(1);
  auto c2 = tiny(2);
  c1.only = c2.only = {8, 10};
  auto r1 = verify_suite(c1);
  auto r2 = verify_suite(c2);
  CHECK(verdicts(r1) == verdicts(r2));
  CHECK(to_json(r1[0]).dump() != to_json(r2[0]).dump());
}

TEST_CASE("only selects criteria and unknown ids are rejected") {
  auto c = tiny(3);
  c.only = {5};
  auto rs = verify_suite(c);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].id == 5);
  CHECK_THROWS_AS(run_criterion(0, c), std::invalid_argument);
  CHECK_THROWS_AS(run_criterion(11, c), std::invalid_argument);
}

TEST_CASE("embedding descriptions") {
  auto doubling = embedding_from_json(Json::parse(
      R"({"source": {"kind": "sl", "n": 3}, "map": {"type": "blocks", "blocks": ["natural", "natural"]}})"));
  auto a = analyze_embedding(doubling);
  CHECK(a["homomorphism"].get<bool>());
  CHECK(a["diagonal"].get<bool>());
  CHECK(a["plain"].get<bool>());
  CHECK(a["delta"] == scalar_to_json(Scalar(1)));
  CHECK(a["factors"].size() == 1);
  CHECK(a["factors"][0]["multiplicity"] == 2);

  auto dual = embedding_from_json(Json::parse(
      R"({"source": {"kind": "sl", "n": 3}, "map": {"type": "blocks", "blocks": ["natural", "dual", "trivial"]}})"));
  auto d = analyze_embedding(dual);
  CHECK(d["diagonal"].get<bool>());
  CHECK_FALSE(d["plain"].get<bool>());

  auto adj = analyze_embedding(embedding_from_json(
      Json::parse(R"({"source": {"kind": "sl", "n": 4}, "map": {"type": "adjoint"}})")));
  CHECK_FALSE(adj["diagonal"].get<bool>());
  CHECK(adj["delta"] == scalar_to_json(Scalar(2)));

  Json images = Json::array();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) images.push_back(matrix_to_json(Matrix::unit(2, i, j)));
  auto ident = embedding_from_json(
      {{"source", {{"kind", "sl"}, {"n", 2}}}, {"map", {{"type", "images"}, {"images", images}}}, {"target", {{"n", 2}}}});
  CHECK(analyze_embedding(ident)["plain"].get<bool>());

  Json transposed = Json::array();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) transposed.push_back(matrix_to_json(Matrix::unit(2, j, i)));
  auto bad = embedding_from_json({{"source", {{"kind", "sl"}, {"n", 2}}},
                                  {"map", {{"type", "images"}, {"images", transposed}}},
                                  {"target", {{"n", 2}}}});
  CHECK_THROWS_AS(analyze_embedding(bad), std::invalid_argument);
}

TEST_CASE("malformed embedding descriptions are invalid input") {
  CHECK_THROWS_AS(embedding_from_json(Json::parse(R"({"map": {"type": "adjoint"}})")), std::invalid_argument);
  CHECK_THROWS_AS(embedding_from_json(Json::parse(R"({"source": {"kind": "gl", "n": 3}, "map": {"type": "adjoint"}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      embedding_from_json(Json::parse(R"({"source": {"kind": "sl", "n": 3}, "map": {"type": "blocks", "blocks": ["x"]}})")),
      std::invalid_argument);
  CHECK_THROWS_AS(embedding_from_json(Json::parse(R"({"source": {"kind": "sl", "n": 3}, "map": {"type": "twist"}})")),
                  std::invalid_argument);
}

TEST_CASE("report serialization") {
  Tower t(TowerKind::Plain, 2, {1, 0, 1}, 3);
  auto chain = standard_chain(t);
  auto j = to_json(verify_chain(t, chain));
  CHECK(j["passed"].get<bool>());
  CHECK(j["failures"].empty());
  auto l = to_json(limit_report(t, chain, 16));
  CHECK(l["levels"].size() == 3);
  CHECK(l["levels"][0]["inner"].get<bool>());

  FinVector v = FinVector::basis(1) + Scalar(3) * FinVector::basis(4);
  auto fv = to_json(v);
  CHECK(fv.size() == 2);
  CHECK(scalar_from_json(fv["4"]) == 3);
  auto op = to_json(FinRankOperator::rank_one(DualPairSpec{PairingKind::Standard}, v, FinVector::basis(0)));
  CHECK(op["rank"] == 1);
  CHECK(op["pairing"] == to_string(PairingKind::Standard));
}
