#include <doctest.h>

#include <algorithm>
#include <map>
#include <memory>

#include "lieinner/assoc/ideals.hpp"
#include "lieinner/embed/embedding.hpp"
#include "support.hpp"

using namespace lieinner;
using namespace lieinner::testing;

namespace {

std::shared_ptr<const LieAlgebra> sl(std::size_t n) { return std::make_shared<LieAlgebra>(construct_sl(n)); }
std::shared_ptr<const LieAlgebra> so(std::size_t n) {
  return std::make_shared<LieAlgebra>(construct_so(n, split_orthogonal_gram(n)));
}
std::shared_ptr<const LieAlgebra> sp(std::size_t n) { return std::make_shared<LieAlgebra>(construct_sp(n)); }

std::map<FactorTag, std::size_t> tag_counts(const CompositionFactorReport& r) {
  std::map<FactorTag, std::size_t> out;
  for (const auto& f : r.factors) out[f.tag] += f.multiplicity;
  return out;
}

void check_report_sane(const CompositionFactorReport& r) {
  CHECK(r.dims_consistent);
  CHECK(r.characters_consistent);
  CHECK(r.delta_supremacy);
  std::size_t total = 0;
  for (const auto& f : r.factors) total += f.dim * f.multiplicity;
  CHECK(total == r.module_dim);
}

std::vector<std::int64_t> coords(const CompositionFactor& f) { return f.highest.coords; }

}  // namespace

TEST_CASE("standard forms are Chevalley bases") {
  std::vector<std::shared_ptr<const LieAlgebra>> sources = {sl(2), sl(3), sl(5), so(7), so(9), so(8), so(10), sp(4), sp(6)};
  for (const auto& s : sources) {
    auto sf = standard_form(*s);
    CAPTURE(to_string(sf.type));
    const std::size_t r = sf.type.rank;
    REQUIRE(sf.coroots.size() == r);
    Matrix c = cartan_matrix(sf.type);
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(commutator(sf.raising[i], sf.lowering[i]) == sf.coroots[i]);
      for (std::size_t j = 0; j < r; ++j) {
        // alpha_j(h_i) = <alpha_j, alpha_i^vee> = C_ji.
        CHECK(commutator(sf.coroots[i], sf.raising[j]) == c(j, i) * sf.raising[j]);
        CHECK(commutator(sf.coroots[i], sf.lowering[j]) == -(c(j, i) * sf.lowering[j]));
        if (i != j) CHECK(commutator(sf.raising[i], sf.lowering[j]).is_zero());
      }
    }
  }
}

TEST_CASE("unsupported sources") {
  CHECK_THROWS_AS(standard_form(*so(5)), std::invalid_argument);
  CHECK_THROWS_AS(standard_form(*so(6)), std::invalid_argument);
  CHECK_THROWS_AS(standard_form(construct_so(7)), std::invalid_argument);
  CHECK_THROWS_AS(standard_form(*sp(2)), std::invalid_argument);
  CHECK_THROWS_AS(standard_form(construct_su_star(InvolutiveAlgebra::doubled(3))), std::invalid_argument);
  CHECK_THROWS_AS(exterior_square_embedding(so(7)), std::invalid_argument);
}

TEST_CASE("target membership") {
  EmbeddingTarget t{6, {{ClassicalKind::SL, 2, 0, {}}, {ClassicalKind::SP, 4, 2, standard_symplectic_gram(4)}}};
  Matrix x(6, 6);
  x(0, 1) = 3;
  x(0, 0) = 1;
  x(1, 1) = -1;
  CHECK(t.contains(x));
  x(2, 2) = 1;
  CHECK_FALSE(t.contains(x));
  x(4, 4) = -1;
  CHECK(t.contains(x));
  x(0, 3) = 1;
  CHECK_FALSE(t.contains(x));
  CHECK_FALSE(t.contains(Matrix(5, 5)));
  CHECK_FALSE(EmbeddingTarget::sl(3).contains(Matrix::identity(3)));
}

TEST_CASE("identity, doubling and dual doubling") {
  auto s = sl(3);
  auto id = block_embedding(s, {BlockAction::Natural});
  auto r = restrict_and_decompose(id);
  check_report_sane(r);
  REQUIRE(r.factors.size() == 1);
  CHECK(coords(r.factors[0]) == std::vector<std::int64_t>{1, 0});
  CHECK(r.factors[0].tag == FactorTag::Natural);
  CHECK(delta_of_restriction(id) == 1);

  auto dbl = block_embedding(s, {BlockAction::Natural, BlockAction::Natural});
  CHECK(is_lie_homomorphism(dbl));
  CHECK(is_injective(dbl));
  CHECK(maps_into_target(dbl));
  CHECK(is_diagonal(dbl));
  CHECK(is_plain(dbl));
  CHECK(delta_of_restriction(dbl) == 1);
  auto rd = restrict_and_decompose(dbl);
  REQUIRE(rd.factors.size() == 1);
  CHECK(rd.factors[0].multiplicity == 2);

  auto dual = block_embedding(s, {BlockAction::Natural, BlockAction::Dual});
  CHECK(is_lie_homomorphism(dual));
  CHECK(is_diagonal(dual));
  CHECK_FALSE(is_plain(dual));
  auto counts = tag_counts(restrict_and_decompose(dual));
  CHECK(counts[FactorTag::Natural] == 1);
  CHECK(counts[FactorTag::Conatural] == 1);
  CHECK(delta_of_restriction(dual) == 1);
}

TEST_CASE("random block embeddings decompose as their blocks") {
  Rng rng(kSeed);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(3, 4));
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, 4));
    std::vector<BlockAction> blocks;
    std::map<FactorTag, std::size_t> expected;
    for (std::size_t i = 0; i < k; ++i) {
      auto a = static_cast<BlockAction>(rng.integer(0, 2));
      blocks.push_back(a);
      expected[a == BlockAction::Natural ? FactorTag::Natural : a == BlockAction::Dual ? FactorTag::Conatural
                                                                                       : FactorTag::Trivial] += 1;
    }
    auto emb = block_embedding(sl(n), blocks);
    CHECK(is_lie_homomorphism_on_generators(emb));
    auto r = restrict_and_decompose(emb);
    check_report_sane(r);
    CHECK(tag_counts(r) == expected);
    const bool has_nontrivial = expected[FactorTag::Natural] + expected[FactorTag::Conatural] > 0;
    CHECK(delta_of_restriction(emb) == (has_nontrivial ? 1 : 0));
    CHECK(is_injective(emb) == has_nontrivial);
  }
}

TEST_CASE("adjoint embedding is not diagonal") {
  auto emb = adjoint_embedding(sl(4));
  CHECK(emb.target().n == 15);
  CHECK(is_lie_homomorphism(emb));
  CHECK(is_lie_homomorphism_on_generators(emb));
  CHECK(is_injective(emb));
  CHECK(maps_into_target(emb));
  auto r = restrict_and_decompose(emb);
  check_report_sane(r);
  REQUIRE(r.factors.size() == 1);
  CHECK(coords(r.factors[0]) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(r.factors[0].dim == 15);
  CHECK(r.factors[0].tag == FactorTag::Other);
  CHECK_FALSE(is_diagonal(emb));
  CHECK(delta_of_restriction(emb) == 2);
}

TEST_CASE("orthogonal and symplectic sources") {
  for (auto s : {so(7), so(8), sp(4), sp(6)}) {
    auto sf = standard_form(*s);
    CAPTURE(to_string(sf.type));
    auto nat = block_embedding(s, {BlockAction::Natural, BlockAction::Dual});
    CHECK(is_lie_homomorphism_on_generators(nat));
    auto r = restrict_and_decompose(nat);
    check_report_sane(r);
    // The natural module is self-dual.
    CHECK(tag_counts(r)[FactorTag::Natural] == 2);
    CHECK(is_diagonal(nat));
    CHECK_FALSE(is_plain(nat));
    CHECK(delta_of_restriction(nat) == 1);
  }
  // Adjoint: omega_2 for B and D, 2 omega_1 for C.
  auto b3 = restrict_and_decompose(adjoint_embedding(so(7)));
  check_report_sane(b3);
  REQUIRE(b3.factors.size() == 1);
  CHECK(coords(b3.factors[0]) == std::vector<std::int64_t>{0, 1, 0});
  auto c2 = adjoint_embedding(sp(4));
  auto rc = restrict_and_decompose(c2);
  REQUIRE(rc.factors.size() == 1);
  CHECK(coords(rc.factors[0]) == std::vector<std::int64_t>{2, 0});
  CHECK(delta_of_restriction(c2) == 2);
}

TEST_CASE("exterior square") {
  auto emb = exterior_square_embedding(sl(5));
  CHECK(emb.target().n == 10);
  CHECK(is_lie_homomorphism(emb));
  auto r = restrict_and_decompose(emb);
  check_report_sane(r);
  REQUIRE(r.factors.size() == 1);
  CHECK(coords(r.factors[0]) == std::vector<std::int64_t>{0, 1, 0, 0});
  CHECK(delta_of_restriction(emb) == 2);
}

TEST_CASE("non-homomorphisms are rejected") {
  auto s = sl(3);
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) images.push_back(Matrix::unit(3, j, i));
  LieEmbedding transpose(s, EmbeddingTarget::sl(3), images);
  CHECK_FALSE(is_lie_homomorphism(transpose));
  CHECK_FALSE(is_lie_homomorphism_on_generators(transpose));
  CHECK(is_injective(transpose));

  Rng rng(kSeed);
  for (int trial = 0; trial < 10; ++trial) {
    auto good = block_embedding(s, {BlockAction::Natural, BlockAction::Dual});
    auto imgs = good.images();
    imgs[static_cast<std::size_t>(rng.integer(0, 8))](0, 4) += 1;
    LieEmbedding bad(s, good.target(), imgs);
    CHECK(is_lie_homomorphism(bad) == is_lie_homomorphism_on_generators(bad));
  }
  CHECK_THROWS_AS(LieEmbedding(s, EmbeddingTarget::sl(3), {}), std::invalid_argument);
}

TEST_CASE("rank 11 doubling") {
  auto emb = block_embedding(sl(12), {BlockAction::Natural, BlockAction::Natural});
  CHECK(is_lie_homomorphism_on_generators(emb));
  CHECK(maps_into_target(emb));
  auto r = restrict_and_decompose(emb);
  check_report_sane(r);
  CHECK(is_diagonal(emb));
  CHECK(is_plain(emb));
  CHECK(delta_of_restriction(emb) == 1);
}

TEST_CASE("rank 11 chain through a trivial block and the exterior square") {
  auto first = block_embedding(sl(12), {BlockAction::Natural, BlockAction::Trivial});
  auto chain = compose(first, exterior_square_embedding(sl(13)));
  CHECK(chain.target().n == 78);
  CHECK(is_lie_homomorphism_on_generators(chain));
  CHECK(is_injective(chain));
  auto r = restrict_and_decompose(chain);
  check_report_sane(r);
  std::vector<std::vector<std::int64_t>> hw;
  for (const auto& f : r.factors) hw.push_back(coords(f));
  std::sort(hw.begin(), hw.end());
  std::vector<std::int64_t> w1(11, 0), w2(11, 0);
  w1[0] = 1;
  w2[1] = 1;
  CHECK(hw == std::vector<std::vector<std::int64_t>>{w2, w1});
  CHECK_FALSE(report_is_diagonal(r));
  CHECK(delta_of_restriction(chain) == 2);
  CHECK_THROWS_AS(compose(exterior_square_embedding(sl(4)), first), std::invalid_argument);
}
