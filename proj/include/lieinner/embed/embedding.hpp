#pragma once

#include <memory>
#include <vector>

#include "lieinner/delta/delta.hpp"
#include "lieinner/lie/lie_algebra.hpp"

namespace lieinner {

// Cartan elements (coroots), simple raising and lowering operators of a
// classical algebra in standard form: sl(n), so(n) with the antidiagonal
// form, sp(2m) with J = [[0, I], [-I, 0]].
struct StandardForm {
  RootType type;
  std::vector<Matrix> coroots;
  std::vector<Matrix> raising;
  std::vector<Matrix> lowering;
};

// Throws std::invalid_argument for algebras not in a supported standard
// form (sl(n >= 2), so(2m+1) with m >= 3, so(2m) with m >= 4, sp(2m) with
// m >= 2).
StandardForm standard_form(const LieAlgebra& source);

// One classical block of a block-diagonal target in M_n.
struct TargetBlock {
  ClassicalKind kind;
  std::size_t size;
  std::size_t offset;
  Matrix gram;  // empty for sl
};

// A semisimple target L' = Q_1 (+) ... (+) Q_k described by its blocks;
// membership is checked by formula so large targets are never expanded.
struct EmbeddingTarget {
  std::size_t n;
  std::vector<TargetBlock> blocks;

  static EmbeddingTarget sl(std::size_t n);
  bool contains(const Matrix& x) const;
};

// A linear map from the source's ambient M_n into the target's ambient
// M_N, stored as the images of the matrix units e_ij (row-major).
class LieEmbedding {
 public:
  LieEmbedding(std::shared_ptr<const LieAlgebra> source, EmbeddingTarget target, std::vector<Matrix> images);

  const LieAlgebra& source() const { return *source_; }
  std::shared_ptr<const LieAlgebra> source_handle() const { return source_; }
  const EmbeddingTarget& target() const { return target_; }
  const std::vector<Matrix>& images() const { return images_; }

  Matrix apply(const Matrix& x) const;

 private:
  std::shared_ptr<const LieAlgebra> source_;
  EmbeddingTarget target_;
  std::vector<Matrix> images_;
};

enum class BlockAction { Natural, Dual, Trivial };

// x -> diag(a_1(x), ..., a_k(x)) in sl(N) with a(x) = x, -x^T or the 1x1
// zero block.
LieEmbedding block_embedding(std::shared_ptr<const LieAlgebra> source, const std::vector<BlockAction>& blocks);
// x -> ad x on the canonical basis of the source, into sl(dim).
LieEmbedding adjoint_embedding(std::shared_ptr<const LieAlgebra> source);
// sl(n) acting on the exterior square, into sl(n(n-1)/2).
LieEmbedding exterior_square_embedding(std::shared_ptr<const LieAlgebra> source);
// first then second; second's source must be the first's target sl(N).
LieEmbedding compose(const LieEmbedding& first, const LieEmbedding& second);

// Bracket preservation on all basis pairs of the source, or (generators)
// on basis elements against the Chevalley generators, which suffices.
bool is_lie_homomorphism(const LieEmbedding& emb);
bool is_lie_homomorphism_on_generators(const LieEmbedding& emb);
bool is_injective(const LieEmbedding& emb);
bool maps_into_target(const LieEmbedding& emb);

enum class FactorTag { Trivial, Natural, Conatural, Other };
std::string to_string(FactorTag t);

struct CompositionFactor {
  Weight highest;
  std::size_t dim;
  std::size_t multiplicity;
  FactorTag tag;
};

struct CompositionFactorReport {
  std::size_t module_dim = 0;
  std::vector<CompositionFactor> factors;
  bool dims_consistent = false;
  bool characters_consistent = false;
  // delta of each factor equals the maximum of delta over its weights.
  bool delta_supremacy = false;
};

std::size_t natural_module_count(const LieEmbedding& emb);

// Composition factors of the k-th natural target module restricted to the
// source. Throws InternalError if the action does not decompose.
CompositionFactorReport restrict_and_decompose(const LieEmbedding& emb, std::size_t module = 0);

bool is_diagonal(const LieEmbedding& emb);
bool is_plain(const LieEmbedding& emb);

// max of delta over the factors of the k-th natural module, and over all.
Scalar delta_of_restriction(const LieEmbedding& emb, std::size_t module);
Scalar delta_of_restriction(const LieEmbedding& emb);

// Tags read from a report.
bool report_is_diagonal(const CompositionFactorReport& r);
bool report_is_plain(const CompositionFactorReport& r, const RootType& source);

}  // namespace lieinner
