#pragma once

#include "lieinner/delta/delta.hpp"
#include "lieinner/embed/embedding.hpp"
#include "lieinner/exact/json_io.hpp"
#include "lieinner/finitary/finitary.hpp"
#include "lieinner/inner/inner_ideals.hpp"
#include "lieinner/limits/tower.hpp"

namespace lieinner {

Json to_json(const Counterexample& c);
Json to_json(const Weight& w);
Json to_json(const CompositionFactorReport& r);
Json to_json(const FinVector& v);
Json to_json(const FinRankOperator& a);
Json to_json(const FinitaryInnerReport& r);
Json to_json(const ChainReport& r);
Json to_json(const LimitReport& r);

// {factors, diagonal, plain, delta, homomorphism, injective, modules}
Json analyze_embedding(const LieEmbedding& emb);

// Source {"kind": "sl" | "so" | "sp", "n": N}; so uses the antidiagonal
// form and sp the standard one.
std::shared_ptr<const LieAlgebra> lie_from_json(const Json& j);

// {"source": ..., "map": {"type": "blocks", "blocks": ["natural", "dual",
// "trivial", ...]} | {"type": "adjoint"} | {"type": "exterior_square"} |
// {"type": "images", "images": [matrix, ...]}, "target": {"n": N} or
// {"n": N, "blocks": [{"kind", "size", "offset", "gram"?}]}}. The target is
// required only for explicit images. Throws std::invalid_argument.
LieEmbedding embedding_from_json(const Json& j);

}  // namespace lieinner
