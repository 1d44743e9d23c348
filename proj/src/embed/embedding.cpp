#include "lieinner/embed/embedding.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "lieinner/assoc/ideals.hpp"
#include "lieinner/exact/linalg.hpp"

namespace lieinner {

namespace {

Matrix unit(std::size_t n, std::size_t i, std::size_t j) { return Matrix::unit(n, i, j); }

void require_in_source(const LieAlgebra& l, const std::vector<Matrix>& ms) {
  for (const auto& m : ms)
    if (!l.contains(m.entries())) throw InternalError("standard generator is not in the source algebra");
}

std::size_t pair_index(std::size_t a, std::size_t b, std::size_t n) {
  // Position of e_a ^ e_b (a < b) in lexicographic order.
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

long row_sum_bound(const Matrix& m) {
  Scalar best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += abs(m(i, j));
    best = std::max(best, s);
  }
  mpz_class c = best.get_num() / best.get_den();
  return c.get_si() + 1;
}

}  // namespace

StandardForm standard_form(const LieAlgebra& source) {
  const auto& alg = source.algebra();
  const std::size_t n = alg.n();
  StandardForm sf{RootType::make(Family::A, 1), {}, {}, {}};
  switch (source.kind()) {
    case LieKind::SL: {
      if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
      sf.type = RootType::make(Family::A, n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        sf.coroots.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
        sf.raising.push_back(unit(n, i, i + 1));
      }
      break;
    }
    case LieKind::SO: {
      if (alg.gram() != split_orthogonal_gram(n)) throw std::invalid_argument("so(n) must use the antidiagonal form");
      const std::size_t m = n / 2;
      if ((n % 2 == 1 && m < 3) || (n % 2 == 0 && m < 4))
        throw std::invalid_argument("so(n) source needs n >= 7");
      sf.type = RootType::make(n % 2 == 1 ? Family::B : Family::D, m);
      auto h = [&](std::size_t i) { return unit(n, i, i) - unit(n, n - 1 - i, n - 1 - i); };
      for (std::size_t i = 0; i + 1 < m; ++i) {
        sf.coroots.push_back(h(i) - h(i + 1));
        sf.raising.push_back(unit(n, i, i + 1) - unit(n, n - 2 - i, n - 1 - i));
      }
      if (n % 2 == 1) {
        sf.coroots.push_back(Scalar(2) * h(m - 1));
        sf.raising.push_back(unit(n, m - 1, m) - unit(n, m, m + 1));
      } else {
        sf.coroots.push_back(h(m - 2) + h(m - 1));
        sf.raising.push_back(unit(n, m - 2, m) - unit(n, m - 1, m + 1));
      }
      break;
    }
    case LieKind::SP: {
      if (alg.gram() != standard_symplectic_gram(n)) throw std::invalid_argument("sp(n) must use the standard form");
      const std::size_t m = n / 2;
      if (m < 2) throw std::invalid_argument("sp(n) source needs n >= 4");
      sf.type = RootType::make(Family::C, m);
      auto h = [&](std::size_t i) { return unit(n, i, i) - unit(n, m + i, m + i); };
      for (std::size_t i = 0; i + 1 < m; ++i) {
        sf.coroots.push_back(h(i) - h(i + 1));
        sf.raising.push_back(unit(n, i, i + 1) - unit(n, m + i + 1, m + i));
      }
      sf.coroots.push_back(h(m - 1));
      sf.raising.push_back(unit(n, m - 1, 2 * m - 1));
      break;
    }
    default: throw std::invalid_argument("source must be sl, so or sp in standard form");
  }
  for (const auto& e : sf.raising) sf.lowering.push_back(e.transpose());
  // Short simple root of B: [E, F] must be the coroot 2 H_m.
  if (sf.type.family == Family::B) sf.lowering.back() = Scalar(2) * sf.lowering.back();
  require_in_source(source, sf.coroots);
  require_in_source(source, sf.raising);
  require_in_source(source, sf.lowering);
  return sf;
}

EmbeddingTarget EmbeddingTarget::sl(std::size_t n) { return {n, {{ClassicalKind::SL, n, 0, {}}}}; }

bool EmbeddingTarget::contains(const Matrix& x) const {
  if (x.rows() != n || x.cols() != n) return false;
  std::vector<std::size_t> owner(n, blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t i = blocks[b].offset; i < blocks[b].offset + blocks[b].size; ++i) owner[i] = b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((owner[i] != owner[j] || owner[i] == blocks.size()) && !is_zero(x(i, j))) return false;
  for (const auto& b : blocks) {
    Matrix m = x.block(b.offset, b.offset, b.size, b.size);
    if (b.kind == ClassicalKind::SL) {
      if (m.trace() != 0) return false;
    } else if (!(m.transpose() * b.gram + b.gram * m).is_zero()) {
      return false;
    }
  }
  return true;
}

LieEmbedding::LieEmbedding(std::shared_ptr<const LieAlgebra> source, EmbeddingTarget target, std::vector<Matrix> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_) throw std::invalid_argument("embedding needs a source");
  if (source_->algebra().shape() != Shape::Full) throw std::invalid_argument("embedding source must be Full");
  const std::size_t n = source_->algebra().n();
  if (images_.size() != n * n) throw std::invalid_argument("embedding needs one image per matrix unit");
  for (const auto& m : images_)
    if (m.rows() != target_.n || m.cols() != target_.n) throw std::invalid_argument("image has the wrong size");
}

Matrix LieEmbedding::apply(const Matrix& x) const {
  const auto& e = x.entries();
  if (e.size() != images_.size()) throw std::invalid_argument("argument has the wrong size");
  Matrix out(target_.n, target_.n);
  for (std::size_t k = 0; k < e.size(); ++k)
    if (!is_zero(e[k])) out += e[k] * images_[k];
  return out;
}

LieEmbedding block_embedding(std::shared_ptr<const LieAlgebra> source, const std::vector<BlockAction>& blocks) {
  const std::size_t n = source->algebra().n();
  std::size_t total = 0;
  for (auto b : blocks) total += b == BlockAction::Trivial ? 1 : n;
  if (total == 0) throw std::invalid_argument("block embedding needs at least one block");
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m(total, total);
      std::size_t off = 0;
      for (auto b : blocks) {
        if (b == BlockAction::Natural) m(off + i, off + j) = 1;
        if (b == BlockAction::Dual) m(off + j, off + i) = -1;
        off += b == BlockAction::Trivial ? 1 : n;
      }
      images.push_back(std::move(m));
    }
  return LieEmbedding(std::move(source), EmbeddingTarget::sl(total), std::move(images));
}

LieEmbedding adjoint_embedding(std::shared_ptr<const LieAlgebra> source) {
  const auto& alg = source->algebra();
  const auto& space = source->space();
  const std::size_t d = space.dim(), nn = alg.dim();
  auto xs = elements_of(alg, space);
  std::vector<Matrix> images(nn, Matrix(d, d));
  for (std::size_t r = 0; r < d; ++r) {
    Matrix& ad = images[space.pivots()[r]];
    for (std::size_t j = 0; j < d; ++j) {
      auto c = space.coordinates(alg.flatten(alg.bracket(xs[r], xs[j])));
      if (!c) throw std::invalid_argument("adjoint embedding needs a bracket-closed source");
      for (std::size_t k = 0; k < d; ++k) ad(k, j) = (*c)[k];
    }
  }
  return LieEmbedding(std::move(source), EmbeddingTarget::sl(d), std::move(images));
}

LieEmbedding exterior_square_embedding(std::shared_ptr<const LieAlgebra> source) {
  if (source->kind() != LieKind::SL) throw std::invalid_argument("exterior square embedding needs sl(n)");
  const std::size_t n = source->algebra().n(), d = n * (n - 1) / 2;
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m(d, d);
      // e_ij (e_a ^ e_b) = [j == a] e_i ^ e_b + [j == b] e_a ^ e_i.
      auto put = [&](std::size_t p, std::size_t q, std::size_t col) {
        if (p == q) return;
        if (p < q)
          m(pair_index(p, q, n), col) += 1;
        else
          m(pair_index(q, p, n), col) -= 1;
      };
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
          const std::size_t col = pair_index(a, b, n);
          if (j == a) put(i, b, col);
          if (j == b) put(a, i, col);
        }
      images.push_back(std::move(m));
    }
  return LieEmbedding(std::move(source), EmbeddingTarget::sl(d), std::move(images));
}

LieEmbedding compose(const LieEmbedding& first, const LieEmbedding& second) {
  const auto& mid = first.target();
  if (mid.blocks.size() != 1 || mid.blocks[0].kind != ClassicalKind::SL || second.source().kind() != LieKind::SL ||
      second.source().algebra().n() != mid.n)
    throw std::invalid_argument("compose: the second source must be the first target sl(N)");
  std::vector<Matrix> images;
  images.reserve(first.images().size());
  for (const auto& m : first.images()) images.push_back(second.apply(m));
  return LieEmbedding(first.source_handle(), second.target(), std::move(images));
}

bool is_lie_homomorphism(const LieEmbedding& emb) {
  const auto& src = emb.source();
  const std::size_t n = src.algebra().n();
  std::vector<Matrix> xs, ys;
  for (const auto& v : src.space().basis()) {
    xs.emplace_back(n, n, v);
    ys.push_back(emb.apply(xs.back()));
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (emb.apply(commutator(xs[i], xs[j])) != commutator(ys[i], ys[j])) return false;
  return true;
}

bool is_lie_homomorphism_on_generators(const LieEmbedding& emb) {
  const auto& src = emb.source();
  const std::size_t n = src.algebra().n();
  StandardForm sf = standard_form(src);
  std::vector<Matrix> gens = sf.raising;
  gens.insert(gens.end(), sf.lowering.begin(), sf.lowering.end());
  std::vector<Matrix> gimg;
  for (const auto& g : gens) gimg.push_back(emb.apply(g));
  for (const auto& v : src.space().basis()) {
    Matrix x(n, n, v);
    Matrix y = emb.apply(x);
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (emb.apply(commutator(x, gens[k])) != commutator(y, gimg[k])) return false;
  }
  return true;
}

bool is_injective(const LieEmbedding& emb) {
  const std::size_t n = emb.source().algebra().n();
  SpanBuilder b(emb.target().n * emb.target().n);
  for (const auto& v : emb.source().space().basis()) b.add(emb.apply(Matrix(n, n, v)).entries());
  return b.dim() == emb.source().dim();
}

bool maps_into_target(const LieEmbedding& emb) {
  const std::size_t n = emb.source().algebra().n();
  for (const auto& v : emb.source().space().basis())
    if (!emb.target().contains(emb.apply(Matrix(n, n, v)))) return false;
  return true;
}

std::string to_string(FactorTag t) {
  switch (t) {
    case FactorTag::Trivial: return "trivial";
    case FactorTag::Natural: return "natural";
    case FactorTag::Conatural: return "conatural";
    case FactorTag::Other: return "other";
  }
  return "unknown";
}

std::size_t natural_module_count(const LieEmbedding& emb) { return emb.target().blocks.size(); }

namespace {

FactorTag tag_of(const Weight& w) {
  const std::size_t r = w.type.rank;
  bool zero = std::all_of(w.coords.begin(), w.coords.end(), [](auto c) { return c == 0; });
  if (zero) return FactorTag::Trivial;
  auto is_fundamental = [&](std::size_t i) {
    for (std::size_t k = 0; k < r; ++k)
      if (w.coords[k] != (k == i ? 1 : 0)) return false;
    return true;
  };
  if (is_fundamental(0)) return FactorTag::Natural;
  if (w.type.family == Family::A && is_fundamental(r - 1)) return FactorTag::Conatural;
  return FactorTag::Other;
}

struct WeightSpace {
  std::vector<std::int64_t> weight;
  Subspace space;
};

std::vector<WeightSpace> weight_spaces(const std::vector<Matrix>& h, std::size_t dim) {
  std::vector<WeightSpace> pieces{{{}, Subspace::whole(dim)}};
  for (const auto& hm : h) {
    const long bound = row_sum_bound(hm);
    std::map<long, Subspace> kernels;
    std::vector<WeightSpace> next;
    for (auto& p : pieces) {
      std::size_t left = p.space.dim();
      for (long c = -bound; c <= bound && left > 0; ++c) {
        auto it = kernels.find(c);
        if (it == kernels.end()) it = kernels.emplace(c, kernel(hm - Scalar(c) * Matrix::identity(dim))).first;
        if (it->second.is_zero()) continue;
        Subspace w = subspace_intersect(p.space, it->second);
        if (w.is_zero()) continue;
        left -= w.dim();
        auto wt = p.weight;
        wt.push_back(c);
        next.push_back({std::move(wt), std::move(w)});
      }
      if (left != 0) throw InternalError("Cartan action is not diagonalisable with integral eigenvalues");
    }
    pieces = std::move(next);
  }
  return pieces;
}

Subspace lowering_closure(const Vector& v, const std::vector<Matrix>& f) {
  SpanBuilder b(v.size());
  std::deque<Vector> todo{v};
  b.add(v);
  while (!todo.empty()) {
    Vector x = std::move(todo.front());
    todo.pop_front();
    for (const auto& fm : f) {
      Vector y = fm * x;
      if (b.add(y)) todo.push_back(std::move(y));
    }
  }
  return b.build();
}

}  // namespace

CompositionFactorReport restrict_and_decompose(const LieEmbedding& emb, std::size_t module) {
  const auto& block = emb.target().blocks.at(module);
  StandardForm sf = standard_form(emb.source());
  const std::size_t dim = block.size;
  auto rho = [&](const Matrix& x) { return emb.apply(x).block(block.offset, block.offset, dim, dim); };
  std::vector<Matrix> h, e, f;
  for (const auto& m : sf.coroots) h.push_back(rho(m));
  for (const auto& m : sf.raising) e.push_back(rho(m));
  for (const auto& m : sf.lowering) f.push_back(rho(m));

  auto spaces = weight_spaces(h, dim);
  Subspace highest = Subspace::whole(dim);
  for (const auto& em : e) highest = subspace_intersect(highest, kernel(em));

  CompositionFactorReport report;
  report.module_dim = dim;
  std::map<std::vector<std::int64_t>, std::size_t> character, resummed;
  for (const auto& ws : spaces) character[ws.weight] += ws.space.dim();

  SpanBuilder all(dim);
  std::size_t total = 0;
  bool supremacy = true;
  for (const auto& ws : spaces) {
    Subspace top = subspace_intersect(highest, ws.space);
    if (top.is_zero()) continue;
    Weight w(sf.type, ws.weight);
    std::size_t factor_dim = 0;
    for (const auto& v : top.basis()) {
      Subspace sub = lowering_closure(v, f);
      factor_dim = sub.dim();
      for (const auto& u : sub.basis()) all.add(u);
      Scalar top_delta = delta_of_weight(w);
      for (const auto& other : spaces) {
        std::size_t m = subspace_intersect(sub, other.space).dim();
        if (m == 0) continue;
        resummed[other.weight] += m;
        if (delta_of_weight(Weight(sf.type, other.weight)) > top_delta) supremacy = false;
      }
    }
    total += factor_dim * top.dim();
    report.factors.push_back({w, factor_dim, top.dim(), tag_of(w)});
  }
  report.dims_consistent = total == dim && all.dim() == dim;
  report.characters_consistent = character == resummed;
  report.delta_supremacy = supremacy;
  if (!report.dims_consistent || !report.characters_consistent)
    throw InternalError("restricted module does not split into the generated submodules");
  return report;
}

bool report_is_diagonal(const CompositionFactorReport& r) {
  return std::all_of(r.factors.begin(), r.factors.end(), [](const auto& f) { return f.tag != FactorTag::Other; });
}

bool report_is_plain(const CompositionFactorReport& r, const RootType& source) {
  if (source.family != Family::A) return false;
  return std::all_of(r.factors.begin(), r.factors.end(),
                     [](const auto& f) { return f.tag == FactorTag::Trivial || f.tag == FactorTag::Natural; });
}

bool is_diagonal(const LieEmbedding& emb) {
  for (std::size_t k = 0; k < natural_module_count(emb); ++k)
    if (!report_is_diagonal(restrict_and_decompose(emb, k))) return false;
  return true;
}

bool is_plain(const LieEmbedding& emb) {
  RootType t = standard_form(emb.source()).type;
  for (std::size_t k = 0; k < natural_module_count(emb); ++k)
    if (!report_is_plain(restrict_and_decompose(emb, k), t)) return false;
  return true;
}

Scalar delta_of_restriction(const LieEmbedding& emb, std::size_t module) {
  Scalar best = 0;
  for (const auto& f : restrict_and_decompose(emb, module).factors) best = std::max(best, delta_of_module(f.highest));
  return best;
}

Scalar delta_of_restriction(const LieEmbedding& emb) {
  Scalar best = 0;
  for (std::size_t k = 0; k < natural_module_count(emb); ++k) best = std::max(best, delta_of_restriction(emb, k));
  return best;
}

}  // namespace lieinner
