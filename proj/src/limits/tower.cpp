#include "lieinner/limits/tower.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

#include "lieinner/exact/linalg.hpp"

namespace lieinner {

TowerSignature TowerSignature::parse(const std::string& text) {
  std::istringstream in(text);
  TowerSignature s;
  char c1 = 0, c2 = 0;
  long p = -1, q = -1, z = -1;
  if (!(in >> p >> c1 >> q >> c2 >> z) || c1 != ',' || c2 != ',' || p < 0 || q < 0 || z < 0 || !in.eof())
    throw std::invalid_argument("signature must be three non-negative integers p,q,z");
  s.p = static_cast<std::size_t>(p);
  s.q = static_cast<std::size_t>(q);
  s.z = static_cast<std::size_t>(z);
  return s;
}

std::string to_string(const TowerSignature& s) {
  return std::to_string(s.p) + "," + std::to_string(s.q) + "," + std::to_string(s.z);
}

std::string to_string(TowerKind k) { return k == TowerKind::Plain ? "plain" : "orthogonal"; }

Tower::Tower(TowerKind kind, std::size_t base_n, TowerSignature signature, std::size_t depth)
    : kind_(kind), signature_(signature) {
  if (base_n == 0) throw std::invalid_argument("tower base must be nonzero");
  if (depth == 0) throw std::invalid_argument("tower depth must be positive");
  if (signature.copies() == 0) throw std::invalid_argument("signature needs at least one copy of x");
  Matrix g = split_orthogonal_gram(base_n);
  for (std::size_t k = 0; k < depth; ++k) {
    const std::size_t n = g.rows();
    sizes_.push_back(n);
    Matrix gi = *inverse(g);
    levels_.push_back(kind == TowerKind::Plain ? InvolutiveAlgebra::full(n) : InvolutiveAlgebra::orthogonal(n, g));
    Matrix t = kind == TowerKind::Plain ? split_orthogonal_gram(n) : g;
    twist_.push_back(t.transpose());
    twist_inv_t_.push_back(inverse(t)->transpose());
    if (k + 1 == depth) break;
    std::vector<Matrix> blocks(signature.p, g);
    for (std::size_t i = 0; i < signature.q; ++i) blocks.push_back(gi);
    if (signature.z > 0) blocks.push_back(split_orthogonal_gram(signature.z));
    g = block_diagonal(blocks);
  }
}

std::pair<std::size_t, std::size_t> Tower::zero_block(std::size_t k) const {
  const std::size_t start = signature_.copies() * size(k);
  return {start, start + signature_.z};
}

Matrix Tower::step(const Matrix& x, std::size_t k) const {
  if (k + 1 >= depth()) throw std::invalid_argument("no step beyond the last level");
  const std::size_t n = size(k);
  if (x.rows() != n || x.cols() != n) throw std::invalid_argument("element does not belong to this level");
  Matrix out(size(k + 1), size(k + 1));
  std::size_t off = 0;
  for (std::size_t i = 0; i < signature_.p; ++i, off += n) out.set_block(off, off, x);
  if (signature_.q > 0) {
    Matrix c = twist_[k] * x * twist_inv_t_[k];
    for (std::size_t i = 0; i < signature_.q; ++i, off += n) out.set_block(off, off, c);
  }
  return out;
}

Matrix Tower::push(const Matrix& x, std::size_t from, std::size_t to) const {
  if (from > to || to >= depth()) throw std::invalid_argument("push needs from <= to inside the tower");
  if (x.rows() != size(from) || x.cols() != size(from))
    throw std::invalid_argument("element does not belong to the source level");
  Matrix y = x;
  for (std::size_t k = from; k < to; ++k) y = step(y, k);
  return y;
}

bool Tower::is_step_homomorphism(std::size_t k) const {
  const std::size_t n = size(k);
  std::vector<Matrix> img;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) img.push_back(step(Matrix::unit(n, i, j), k));
  const Matrix zero(size(k + 1), size(k + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) {
          const Matrix& expected = j == l ? img[i * n + m] : zero;
          if (img[i * n + j] * img[l * n + m] != expected) return false;
        }
  return true;
}

bool Tower::is_step_star_compatible(std::size_t k) const {
  if (kind_ == TowerKind::Plain) return true;
  const std::size_t n = size(k);
  const auto& a = level(k);
  const auto& b = level(k + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix x = Matrix::unit(n, i, j);
      if (step(a.star(a.element(x)).primary, k) != b.star(b.element(step(x, k))).primary) return false;
    }
  return true;
}

namespace {

Matrix diagonal_projection(std::size_t n, std::size_t from, std::size_t to) {
  Matrix m(n, n);
  for (std::size_t i = from; i < to; ++i) m(i, i) = 1;
  return m;
}

}  // namespace

IdempotentChain standard_chain(const Tower& tower) {
  const std::size_t n0 = tower.size(0);
  if (n0 < 2) throw std::invalid_argument("standard chain needs a base of size >= 2");
  IdempotentChain c;
  c.e.push_back(Matrix::unit(n0, 0, 0));
  if (tower.kind() == TowerKind::Plain) c.f.push_back(Matrix::unit(n0, 1, 1));
  for (std::size_t k = 0; k + 1 < tower.depth(); ++k) {
    const std::size_t n = tower.size(k + 1);
    auto [lo, hi] = tower.zero_block(k);
    if (tower.kind() == TowerKind::Plain) {
      const std::size_t mid = lo + (hi - lo + 1) / 2;
      c.e.push_back(tower.step(c.e[k], k) + diagonal_projection(n, lo, mid));
      c.f.push_back(tower.step(c.f[k], k) + diagonal_projection(n, mid, hi));
    } else {
      c.e.push_back(tower.step(c.e[k], k) + diagonal_projection(n, lo, lo + (hi - lo) / 2));
    }
  }
  return c;
}

IdempotentChain zero_chain(const Tower& tower) {
  IdempotentChain c;
  for (std::size_t k = 0; k < tower.depth(); ++k) {
    c.e.emplace_back(tower.size(k), tower.size(k));
    if (tower.kind() == TowerKind::Plain) c.f.emplace_back(tower.size(k), tower.size(k));
  }
  return c;
}

ChainReport verify_chain(const Tower& tower, const IdempotentChain& chain) {
  ChainReport r;
  const bool plain = tower.kind() == TowerKind::Plain;
  if (chain.e.size() != tower.depth() || (plain && chain.f.size() != tower.depth()))
    throw std::invalid_argument("chain needs one idempotent per level");
  auto check = [&](bool ok, const char* rel, std::size_t a, std::size_t b) {
    ++r.relations_checked;
    if (!ok) r.failures.push_back({rel, a, b});
  };
  for (std::size_t a = 0; a < tower.depth(); ++a) {
    const Matrix& e = chain.e[a];
    check(e * e == e, "e idempotent", a, a);
    if (plain) {
      const Matrix& f = chain.f[a];
      check(f * f == f, "f idempotent", a, a);
      check((f * e).is_zero(), "f e = 0", a, a);
    } else {
      const auto& alg = tower.level(a);
      check((alg.star(alg.element(e)).primary * e).is_zero(), "e* e = 0", a, a);
    }
  }
  for (std::size_t a = 0; a < tower.depth(); ++a)
    for (std::size_t b = a + 1; b < tower.depth(); ++b) {
      Matrix ea = tower.push(chain.e[a], a, b);
      check(chain.e[b] * ea == ea, "e_b e_a = e_a", a, b);
      if (plain) {
        Matrix fa = tower.push(chain.f[a], a, b);
        check(fa * chain.f[b] == fa, "f_a f_b = f_a", a, b);
      }
    }
  return r;
}

InnerIdealCandidate limit_ideal_level(const Tower& tower, const IdempotentChain& chain, std::size_t level) {
  const std::size_t n = tower.size(level);
  const auto& alg = tower.level(level);
  if (tower.kind() == TowerKind::Plain) {
    if (n < 2) throw std::invalid_argument("level ideals need levels of size >= 2");
    auto lie = std::make_shared<LieAlgebra>(construct_sl(n));
    return {lie, construct_eAf(*lie, chain.e.at(level), chain.f.at(level))};
  }
  auto lie = std::make_shared<LieAlgebra>(construct_so(n, alg.gram()));
  return {lie, construct_eLestar(*lie, alg.element(chain.e.at(level)))};
}

bool LimitReport::passed() const {
  if (counterexample) return false;
  for (const auto& l : levels)
    if (!l.regular || (l.inner && !*l.inner) || !l.coherent_with_next) return false;
  return true;
}

LimitReport limit_report(const Tower& tower, const IdempotentChain& chain, std::size_t inner_cap) {
  LimitReport r;
  std::vector<InnerIdealCandidate> ideals;
  for (std::size_t a = 0; a < tower.depth(); ++a) ideals.push_back(limit_ideal_level(tower, chain, a));
  for (std::size_t a = 0; a < tower.depth(); ++a) {
    const auto& c = ideals[a];
    const auto& alg = tower.level(a);
    LevelReport l;
    l.level = a;
    l.size = tower.size(a);
    l.dim = c.space.dim();
    l.regular = tower.kind() == TowerKind::Plain ? is_regular(c.space, alg) : is_star_regular(c.space, alg);
    if (l.size <= inner_cap) l.inner = is_inner_ideal(c.space, *c.lie);
    if (a + 1 < tower.depth()) {
      const std::size_t n = l.size;
      for (const auto& v : c.space.basis()) {
        Vector pushed = tower.step(Matrix(n, n, v), a).entries();
        if (!ideals[a + 1].space.contains(pushed)) {
          l.coherent_with_next = false;
          if (!r.counterexample)
            r.counterexample = Counterexample{"push of level " + std::to_string(a) + " ideal lies in level " +
                                                  std::to_string(a + 1) + " ideal",
                                              {v, pushed}};
          break;
        }
      }
    }
    r.levels.push_back(l);
  }
  return r;
}

std::vector<std::size_t> rank_growth(const Tower& tower, const Matrix& x) {
  std::vector<std::size_t> out;
  Matrix y = x;
  for (std::size_t k = 0; k < tower.depth(); ++k) {
    if (k > 0) y = tower.step(y, k - 1);
    out.push_back(rank(y));
  }
  return out;
}

bool rank_constant(const std::vector<std::size_t>& ranks) {
  for (std::size_t k = 1; k < ranks.size(); ++k)
    if (ranks[k] != ranks[0]) return false;
  return true;
}

bool rank_growing(const std::vector<std::size_t>& ranks) {
  for (std::size_t k = 1; k < ranks.size(); ++k)
    if (ranks[k] <= ranks[k - 1]) return false;
  return ranks.size() > 1;
}

}  // namespace lieinner
