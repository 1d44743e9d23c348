#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieinner/assoc/algebra.hpp"
#include "lieinner/inner/inner_ideals.hpp"

namespace lieinner {

// x -> diag(x, ..., x (p times), c(x), ..., c(x) (q times), 0_z).
struct TowerSignature {
  std::size_t p = 1;
  std::size_t q = 0;
  std::size_t z = 0;

  // "p,q,z"
  static TowerSignature parse(const std::string& text);
  std::size_t copies() const { return p + q; }
  friend bool operator==(const TowerSignature&, const TowerSignature&) = default;
};

std::string to_string(const TowerSignature& s);

// Plain levels are M_n without involution; Orthogonal levels carry the form
// diag(G x p, G^-1 x q, antidiagonal z) built from the antidiagonal base form.
enum class TowerKind { Plain, Orthogonal };
std::string to_string(TowerKind k);

// Finite chain of matrix algebras A_0 -> A_1 -> ... -> A_{depth-1}. The
// dual copy is c(x) = T^T x T^-T with T the level Gram matrix (antidiagonal
// reversal for plain levels), an algebra automorphism of M_n.
class Tower {
 public:
  Tower(TowerKind kind, std::size_t base_n, TowerSignature signature, std::size_t depth);

  TowerKind kind() const { return kind_; }
  const TowerSignature& signature() const { return signature_; }
  std::size_t depth() const { return sizes_.size(); }
  std::size_t size(std::size_t level) const { return sizes_.at(level); }
  const InvolutiveAlgebra& level(std::size_t k) const { return levels_.at(k); }
  // Indices in level k+1 of the zero block appended by step k.
  std::pair<std::size_t, std::size_t> zero_block(std::size_t k) const;

  Matrix step(const Matrix& x, std::size_t k) const;
  // Rejects from > to and sizes that do not match the level.
  Matrix push(const Matrix& x, std::size_t from, std::size_t to) const;

  // step(ab) = step(a) step(b) on matrix units, and step(a*) = step(a)*
  // for orthogonal towers.
  bool is_step_homomorphism(std::size_t k) const;
  bool is_step_star_compatible(std::size_t k) const;

 private:
  TowerKind kind_;
  TowerSignature signature_;
  std::vector<std::size_t> sizes_;
  std::vector<InvolutiveAlgebra> levels_;
  std::vector<Matrix> twist_;
  std::vector<Matrix> twist_inv_t_;
};

// Per level idempotents e_a, with f_a for plain towers.
struct IdempotentChain {
  std::vector<Matrix> e;
  std::vector<Matrix> f;
};

// e_0 = e_00 in the base and e_{k+1} = step(e_k) plus a projection onto
// the first half of the new zero block; f grows on the second half for
// plain towers. Base size must be 2 or more.
IdempotentChain standard_chain(const Tower& tower);
IdempotentChain zero_chain(const Tower& tower);

struct ChainFailure {
  std::string relation;
  std::size_t from;
  std::size_t to;
};

struct ChainReport {
  std::size_t relations_checked = 0;
  std::vector<ChainFailure> failures;
  bool passed() const { return failures.empty(); }
};

// Idempotence at every level, f_a e_a = 0 (plain) or e_a* e_a = 0
// (orthogonal), and for every a < b: e_b e_a = e_a and f_a f_b = f_a after
// pushing the level-a element forward.
ChainReport verify_chain(const Tower& tower, const IdempotentChain& chain);

// e_a A_a f_a (plain) or the skew part of e_a A_a e_a* (orthogonal).
InnerIdealCandidate limit_ideal_level(const Tower& tower, const IdempotentChain& chain, std::size_t level);

struct LevelReport {
  std::size_t level = 0;
  std::size_t size = 0;
  std::size_t dim = 0;
  bool regular = false;
  std::optional<bool> inner;  // set when the level is small enough to check
  bool coherent_with_next = true;
};

struct LimitReport {
  std::vector<LevelReport> levels;
  std::optional<Counterexample> counterexample;
  bool passed() const;
};

// Level ideals, regularity (star regularity for orthogonal towers), the
// exact inner-ideal check for levels with size <= inner_cap, and coherence
// push(I_a) subset of I_{a+1}.
LimitReport limit_report(const Tower& tower, const IdempotentChain& chain, std::size_t inner_cap = 16);

// Ranks of push(x, 0, k) for every level k.
std::vector<std::size_t> rank_growth(const Tower& tower, const Matrix& x);
bool rank_constant(const std::vector<std::size_t>& ranks);
// Strictly increasing from level to level.
bool rank_growing(const std::vector<std::size_t>& ranks);

}  // namespace lieinner
