#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "lieinner/assoc/algebra.hpp"
#include "lieinner/exact/random.hpp"
#include "lieinner/inner/inner_ideals.hpp"

namespace lieinner {

// Finitely supported vector over the basis e_0, e_1, ...
class FinVector {
 public:
  FinVector() = default;
  static FinVector basis(std::size_t i);
  static FinVector from_dense(const Vector& v);

  const std::map<std::size_t, Scalar>& support() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  Scalar at(std::size_t i) const;
  void set(std::size_t i, const Scalar& x);
  // One past the largest index in the support, 0 for the zero vector.
  std::size_t bound() const;
  Vector dense(std::size_t n) const;

  FinVector& axpy(const Scalar& a, const FinVector& x);
  friend FinVector operator+(FinVector a, const FinVector& b) { return a.axpy(1, b); }
  friend FinVector operator-(FinVector a, const FinVector& b) { return a.axpy(-1, b); }
  friend FinVector operator*(const Scalar& s, const FinVector& a);
  friend bool operator==(const FinVector&, const FinVector&) = default;

 private:
  std::map<std::size_t, Scalar> entries_;
};

enum class PairingKind { Standard, SymmetricHyperbolic, SkewStandard };
std::string to_string(PairingKind k);

// g(e_i, f_j) = delta_ij for Standard; otherwise X = Y with
// Phi(e_2i, e_2i+1) = 1 and Phi(e_2i+1, e_2i) = eps.
struct DualPairSpec {
  PairingKind kind = PairingKind::Standard;

  bool self_dual() const { return kind != PairingKind::Standard; }
  int epsilon() const;
  Scalar pair(std::size_t i, std::size_t j) const;
  Scalar pair(const FinVector& x, const FinVector& y) const;
  // Gram matrix on the first n basis vectors.
  Matrix gram(std::size_t n) const;
  friend bool operator==(const DualPairSpec&, const DualPairSpec&) = default;
};

// Sum of w_i* u_i with (w* u)(x) = g(x, w) u. Terms are kept canonical:
// the w's form a reduced echelon basis, so equal operators have equal terms.
class FinRankOperator {
 public:
  struct Term {
    FinVector w;
    FinVector u;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit FinRankOperator(DualPairSpec spec) : spec_(spec) {}
  FinRankOperator(DualPairSpec spec, std::vector<Term> terms);
  // w* u
  static FinRankOperator rank_one(DualPairSpec spec, const FinVector& w, const FinVector& u);

  const DualPairSpec& spec() const { return spec_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t rank() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t bound() const;

  friend FinRankOperator operator+(const FinRankOperator& a, const FinRankOperator& b);
  friend FinRankOperator operator-(const FinRankOperator& a, const FinRankOperator& b);
  friend FinRankOperator operator*(const Scalar& s, const FinRankOperator& a);
  friend bool operator==(const FinRankOperator&, const FinRankOperator&) = default;

 private:
  DualPairSpec spec_;
  std::vector<Term> terms_;
};

FinVector apply(const FinRankOperator& a, const FinVector& x);
// a after b. Rejects operators over different pairings.
FinRankOperator compose(const FinRankOperator& a, const FinRankOperator& b);
FinRankOperator lie_bracket(const FinRankOperator& a, const FinRankOperator& b);
// (x* y)* = eps y* x. Self-dual pairings only.
FinRankOperator adjoint(const FinRankOperator& a);
// [x, y] = x* y - eps y* x. Self-dual pairings only.
FinRankOperator bracket_vectors(const DualPairSpec& spec, const FinVector& x, const FinVector& y);

// Matrix of a on e_0..e_{n-1}; rejects supports reaching n. Self-dual
// truncations need even n so the truncated form stays nondegenerate.
Matrix truncate(const FinRankOperator& a, std::size_t n);
// Full(n) for the standard pairing; the form algebra for self-dual ones.
InvolutiveAlgebra truncation_algebra(const DualPairSpec& spec, std::size_t n);
// Smallest admissible truncation size containing every support.
std::size_t truncation_size(const DualPairSpec& spec, std::size_t bound);

// {w* u : w in W, u in U}. PreconditionError unless g(U, W) = 0.
std::vector<FinRankOperator> build_WstarU(const std::vector<FinVector>& u, const std::vector<FinVector>& w);
// {[u_i, u_j] : i <= j}. PreconditionError unless U is totally isotropic.
std::vector<FinRankOperator> build_UU(const DualPairSpec& spec, const std::vector<FinVector>& u);
// v* v for isotropic v under the skew pairing.
FinRankOperator minimal_fsp_ideal(const DualPairSpec& spec, const FinVector& v);
// [x, y] for a totally isotropic pair under the symmetric pairing.
FinRankOperator minimal_fso_ideal(const DualPairSpec& spec, const FinVector& x, const FinVector& y);

// Canonical span of operators inside the truncation at size n.
Subspace operator_span(const std::vector<FinRankOperator>& ops, std::size_t n);

struct FinitaryInnerReport {
  std::size_t samples = 0;
  std::size_t sample_failures = 0;
  std::size_t truncation = 0;
  bool square_zero = false;
  bool truncated_inner = false;
  bool passed = false;
  std::optional<Counterexample> counterexample;
};

// Sampled [i, [j, x]] in span(I) with x drawn from the finitary algebra
// (trace zero for the standard pairing, skew otherwise) plus the exact
// check inside the truncated sl, so or sp.
FinitaryInnerReport check_finitary_inner(Rng& rng, const std::vector<FinRankOperator>& generators,
                                         std::size_t samples);
FinitaryInnerReport check_fsl_inner(Rng& rng, const std::vector<FinVector>& u, const std::vector<FinVector>& w,
                                    std::size_t samples);

}  // namespace lieinner
