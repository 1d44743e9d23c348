#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lieinner/assoc/algebra.hpp"
#include "lieinner/exact/subspace.hpp"

namespace lieinner {

enum class LieKind { SL, SO, SP, SuStar, Derived, DirectSum, Custom };

std::string to_string(LieKind k);

class LieAlgebra;

// A summand of a block-diagonal direct sum: the component lives in its own
// M_size and is placed at rows/columns [offset, offset + size).
struct BlockComponent {
  std::shared_ptr<const LieAlgebra> lie;
  std::size_t offset = 0;
};

// A bracket-closed subspace of an InvolutiveAlgebra together with what is
// known about it by construction.
class LieAlgebra {
 public:
  LieAlgebra(InvolutiveAlgebra algebra, Subspace space, LieKind kind, std::vector<BlockComponent> components = {});

  const InvolutiveAlgebra& algebra() const { return algebra_; }
  const Subspace& space() const { return space_; }
  LieKind kind() const { return kind_; }
  std::size_t dim() const { return space_.dim(); }
  const std::vector<BlockComponent>& components() const { return components_; }

  // Simple by construction: sl(n >= 2), sp(2m >= 2), so(3), so(n >= 5) and
  // su*(M_n (+) M_n^op) for n >= 2.
  bool is_simple_by_construction() const;

  bool contains(const Vector& v) const { return space_.contains(v); }
  bool contains(const Subspace& s) const { return space_.contains(s); }

 private:
  InvolutiveAlgebra algebra_;
  Subspace space_;
  LieKind kind_;
  std::vector<BlockComponent> components_;
};

// span{[s, t]} inside the algebra.
Subspace bracket_space(const InvolutiveAlgebra& alg, const Subspace& s, const Subspace& t);

enum class ClassicalKind { SL, SO, SP };

// sl(n): trace-zero matrices in M_n.
LieAlgebra construct_sl(std::size_t n);
// so(n, Gram) = skew elements of M_n under the orthogonal involution.
LieAlgebra construct_so(std::size_t n, std::optional<Matrix> gram = std::nullopt);
// sp(n, Gram) for even n.
LieAlgebra construct_sp(std::size_t n, std::optional<Matrix> gram = std::nullopt);
// Dispatches on kind; n is the matrix size. Throws std::invalid_argument for
// n < 2 or an odd symplectic size.
LieAlgebra construct_classical(ClassicalKind kind, std::size_t n, std::optional<Matrix> gram = std::nullopt);
// su*(A) = [u*(A), u*(A)].
LieAlgebra construct_su_star(const InvolutiveAlgebra& alg);
// A viewed as a Lie algebra under commutators.
LieAlgebra as_lie_algebra(const InvolutiveAlgebra& alg);

bool is_bracket_closed(const LieAlgebra& l);

LieAlgebra derived_algebra(const LieAlgebra& l);
bool is_perfect(const LieAlgebra& l);

// Gram matrix of trace(ad x ad y) on the canonical basis of l.
Matrix killing_form(const LieAlgebra& l);
bool is_semisimple(const LieAlgebra& l);

// Block-diagonal direct sum in M_total. Components must be Full-shaped and
// their blocks must not overlap (std::invalid_argument otherwise).
LieAlgebra direct_sum(std::vector<BlockComponent> blocks, std::size_t total);
// Places the components one after another.
LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts);

// Coordinates in the ambient algebra of component k (a block placed at its
// offset) and its projection pi_k (the diagonal block, returned in the
// component's own algebra).
Subspace component_space(const LieAlgebra& sum, std::size_t k);
Vector project_component(const LieAlgebra& sum, std::size_t k, const Vector& x);
Vector embed_component(const LieAlgebra& sum, std::size_t k, const Vector& x);

}  // namespace lieinner
