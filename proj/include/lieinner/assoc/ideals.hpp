#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "lieinner/assoc/algebra.hpp"
#include "lieinner/exact/subspace.hpp"

namespace lieinner {

// Raised when a computation that cannot fail for a correct implementation
// (e.g. idempotent recovery in a semisimple algebra) does fail.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side { Left, Right };

struct OneSidedIdeal {
  Side side;
  Subspace space;

  friend bool operator==(const OneSidedIdeal&, const OneSidedIdeal&) = default;
};

// Subspaces of an algebra live in Q^{alg.dim()} through flatten().
Subspace span_of(const InvolutiveAlgebra& alg, std::span<const AlgebraElement> elements);
Subspace whole_algebra(const InvolutiveAlgebra& alg);
std::vector<AlgebraElement> elements_of(const InvolutiveAlgebra& alg, const Subspace& s);

// span{s t : s in S, t in T}.
Subspace product_space(const InvolutiveAlgebra& alg, const Subspace& s, const Subspace& t);

// span{s a t : s in S, a in A, t in T}. Uses the tensor description
// col(S) (x) row(T) in each matrix component.
Subspace sandwich_space(const InvolutiveAlgebra& alg, const Subspace& s, const Subspace& t);

// span{q - q* : q in basis(S)}; for *-invariant S this is the set of skew
// elements of S.
Subspace skew_part(const InvolutiveAlgebra& alg, const Subspace& s);
// u*(A) = {a : a* = -a}.
Subspace skew_elements(const InvolutiveAlgebra& alg);
// S* = {s* : s in S}.
Subspace star_image(const InvolutiveAlgebra& alg, const Subspace& s);

bool is_one_sided_ideal(const InvolutiveAlgebra& alg, const Subspace& s, Side side);

// Smallest one-sided ideal containing the input: AS + S (left) or SA + S.
OneSidedIdeal ideal_generated(const InvolutiveAlgebra& alg, const Subspace& s, Side side);
OneSidedIdeal ideal_generated(const InvolutiveAlgebra& alg, const AlgebraElement& x, Side side);

// An idempotent f with L = Af and xf = x on L (mirrored for right ideals).
// Throws InternalError when no such element exists.
AlgebraElement idempotent_generator(const InvolutiveAlgebra& alg, const OneSidedIdeal& ideal);

// A y with x y x = x, or nullopt.
std::optional<AlgebraElement> von_neumann_witness(const InvolutiveAlgebra& alg, const AlgebraElement& x);

// dim span{x b x : b in basis(A)}.
std::size_t sandwich_dimension(const InvolutiveAlgebra& alg, const AlgebraElement& x);

namespace detail {
// Reference implementations by raw pairwise products over the algebra
// basis; the fast paths above are checked against these.
Subspace ideal_generated_by_products(const InvolutiveAlgebra& alg, const Subspace& s, Side side);
Subspace sandwich_by_products(const InvolutiveAlgebra& alg, const Subspace& s, const Subspace& t);
}  // namespace detail

}  // namespace lieinner
