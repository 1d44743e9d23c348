#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieinner/assoc/ideals.hpp"
#include "lieinner/exact/random.hpp"
#include "lieinner/lie/lie_algebra.hpp"

namespace lieinner {

// Input rejected because a documented precondition does not hold; the
// message names the precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A claim that failed on a concrete instance, with the vectors involved.
struct Counterexample {
  std::string claim;
  std::vector<Vector> witnesses;
};

struct InnerIdealCandidate {
  std::shared_ptr<const LieAlgebra> lie;
  Subspace space;
};

// Throws PreconditionError unless space is a subspace of lie.
InnerIdealCandidate make_candidate(std::shared_ptr<const LieAlgebra> lie, Subspace space);

// [I, [I, L]] subset of I. Throws PreconditionError if I is not inside L.
bool is_inner_ideal(const Subspace& i, const LieAlgebra& l);

// eAf for idempotents e, f of a Full algebra with fe = 0.
Subspace construct_eAf(const InvolutiveAlgebra& alg, const Matrix& e, const Matrix& f);
// Same, and checks the result lies in l (InternalError otherwise).
Subspace construct_eAf(const LieAlgebra& l, const Matrix& e, const Matrix& f);
// e L e* for an idempotent e with e* e = 0.
Subspace construct_eLestar(const LieAlgebra& l, const AlgebraElement& e);

// The operator w -> Phi(w, u) v as a matrix.
Matrix rank_one_operator(const InvolutiveAlgebra& alg, const Vector& u, const Vector& v);
// span{u*v - eps v*u : u, v in U}: the skew elements spanned by U (x) U.
Subspace isotropic_bracket_span(const InvolutiveAlgebra& alg, std::span<const Vector> u);

Subspace square_space(const InvolutiveAlgebra& alg, const Subspace& i);

// I^2 = 0 and IAI subset of I.
bool is_regular(const Subspace& i, const InvolutiveAlgebra& alg);
// I^2 = 0 and u*(IAI) subset of I.
bool is_star_regular(const Subspace& i, const InvolutiveAlgebra& alg);

struct RegularDecomposition {
  OneSidedIdeal left;
  OneSidedIdeal right;
  bool lr_zero = false;
  bool sandwich_holds = false;
};

// RL subset of I subset of R n L n L and LR = 0.
bool sandwich_condition(const LieAlgebra& l, const OneSidedIdeal& right, const OneSidedIdeal& left,
                        const Subspace& i);
// u*(L*L) subset of I subset of L* n L n K and LL* = 0.
bool star_sandwich_condition(const LieAlgebra& k, const OneSidedIdeal& left, const Subspace& i);

// L = AI + I, R = IA + I for a regular I. l must be [A, A]. Also checks
// A L = A I and R A = I A.
RegularDecomposition regular_decompose(const Subspace& i, const LieAlgebra& l);

struct StarRegularDecomposition {
  OneSidedIdeal left;
  bool ll_star_zero = false;
  bool sandwich_holds = false;
};

// L = AI + I for a star-regular I of k = su*(A).
StarRegularDecomposition star_regular_decompose(const Subspace& i, const LieAlgebra& k);

struct SlClassification {
  Matrix e;
  Matrix f;
  bool verified = false;
  std::optional<Counterexample> counterexample;
};

// Recovers idempotents (e, f) with fe = 0 and eAf = I for a proper inner
// ideal I of sl(n).
SlClassification classify_sl_inner(const Subspace& i, const LieAlgebra& sl);

bool check_abelian(const Subspace& i, const LieAlgebra& l);
// [I, [I, I]], re-verified to be inner.
Subspace triple_power(const Subspace& i, const LieAlgebra& l);
// [I, [I, L]] == I. Requires l simple by construction.
bool check_fundamental(const Subspace& i, const LieAlgebra& l);

struct ComponentDecomposition {
  std::vector<Subspace> parts;          // in each component's own algebra
  std::vector<Subspace> ambient_parts;  // the same, inside the sum
  bool exact = false;
  std::optional<Counterexample> counterexample;
};

ComponentDecomposition decompose_components(const Subspace& i, const LieAlgebra& sum);

// I^3 V = 0 on the natural module; also checks x^3 = 0 on a basis.
bool check_I3V(const Subspace& i, const LieAlgebra& l);

// [P, P] = 0 and ad_x^2 L = Fx on basis vectors and sampled combinations.
bool is_point_space(const Subspace& p, const LieAlgebra& l, Rng& rng, std::size_t samples = 50);
// Point space in so(n) whose nonzero elements share a nonzero image vector.
bool is_type1_point_space(const Subspace& p, const LieAlgebra& l, Rng& rng, std::size_t samples = 50);

// I^2 = 0 and I inner in A^(-); cross-checked against IAI subset of I.
bool is_jordan_lie(const Subspace& i, const InvolutiveAlgebra& alg);

// i x j + j x i in I for basis i, j of I and x of L.
bool symmetric_sandwich_closed(const Subspace& i, const LieAlgebra& l);
// i x i in I for basis i of I and x of L.
bool square_sandwich_closed(const Subspace& i, const LieAlgebra& l);

// Projection of a subspace of the doubled algebra onto its first component.
Subspace doubled_projection(const InvolutiveAlgebra& doubled, const Subspace& i);

}  // namespace lieinner
