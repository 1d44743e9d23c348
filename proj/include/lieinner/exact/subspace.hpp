#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lieinner/exact/scalar.hpp"

namespace lieinner {

// A subspace of Q^ambient stored in reduced row echelon form. Because the
// form is canonical, two Subspace values are equal exactly when they span
// the same space.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace whole(std::size_t ambient);
  // Rejects (std::invalid_argument) a basis that is not already in RREF.
  static Subspace from_canonical(std::size_t ambient, std::vector<Vector> basis);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Remainder of v after elimination against the basis; zero iff v is inside.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  // Coordinates with respect to basis(): for v inside the space they are the
  // entries of v at the pivot columns. Absent when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  Vector combine(std::span<const Scalar> coords) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  friend class SpanBuilder;
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

// Incremental span. Rows are kept in (not necessarily reduced) echelon form
// keyed by pivot; build() back-substitutes to the canonical form.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient) : ambient_(ambient) {}

  // Returns true when v enlarged the span.
  bool add(Vector v);
  bool contains(const Vector& v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  Subspace build() const;

 private:
  Vector reduce(Vector v) const;
  std::size_t ambient_;
  std::map<std::size_t, Vector> rows_;
};

// Throws std::length_error when a vector's length differs from ambient.
Subspace canonicalize(std::span<const Vector> vectors, std::size_t ambient);

// Both throw std::invalid_argument on mismatched ambient dimensions.
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

bool contains(const Subspace& outer, const Subspace& inner);

}  // namespace lieinner
