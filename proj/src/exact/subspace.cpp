#include "lieinner/exact/subspace.hpp"

#include <stdexcept>
#include <string>

#include "lieinner/exact/linalg.hpp"

namespace lieinner {

namespace {

void check_length(const Vector& v, std::size_t ambient) {
  if (v.size() != ambient)
    throw std::length_error("vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                            std::to_string(ambient));
}

// v -= c * row, touching only the tail starting at the row's pivot.
void eliminate(Vector& v, const Vector& row, std::size_t pivot) {
  Scalar c = v[pivot];
  for (std::size_t k = pivot; k < row.size(); ++k)
    if (!is_zero(row[k])) v[k] -= c * row[k];
}

}  // namespace

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector e = zero_vector(ambient);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::from_canonical(std::size_t ambient, std::vector<Vector> basis) {
  Subspace s(ambient);
  for (const auto& row : basis) {
    check_length(row, ambient);
    std::size_t p = 0;
    while (p < ambient && lieinner::is_zero(row[p])) ++p;
    if (p == ambient) throw std::invalid_argument("basis is not canonical: zero row");
    if (!s.pivots_.empty() && p <= s.pivots_.back())
      throw std::invalid_argument("basis is not canonical: pivots not strictly increasing");
    if (row[p] != 1) throw std::invalid_argument("basis is not canonical: pivot entry is not 1");
    s.pivots_.push_back(p);
  }
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t q = 0; q < basis.size(); ++q)
      if (q != r && !lieinner::is_zero(basis[q][s.pivots_[r]]))
        throw std::invalid_argument("basis is not canonical: pivot column not cleared");
  s.basis_ = std::move(basis);
  return s;
}

Vector Subspace::reduce(Vector v) const {
  check_length(v, ambient_);
  for (std::size_t r = 0; r < basis_.size(); ++r)
    if (!lieinner::is_zero(v[pivots_[r]])) eliminate(v, basis_[r], pivots_[r]);
  return v;
}

bool Subspace::contains(const Vector& v) const { return lieinner::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Vector Subspace::combine(std::span<const Scalar> coords) const {
  if (coords.size() != basis_.size()) throw std::length_error("combine: coordinate count mismatch");
  Vector v = zero_vector(ambient_);
  for (std::size_t r = 0; r < basis_.size(); ++r) axpy(v, coords[r], basis_[r]);
  return v;
}

Vector SpanBuilder::reduce(Vector v) const {
  for (const auto& [p, row] : rows_)
    if (!is_zero(v[p])) eliminate(v, row, p);
  return v;
}

bool SpanBuilder::add(Vector v) {
  check_length(v, ambient_);
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && is_zero(v[p])) ++p;
  if (p == ambient_) return false;
  Scalar inv = 1 / v[p];
  for (std::size_t k = p; k < ambient_; ++k)
    if (!is_zero(v[k])) v[k] *= inv;
  rows_.emplace(p, std::move(v));
  return true;
}

bool SpanBuilder::contains(const Vector& v) const {
  check_length(v, ambient_);
  return is_zero(reduce(v));
}

Subspace SpanBuilder::build() const {
  std::vector<std::size_t> pivots;
  std::vector<Vector> rows;
  for (const auto& [p, row] : rows_) {
    pivots.push_back(p);
    rows.push_back(row);
  }
  for (std::size_t r = rows.size(); r-- > 0;) {
    std::size_t p = pivots[r];
    for (std::size_t q = 0; q < r; ++q)
      if (!is_zero(rows[q][p])) eliminate(rows[q], rows[r], p);
  }
  Subspace s(ambient_);
  s.basis_ = std::move(rows);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace canonicalize(std::span<const Vector> vectors, std::size_t ambient) {
  SpanBuilder b(ambient);
  for (const auto& v : vectors) b.add(v);
  return b.build();
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace_sum: ambient mismatch");
  SpanBuilder s(a.ambient());
  for (const auto& v : a.basis()) s.add(v);
  for (const auto& v : b.basis()) s.add(v);
  return s.build();
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace_intersect: ambient mismatch");
  const std::size_t n = a.ambient(), da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace(n);
  // Kernel of [A | -B]: pairs (x, y) with A x = B y.
  Matrix m(n, da + db);
  for (std::size_t j = 0; j < da; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = a.basis()[j][i];
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, da + j) = -b.basis()[j][i];
  Subspace k = kernel(m);
  SpanBuilder out(n);
  for (const auto& kv : k.basis()) {
    Vector v = zero_vector(n);
    for (std::size_t j = 0; j < da; ++j) axpy(v, kv[j], a.basis()[j]);
    out.add(std::move(v));
  }
  return out.build();
}

bool contains(const Subspace& outer, const Subspace& inner) { return outer.contains(inner); }

}  // namespace lieinner
