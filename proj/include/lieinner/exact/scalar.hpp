#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lieinner {

// Exact rational. GMP keeps every mpq_class value in lowest terms with a
// positive denominator as long as it is built through the checked parser or
// arithmetic.
using Scalar = mpq_class;

// Coordinate vector over Q.
using Vector = std::vector<Scalar>;

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed text or
// a zero denominator.
Scalar parse_scalar(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_scalar(const Scalar& x);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

bool is_zero(const Vector& v);

Vector zero_vector(std::size_t n);

// y += a * x. Lengths must agree.
void axpy(Vector& y, const Scalar& a, const Vector& x);

Vector scaled(const Vector& x, const Scalar& a);

Vector add(const Vector& x, const Vector& y);

Vector subtract(const Vector& x, const Vector& y);

}  // namespace lieinner
