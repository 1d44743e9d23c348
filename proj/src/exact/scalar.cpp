#include "lieinner/exact/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace lieinner {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

std::string format_scalar(const Scalar& x) { return x.get_str(); }

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw std::length_error("axpy: length mismatch");
  if (is_zero(a)) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) y[i] += a * x[i];
}

Vector scaled(const Vector& x, const Scalar& a) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i];
  return r;
}

Vector add(const Vector& x, const Vector& y) {
  Vector r = x;
  axpy(r, Scalar(1), y);
  return r;
}

Vector subtract(const Vector& x, const Vector& y) {
  Vector r = x;
  axpy(r, Scalar(-1), y);
  return r;
}

}  // namespace lieinner
