#include "lieinner/exact/json_io.hpp"

#include <stdexcept>

namespace lieinner {

Json scalar_to_json(const Scalar& x) { return format_scalar(x); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw std::invalid_argument("scalar must be a \"p/q\" string or an integer");
}

Json vector_to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be a JSON array");
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", vector_to_json(m.entries())}};
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("matrix must be {rows, cols, entries}");
  return Matrix(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                vector_from_json(j.at("entries")));
}

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(vector_to_json(v));
  return Json{{"ambient", s.ambient()}, {"basis", basis}};
}

Subspace subspace_from_json(const Json& j, bool canonicalize_on_load) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("basis"))
    throw std::invalid_argument("subspace must be {ambient, basis}");
  auto ambient = j.at("ambient").get<std::size_t>();
  std::vector<Vector> basis;
  for (const auto& v : j.at("basis")) basis.push_back(vector_from_json(v));
  if (canonicalize_on_load) return canonicalize(basis, ambient);
  return Subspace::from_canonical(ambient, std::move(basis));
}

}  // namespace lieinner
