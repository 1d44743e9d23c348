#pragma once

#include <json.hpp>

#include "lieinner/exact/matrix.hpp"
#include "lieinner/exact/subspace.hpp"

namespace lieinner {

using Json = nlohmann::json;

// Scalars travel as strings "p/q" (integers may also be plain JSON numbers).
Json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

// {rows, cols, entries: ["p/q", ...]}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// {ambient, basis: [[...], ...]}. With canonicalize_on_load false a basis
// that is not already canonical is rejected.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, bool canonicalize_on_load = true);

}  // namespace lieinner
