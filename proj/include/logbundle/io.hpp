#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "logbundle/arrangement.hpp"
#include "logbundle/matrix.hpp"
#include "logbundle/poly.hpp"
#include "logbundle/projective.hpp"
#include "logbundle/rnc.hpp"
#include "logbundle/steiner.hpp"

// JSON documents.  Rationals are strings "a/b" (or "a"); integers are also
// accepted on input, floats never.  Malformed documents raise InputError.
namespace logbundle::io {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
// List of {exponents, coefficient} records in graded-lex order.
Json to_json(const MultiPoly& p);
// {n, forms}
Json to_json(const Arrangement& a);
// {n, dim_i, dim_w, slices}
Json to_json(const SteinerTensor& t);
Json to_json(const std::vector<ProjPoint>& pts);

Rational rational_from(const Json& j);
Vector vector_from(const Json& j);
// Rectangular array of rows; `cols` is enforced when nonzero.
Matrix matrix_from(const Json& j, std::size_t cols = 0);
MultiPoly poly_from(const Json& j, std::size_t n_vars);
// {n, forms} or {n, points}: the coordinate vectors, without validation
// beyond lengths and nonzero entries.
std::vector<ProjPoint> points_from(const Json& j);
// Same document, validated as an arrangement in general position.
Arrangement arrangement_from(const Json& j);
SteinerTensor tensor_from(const Json& j);
// A 2 x (n+1) array, or a record {rows}.
Matrix span_from(const Json& j, std::size_t n);
// A single point: an array, or a record {point}.
ProjPoint point_from(const Json& j, std::size_t n);

Json read_file(const std::string& path);

}  // namespace logbundle::io
