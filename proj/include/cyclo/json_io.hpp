#pragma once

#include <nlohmann/json.hpp>

#include "cyclo/ansearch.hpp"
#include "cyclo/matrixrep.hpp"
#include "cyclo/polyring.hpp"

namespace cyclo::json_io {

using ordered_json = nlohmann::ordered_json;

// Integer polynomials serialize as the ascending coefficient list in decimal
// strings; rational values as ["num", "den"] pairs. Structural integers
// (orders, degrees, exponents) stay plain JSON numbers.
ordered_json to_json(const polyring::IntPolynomial& f);
ordered_json to_json(const polyring::RatPolynomial& f);
ordered_json to_json(const matrixrep::DenseRatMatrix& m);
ordered_json to_json(const ansearch::SparseSignature& s);
ordered_json to_json(const ansearch::BoundReport& r);

polyring::IntPolynomial int_polynomial_from_json(const ordered_json& j);
matrixrep::DenseRatMatrix matrix_from_json(const ordered_json& j);

}  // namespace cyclo::json_io
