// JSON forms of the library types. Exact values are strings "num/den".
#pragma once

#include <json.hpp>

#include "qpw/graded.hpp"
#include "qpw/mbf.hpp"
#include "qpw/mra.hpp"
#include "qpw/power.hpp"
#include "qpw/wavelets.hpp"

namespace qpw::io {

using nlohmann::json;

inline constexpr const char* kSchema = "qpw/1";

json to_json(const Rational& q);
json to_json(const PAdicPoint& x);
json to_json(const PAdicVector& v);
json to_json(const Ball& b);
/// {order, coeffs} on the basis zeta_order^k, k < phi(order).
json to_json(const Cyclo& c);
json to_json(const Exponent& w);
/// {exact: {c, w}, float: [re, im]}.
json to_json(const PowerScalar& x);
json to_json(const PowerSum& x);
/// {p, n, terms: [{coef, freq, ball}]}.
json to_json(const MBF& f);
json to_json(const PowerMBF& f);
/// {j0, J, v: [{a, coef}], w: [{j, a, coef}]}.
json to_json(const Decomposition& d);
json to_json(const WaveletIndex& idx);
json complex_json(std::complex<double> z);

// Parsers throw std::invalid_argument on malformed input.
Rational rational_from_json(const json& j);
PAdicPoint point_from_json(int p, const json& j);
PAdicVector vector_from_json(int p, const json& j);
Ball ball_from_json(int p, const json& j);
Cyclo cyclo_from_json(const json& j);
MBF mbf_from_json(const json& j);
Decomposition decomposition_from_json(const json& j);

}  // namespace qpw::io
