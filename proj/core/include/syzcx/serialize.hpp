#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "syzcx/algebraic_real.hpp"
#include "syzcx/complexity.hpp"
#include "syzcx/curvature.hpp"
#include "syzcx/spectra.hpp"
#include "syzcx/syzygy.hpp"

namespace syzcx {

using Json = nlohmann::json;

/// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const Json& j);

/// A JSON number, or a decimal string beyond 64 bits.
Json integer_json(const BigInt& v);

/// Integer coefficients as JSON numbers, falling back to decimal strings
/// beyond 64 bits.
Json coefficients_json(const IntPolynomial& p);

/// {"approx", "interval": ["lo", "hi"], "poly": [c0, ...]}
Json to_json(const AlgebraicReal& r);

/// {"kind": "polyexp", "base", "degree"} or {"kind": "zero", "pd"}.
Json to_json(const ComplexityClass& c);

/// {"class", "curvature", "lower_bound"}.
Json class_result_json(const ComplexityClass& c, bool lower_bound);

Json to_json(const CurvatureVerdict& v);

/// Vertex ids are "q0", "q1", ...
std::string quiver_vertex_id(int v);

Json to_json(const SyzygyQuiver& q, const Quiver& algebra_quiver);

/// Components with member ids and spectral radii.
Json to_json(const Condensation& c);

/// Node labels "<vertex>|{killers}"; one edge line per arrow.
std::string to_dot(const SyzygyQuiver& q, const Quiver& algebra_quiver);

/// Inverse of to_json for syzygy quivers. Unknown vertices or arrows are
/// parse errors; malformed killer sets are validation errors.
SyzygyQuiver quiver_from_json(const Json& j, const Quiver& algebra_quiver, std::map<std::string, int>* ids = nullptr);

}  // namespace syzcx
