#pragma once

#include <nlohmann/json.hpp>

#include "joinlink/intmatrix.hpp"
#include "joinlink/intpoly.hpp"
#include "joinlink/mixed_poly.hpp"

namespace jl {

using json = nlohmann::json;

// {"n": int, "terms": [{"nu": [..], "mu": [..], "c": ["re", "im"]}, ...]}
// with rationals as strings; terms in canonical (descending) order.
json poly_to_json(const MixedPolynomial& p);
MixedPolynomial poly_from_json(const json& j);

json point_to_json(const ComplexPoint& w);
ComplexPoint point_from_json(const json& j);

// Array of row arrays; entries as numbers when they fit in 64 bits, decimal
// strings otherwise.  The reader accepts both spellings.
json imat_to_json(const IMat& m);
IMat imat_from_json(const json& j);

// Coefficient list, constant term first; [] is the zero polynomial.
json intpoly_to_json(const IntPoly& p);
IntPoly intpoly_from_json(const json& j);

}  // namespace jl
