#pragma once

#include <json.hpp>

#include "toroidal/core/laurent_poly.hpp"
#include "toroidal/core/multi_index.hpp"
#include "toroidal/core/scalar.hpp"

namespace toroidal {

using json = nlohmann::json;

// Scalars travel as "p/q" (or "p") strings; polynomials as {"exponent": "scalar"}.
void to_json(json& j, const Scalar& s);
void from_json(const json& j, Scalar& s);
void to_json(json& j, const LaurentPoly& p);
void from_json(const json& j, LaurentPoly& p);
void to_json(json& j, const MultiIndex& m);
void from_json(const json& j, MultiIndex& m);

/// Scalar from a JSON string or integer; the error names `field`.
Scalar scalar_field(const json& j, const std::string& field);

}  // namespace toroidal
