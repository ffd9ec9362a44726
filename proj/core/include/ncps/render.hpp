#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "ncps/ncpoly.hpp"

namespace ncps {

enum class RenderFormat { Text, Json };

/// Deterministic text form: additive terms sorted by (total degree, a, b)
/// descending, each term "rational * i * params * x^a * p^b" with unit
/// factors omitted, e.g. "(3/2)*i*hbar^2*m^-1*x". Equal polynomials render
/// byte-identically and lower(parse(render(F))) == F.
std::string render(const NCPoly& poly, RenderFormat format = RenderFormat::Text);

/// { "terms": [ { "a": uint, "b": uint,
///                "coeff": [ { "re": "n/d", "im": "n/d",
///                             "params": { name: int } } ] } ] }
nlohmann::json poly_to_json(const NCPoly& poly);
NCPoly poly_from_json(const nlohmann::json& doc);

}  // namespace ncps
