#pragma once

#include <json.hpp>

#include "schurw/poly.hpp"
#include "schurw/tau.hpp"
#include "schurw/vertex.hpp"

namespace schurw {

using Json = nlohmann::ordered_json;

// Canonical forms: terms sorted by the deterministic monomial order,
// rationals as canonical "p" / "p/q" strings, variable indices as
// string keys in ascending numeric order.
Json poly_to_json(const Poly& p);
Json lincomb_to_json(const LinComb& lc);
Json series_to_json(const Series& s);
Json rational_to_json(const Rational& r);

std::string dump(const Json& j, bool pretty);

}  // namespace schurw
