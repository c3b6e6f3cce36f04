#pragma once

#include "orbitforge/f4root.hpp"
#include "orbitforge/mpoly.hpp"
#include "orbitforge/report.hpp"
#include "orbitforge/spectra.hpp"

#include <json.hpp>

namespace orbitforge {

using Json = nlohmann::ordered_json;

/// {"vars": [...], "terms": [{"e": [...], "c": "num/den"}, ...]} in graded-lex order.
Json to_json(const MPoly& p);
/// Inverse of to_json; the ring is Laurent when any exponent is negative.
MPoly mpoly_from_json(const Json& j);

Json to_json(const RootVec& v);
/// {"suite", "checks": [{"name", "status", "witness"?, "detail"?}], "status"}.
Json to_json(const Report& r);
Json to_json(const SpectralReport& r);

}  // namespace orbitforge
