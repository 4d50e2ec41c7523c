#pragma once

// JSON encodings of fact sets, moduli reports and bound reports. Rationals are
// encoded as reduced "p/q" strings (integers bare), so every value is exact.
// The shapes are documented in docs/json.md.

#include <json.hpp>

#include "r2sheaf/bounds.hpp"
#include "r2sheaf/moduli.hpp"
#include "r2sheaf/vanish.hpp"

namespace r2sheaf::io {

using nlohmann::json;

json to_json(const vanish::Provenance& p);
vanish::Provenance provenance_from_json(const json& j);

json to_json(const vanish::VanishingFact& f);
vanish::VanishingFact fact_from_json(const json& j);

json to_json(const vanish::FactSet& s);
vanish::FactSet factset_from_json(const json& j);

json to_json(const moduli::ModuliReport& r);
moduli::ModuliReport report_from_json(const json& j);

json to_json(const BoundReport& r);
BoundReport bound_from_json(const json& j);

// Output only.
json to_json(const NumericalThreefold& x);
json to_json(const Rank2Sheaf& f);

}  // namespace r2sheaf::io
