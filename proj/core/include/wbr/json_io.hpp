#pragma once

#include <nlohmann/json.hpp>

#include "wbr/frame.hpp"
#include "wbr/mpoly.hpp"
#include "wbr/witt.hpp"

namespace wbr {

using nlohmann::json;

// Polynomials: { "vars": [ids...], "terms": [{"exps": [...], "coef":
// "<decimal>"}...], "mod": m? } with exps aligned to vars and coefficients
// as decimal strings.
json poly_to_json(const MPoly& p);
MPoly poly_from_json(const json& j);

json spec_to_json(const GroupSpec& g);
GroupSpec spec_from_json(const json& j);

json subgroup_to_json(const SubgroupRep& s);

json frame_to_json(const Frame& f);

// { "group": spec, "ring": "Z" | "Z/m", "coords": [poly...] }
json witt_to_json(const WittVec& a);
WittVec witt_from_json(const json& j, const Frame& f);

}  // namespace wbr
