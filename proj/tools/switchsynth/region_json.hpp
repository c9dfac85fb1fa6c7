#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "ssyn/model.hpp"
#include "ssyn/synthesis.hpp"

namespace ssyn::cli {

// Region JSON schema (rationals as exact strings, "p" or "p/q"):
// {
//   "vars": ["x", "y", "t"],
//   "locations": {
//     "SW": [ { "constraints": [
//                 { "coeffs": ["1", "0", "0"], "rel": ">=", "const": "0" } ] } ]
//   }
// }
nlohmann::ordered_json state_set_to_json(const SymStateSet& s);

struct LoadedStateSet {
    VarSpacePtr space;
    std::map<std::string, Region> locations;
};
LoadedStateSet state_set_from_json(const nlohmann::json& j);

// { "vars": [...], "winning": {...}, "permits": [
//     { "transition": "...", "source": "...", "target": "...",
//       "region": [pieces] } ] }
nlohmann::ordered_json strategy_to_json(const Strategy& s);

nlohmann::ordered_json region_pieces_to_json(const Region& r);
Region region_pieces_from_json(const nlohmann::json& j, const VarSpacePtr& space);

}  // namespace ssyn::cli
