#include "switchsynth/region_json.hpp"

#include <stdexcept>

namespace ssyn::cli {

namespace {

nlohmann::ordered_json vars_json(const VarSpace& space) {
    nlohmann::ordered_json vars = nlohmann::ordered_json::array();
    for (size_t i = 0; i < space.dim(); ++i) vars.push_back(space.display_name(i));
    return vars;
}

VarSpacePtr space_from_vars(const nlohmann::json& vars) {
    std::vector<std::string> names;
    std::vector<VarKind> kinds;
    for (const auto& v : vars) {
        std::string s = v.get<std::string>();
        if (!s.empty() && s.back() == '\'') {
            names.push_back(s.substr(0, s.size() - 1));
            kinds.push_back(VarKind::Primed);
        } else {
            names.push_back(s);
            kinds.push_back(VarKind::Plain);
        }
    }
    return std::make_shared<VarSpace>(std::move(names), std::move(kinds));
}

Rational rational_from_json(const nlohmann::json& j) {
    auto r = parse_rational(j.get<std::string>());
    if (!r) throw std::runtime_error("region json: bad rational '" + j.get<std::string>() + "'");
    return *r;
}

Rel rel_from_string(const std::string& s) {
    if (s == "==") return Rel::Eq;
    if (s == ">=") return Rel::Ge;
    if (s == ">") return Rel::Gt;
    throw std::runtime_error("region json: bad relation '" + s + "'");
}

}  // namespace

nlohmann::ordered_json region_pieces_to_json(const Region& r) {
    nlohmann::ordered_json pieces = nlohmann::ordered_json::array();
    for (const auto& p : r.pieces()) {
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const auto& c : p.constraints()) {
            nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
            for (const auto& a : c.coeffs()) coeffs.push_back(a.get_str());
            cs.push_back({{"coeffs", coeffs},
                          {"rel", rel_to_string(c.rel())},
                          {"const", c.rhs().get_str()}});
        }
        pieces.push_back({{"constraints", cs}});
    }
    return pieces;
}

Region region_pieces_from_json(const nlohmann::json& j, const VarSpacePtr& space) {
    std::vector<ConvexPoly> pieces;
    for (const auto& pj : j) {
        std::vector<LinearConstraint> cs;
        for (const auto& cj : pj.at("constraints")) {
            std::vector<Rational> coeffs;
            for (const auto& a : cj.at("coeffs")) coeffs.push_back(rational_from_json(a));
            if (coeffs.size() != space->dim())
                throw std::runtime_error("region json: coefficient count mismatch");
            cs.emplace_back(std::move(coeffs), rel_from_string(cj.at("rel").get<std::string>()),
                            rational_from_json(cj.at("const")));
        }
        pieces.emplace_back(space, std::move(cs));
    }
    return Region(space, std::move(pieces));
}

nlohmann::ordered_json state_set_to_json(const SymStateSet& s) {
    nlohmann::ordered_json j;
    j["vars"] = vars_json(*s.space());
    nlohmann::ordered_json locs = nlohmann::ordered_json::object();
    for (const auto& [name, region] : s.entries())
        locs[name] = region_pieces_to_json(region);
    j["locations"] = locs;
    return j;
}

LoadedStateSet state_set_from_json(const nlohmann::json& j) {
    LoadedStateSet out;
    out.space = space_from_vars(j.at("vars"));
    for (const auto& [name, pieces] : j.at("locations").items())
        out.locations.emplace(name, region_pieces_from_json(pieces, out.space));
    return out;
}

nlohmann::ordered_json strategy_to_json(const Strategy& s) {
    nlohmann::ordered_json j;
    j["vars"] = vars_json(*s.winning.space());
    nlohmann::ordered_json locs = nlohmann::ordered_json::object();
    for (const auto& [name, region] : s.winning.entries())
        locs[name] = region_pieces_to_json(region);
    j["winning"] = locs;
    nlohmann::ordered_json permits = nlohmann::ordered_json::array();
    for (const auto& p : s.permits) {
        permits.push_back({{"transition", p.transition},
                           {"source", p.source},
                           {"target", p.target},
                           {"region", region_pieces_to_json(p.region)}});
    }
    j["permits"] = permits;
    return j;
}

}  // namespace ssyn::cli
