#include "ssyn/parser.hpp"

namespace ssyn {

namespace {

std::string coeff_term(const Rational& c, const std::string& var, bool first) {
    std::string out;
    Rational a = c;
    if (first) {
        if (a < 0) {
            out += "-";
            a = -a;
        }
    } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
    }
    if (a != 1) {
        out += a.get_str();
        out += "*";
    }
    out += var;
    return out;
}

}  // namespace

std::string constraint_to_text(const LinearConstraint& c, const VarSpace& space) {
    std::string lhs;
    bool first = true;
    for (size_t i = 0; i < c.dim(); ++i) {
        if (c.coeff(i) == 0) continue;
        lhs += coeff_term(c.coeff(i), space.display_name(i), first);
        first = false;
    }
    if (first) lhs = "0";
    return lhs + " " + rel_to_string(c.rel()) + " " + c.rhs().get_str();
}

std::string region_to_text(const Region& r) {
    if (r.pieces().empty()) return "false";
    std::string out;
    bool multi = r.size() > 1;
    for (size_t k = 0; k < r.size(); ++k) {
        if (k) out += " | ";
        const ConvexPoly& p = r.pieces()[k];
        if (p.constraints().empty()) {
            out += "true";
            continue;
        }
        std::string piece;
        for (size_t i = 0; i < p.constraints().size(); ++i) {
            if (i) piece += " & ";
            piece += constraint_to_text(p.constraints()[i], *r.space());
        }
        if (multi && p.constraints().size() > 1)
            out += "(" + piece + ")";
        else
            out += piece;
    }
    return out;
}

std::string print_model(const HybridAutomaton& h, const std::optional<SpecSet>& spec) {
    std::string out;
    out += "var ";
    for (size_t i = 0; i < h.space_x->dim(); ++i) {
        if (i) out += ", ";
        out += h.space_x->name(i);
    }
    out += ";\n\n";

    for (const auto& l : h.locations) {
        out += "location " + l.name + " {\n";
        out += "  inv: " + region_to_text(l.invariant) + ";\n";
        out += "  flow: " + region_to_text(Region(l.flow)) + ";\n";
        out += "}\n";
    }
    out += "\n";
    for (const auto& t : h.transitions) {
        out += "trans " + t.name + ": " + t.source + " -> " + t.target + " {\n";
        out += "  guard: true;\n";
        out += "  update: " + region_to_text(t.jump) + ";\n";
        out += std::string("  kind: ") +
               (t.kind == TransKind::Controllable ? "controllable" : "uncontrollable") + ";\n";
        out += "}\n";
    }
    out += "\n";
    for (const auto& [loc, r] : h.init.entries())
        out += "init: " + loc + " { " + region_to_text(r) + " };\n";
    if (spec) {
        out += "\nspec ";
        out += spec->kind == SpecSet::Kind::Safe ? "safe" : "target";
        out += " {\n";
        for (const auto& [loc, r] : spec->states.entries())
            out += "  " + loc + " : " + region_to_text(r) + ";\n";
        out += "}\n";
    }
    return out;
}

}  // namespace ssyn
