#include "ssyn/tnc.hpp"

#include <stdexcept>

namespace ssyn {

namespace {

std::string flow_term(const std::string& dv, int dir, const std::optional<Rational>& eps) {
    if (!eps) return dv + " == " + std::to_string(dir);
    Rational lo = Rational(dir) - *eps;
    Rational hi = Rational(dir) + *eps;
    return dv + " >= " + lo.get_str() + " & " + dv + " <= " + hi.get_str();
}

}  // namespace

std::string gen_tnc(int n_pits, const std::optional<Rational>& nondet_eps) {
    if (n_pits < 1) throw std::invalid_argument("gen_tnc: need at least one pit");

    struct Dir {
        const char* name;
        int dx, dy;
    };
    const Dir dirs[4] = {{"NE", 1, 1}, {"NW", -1, 1}, {"SE", 1, -1}, {"SW", -1, -1}};
    // Counterclockwise and clockwise successors of each direction.
    auto rot_left = [](const Dir& d) { return Dir{nullptr, -d.dy, d.dx}; };
    auto rot_right = [](const Dir& d) { return Dir{nullptr, d.dy, -d.dx}; };
    auto name_of = [&](int dx, int dy) -> const char* {
        for (const auto& d : dirs)
            if (d.dx == dx && d.dy == dy) return d.name;
        return "?";
    };

    std::string out;
    out += "# Truck navigation control with " + std::to_string(n_pits) + " pit(s).\n";
    out += "var x, y, t;\n\n";
    for (const auto& d : dirs) {
        out += "location " + std::string(d.name) + " { inv: true; flow: " +
               flow_term("dx", d.dx, nondet_eps) + " & " + flow_term("dy", d.dy, nondet_eps) +
               " & dt == 1; }\n";
    }
    out += "\n";
    for (const auto& d : dirs) {
        Dir l = rot_left(d), r = rot_right(d);
        out += "trans turnL_" + std::string(d.name) + ": " + d.name + " -> " +
               name_of(l.dx, l.dy) +
               " { guard: t >= 1; update: t' == 0 & keep(x, y); kind: controllable; }\n";
        out += "trans turnR_" + std::string(d.name) + ": " + d.name + " -> " +
               name_of(r.dx, r.dy) +
               " { guard: t >= 1; update: t' == 0 & keep(x, y); kind: controllable; }\n";
    }
    out += "\ninit: SW { x == 0 & y == 3 & t == 0 };\n\n";
    out += "spec safe { * : !(";
    for (int k = 1; k <= n_pits; ++k) {
        if (k > 1) out += " | ";
        int x0 = 2 * (k - 1), x1 = 2 * k, y0 = 1 - k, y1 = 2 - k;
        out += "(" + std::to_string(x0) + " <= x & x <= " + std::to_string(x1) + " & " +
               std::to_string(y0) + " <= y & y <= " + std::to_string(y1) + ")";
    }
    out += "); }\n";
    return out;
}

}  // namespace ssyn
