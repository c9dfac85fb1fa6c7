#include "ssyn/model.hpp"

#include <stdexcept>

namespace ssyn {

const Region& SymStateSet::at(const std::string& loc) const {
    auto it = entries_.find(loc);
    if (it != entries_.end()) return it->second;
    static thread_local std::map<const VarSpace*, Region> empties;
    auto [eit, inserted] = empties.try_emplace(space_.get(), Region::empty(space_));
    return eit->second;
}

void SymStateSet::set(const std::string& loc, Region r) {
    if (!same_space(r.space(), space_))
        throw std::invalid_argument("SymStateSet: region space mismatch");
    if (r.is_empty())
        entries_.erase(loc);
    else
        entries_.insert_or_assign(loc, std::move(r));
}

bool SymStateSet::is_empty() const {
    for (const auto& [_, r] : entries_)
        if (!r.is_empty()) return false;
    return true;
}

const Location* HybridAutomaton::find_location(const std::string& name) const {
    for (const auto& l : locations)
        if (l.name == name) return &l;
    return nullptr;
}

std::vector<size_t> HybridAutomaton::primed_indices() const {
    std::vector<size_t> out;
    const size_t n = num_vars();
    for (size_t i = 0; i < n; ++i) out.push_back(n + i);
    return out;
}

Region guard_of(const HybridAutomaton& h, const Transition& t) {
    return region_eliminate(t.jump, h.primed_indices(), h.space_x);
}

std::vector<Diagnostic> validate(const HybridAutomaton& h) {
    std::vector<Diagnostic> out;
    auto error = [&](std::string m) {
        out.push_back({Diagnostic::Severity::Error, std::move(m)});
    };
    auto warning = [&](std::string m) {
        out.push_back({Diagnostic::Severity::Warning, std::move(m)});
    };

    for (const auto& l : h.locations) {
        if (l.flow.is_empty()) error("location '" + l.name + "': empty flow");
    }
    for (const auto& t : h.transitions) {
        if (!h.find_location(t.source))
            error("transition '" + t.name + "': unknown source location '" + t.source + "'");
        if (!h.find_location(t.target))
            error("transition '" + t.name + "': unknown target location '" + t.target + "'");
    }
    for (const auto& [loc, r] : h.init.entries()) {
        const Location* l = h.find_location(loc);
        if (!l) {
            error("init: unknown location '" + loc + "'");
            continue;
        }
        if (!region_includes(l->invariant, r))
            error("init: initial states of '" + loc + "' not contained in the invariant");
    }

    // Dwell-clock pattern: some variable has derivative exactly 1 in every
    // location, is reset to 0 by every transition, and every transition's
    // jump keeps it at least some positive bound.
    if (!h.transitions.empty()) {
        const size_t n = h.num_vars();
        bool found_clock = false;
        for (size_t v = 0; v < n && !found_clock; ++v) {
            bool ok = true;
            {
                std::vector<Rational> a(n, Rational(0));
                a[v] = 1;
                ConvexPoly unit_rate(h.space_dot,
                                     {LinearConstraint(a, Rel::Eq, Rational(1))});
                for (const auto& l : h.locations)
                    if (!poly_includes(unit_rate, l.flow)) {
                        ok = false;
                        break;
                    }
            }
            if (ok) {
                std::vector<Rational> a(h.space_xp->dim(), Rational(0));
                a[n + v] = 1;
                Region reset(ConvexPoly(h.space_xp, {LinearConstraint(a, Rel::Eq, Rational(0))}));
                for (const auto& t : h.transitions)
                    if (!region_includes(reset, t.jump)) {
                        ok = false;
                        break;
                    }
            }
            if (ok) {
                std::vector<Rational> minus_v(h.space_xp->dim(), Rational(0));
                minus_v[v] = -1;
                for (const auto& t : h.transitions) {
                    for (const auto& piece : t.jump.pieces()) {
                        if (piece.is_empty()) continue;
                        LpResult lp = lp_max_over_closure(piece, minus_v);
                        if (lp.status != LpStatus::Optimal || -lp.value <= 0) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
            found_clock = ok;
        }
        if (!found_clock)
            warning("no dwell-time clock pattern detected: Zeno runs may be possible");
    }
    return out;
}

namespace {

std::vector<int> identity_map(size_t n) {
    std::vector<int> m(n);
    for (size_t i = 0; i < n; ++i) m[i] = static_cast<int>(i);
    return m;
}

}  // namespace

HybridAutomaton add_dwell_clock(const HybridAutomaton& h, const std::string& clock_name,
                                const Rational& bound) {
    const size_t n = h.num_vars();
    for (size_t i = 0; i < n; ++i)
        if (h.space_x->name(i) == clock_name)
            throw std::invalid_argument("add_dwell_clock: variable '" + clock_name +
                                        "' already exists");

    std::vector<std::string> names = h.space_x->names();
    names.push_back(clock_name);
    HybridAutomaton out;
    out.space_x = VarSpace::plain(names);
    out.space_xp = VarSpace::plain_primed(names);
    out.space_dot = VarSpace::dotted(names);

    // Old plain index i -> i; old primed index n+i -> (n+1)+i.
    std::vector<int> x_map = identity_map(n);
    std::vector<int> xp_map(2 * n);
    for (size_t i = 0; i < n; ++i) {
        xp_map[i] = static_cast<int>(i);
        xp_map[n + i] = static_cast<int>(n + 1 + i);
    }

    const size_t clock = n;          // plain slot in new spaces
    const size_t clock_p = 2 * n + 1;  // primed slot in new space_xp

    for (const auto& l : h.locations) {
        ConvexPoly f = remap(l.flow, out.space_dot, x_map);
        std::vector<Rational> a(n + 1, Rational(0));
        a[clock] = 1;
        ConvexPoly unit_rate(out.space_dot, {LinearConstraint(a, Rel::Eq, Rational(1))});
        out.locations.push_back({l.name, region_remap(l.invariant, out.space_x, x_map),
                                 intersect(f, unit_rate)});
    }
    for (const auto& t : h.transitions) {
        Region jump = region_remap(t.jump, out.space_xp, xp_map);
        std::vector<LinearConstraint> extra;
        {
            std::vector<Rational> a(2 * (n + 1), Rational(0));
            a[clock] = 1;
            extra.emplace_back(a, Rel::Ge, bound);  // clock >= bound
        }
        {
            std::vector<Rational> a(2 * (n + 1), Rational(0));
            a[clock_p] = 1;
            extra.emplace_back(a, Rel::Eq, Rational(0));  // clock' == 0
        }
        out.transitions.push_back(
            {t.name, t.source, t.target,
             region_intersect(jump, Region(ConvexPoly(out.space_xp, std::move(extra)))),
             t.kind});
    }
    out.init = SymStateSet(out.space_x);
    for (const auto& [loc, r] : h.init.entries())
        out.init.set(loc, region_remap(r, out.space_x, x_map));
    return out;
}

SymStateSet sss_intersect(const HybridAutomaton& h, const SymStateSet& a, const SymStateSet& b) {
    SymStateSet out(h.space_x);
    for (const auto& l : h.locations) out.set(l.name, region_intersect(a.at(l.name), b.at(l.name)));
    return out;
}

SymStateSet sss_union(const HybridAutomaton& h, const SymStateSet& a, const SymStateSet& b) {
    SymStateSet out(h.space_x);
    for (const auto& l : h.locations) out.set(l.name, region_union(a.at(l.name), b.at(l.name)));
    return out;
}

SymStateSet sss_complement(const HybridAutomaton& h, const SymStateSet& a) {
    SymStateSet out(h.space_x);
    for (const auto& l : h.locations) out.set(l.name, region_complement(a.at(l.name)));
    return out;
}

SymStateSet sss_difference(const HybridAutomaton& h, const SymStateSet& a, const SymStateSet& b) {
    SymStateSet out(h.space_x);
    for (const auto& l : h.locations)
        out.set(l.name, region_difference(a.at(l.name), b.at(l.name)));
    return out;
}

SymStateSet sss_intersect_invariants(const HybridAutomaton& h, const SymStateSet& a) {
    SymStateSet out(h.space_x);
    for (const auto& l : h.locations) out.set(l.name, region_intersect(a.at(l.name), l.invariant));
    return out;
}

SymStateSet invariant_states(const HybridAutomaton& h) {
    SymStateSet out(h.space_x);
    for (const auto& l : h.locations) out.set(l.name, l.invariant);
    return out;
}

bool sss_includes(const HybridAutomaton& h, const SymStateSet& a, const SymStateSet& b) {
    for (const auto& l : h.locations)
        if (!region_includes(a.at(l.name), b.at(l.name))) return false;
    return true;
}

bool sss_equal(const HybridAutomaton& h, const SymStateSet& a, const SymStateSet& b) {
    return sss_includes(h, a, b) && sss_includes(h, b, a);
}

}  // namespace ssyn
