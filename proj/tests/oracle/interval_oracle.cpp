#include "oracle/interval_oracle.hpp"

#include <algorithm>

namespace oracle {

bool Interval::contains(const Rational& x) const {
    if (lo) {
        if (x < *lo) return false;
        if (x == *lo && lo_open) return false;
    }
    if (hi) {
        if (x > *hi) return false;
        if (x == *hi && hi_open) return false;
    }
    return true;
}

namespace {

// Orders by lower endpoint; -infinity first, closed before open at ties.
bool lo_less(const Interval& x, const Interval& y) {
    if (!x.lo && !y.lo) return false;
    if (!x.lo) return true;
    if (!y.lo) return false;
    if (*x.lo != *y.lo) return *x.lo < *y.lo;
    return !x.lo_open && y.lo_open;
}

// True when x and y (x first by lo_less) overlap or touch.
bool connects(const Interval& x, const Interval& y) {
    if (!x.hi) return true;
    if (!y.lo) return true;
    if (*y.lo < *x.hi) return true;
    if (*y.lo > *x.hi) return false;
    return !(x.hi_open && y.lo_open);
}

// Larger upper endpoint; at ties, closed beats open.
bool hi_less(const Interval& x, const Interval& y) {
    if (!y.hi) return x.hi.has_value();
    if (!x.hi) return false;
    if (*x.hi != *y.hi) return *x.hi < *y.hi;
    return x.hi_open && !y.hi_open;
}

}  // namespace

IntervalSet normalize(IntervalSet s) {
    IntervalSet in;
    for (auto& i : s)
        if (!i.empty()) in.push_back(i);
    std::sort(in.begin(), in.end(), lo_less);
    IntervalSet out;
    for (auto& i : in) {
        if (!out.empty() && connects(out.back(), i)) {
            if (hi_less(out.back(), i)) {
                out.back().hi = i.hi;
                out.back().hi_open = i.hi_open;
            }
        } else {
            out.push_back(i);
        }
    }
    return out;
}

IntervalSet complement_set(const IntervalSet& s) {
    IntervalSet norm = normalize(s);
    IntervalSet out;
    std::optional<Rational> cur;
    bool cur_open = false;  // openness of the gap's lower end
    for (const auto& i : norm) {
        Interval gap;
        gap.lo = cur;
        gap.lo_open = cur_open;
        gap.hi = i.lo;
        gap.hi_open = !i.lo_open;
        if (!i.lo) {
            // Interval starts at -infinity: no gap before it.
        } else if (!gap.empty()) {
            out.push_back(gap);
        }
        cur = i.hi;
        cur_open = !i.hi_open;
        if (!i.hi) return normalize(out);  // reaches +infinity
    }
    out.push_back({cur, std::nullopt, cur_open, false});
    return normalize(out);
}

IntervalSet intersect_sets(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            Interval i;
            if (lo_less(x, y)) {
                i.lo = y.lo;
                i.lo_open = y.lo_open;
            } else {
                i.lo = x.lo;
                i.lo_open = x.lo_open;
            }
            if (hi_less(x, y)) {
                i.hi = x.hi;
                i.hi_open = x.hi_open;
            } else {
                i.hi = y.hi;
                i.hi_open = y.hi_open;
            }
            if (!i.empty()) out.push_back(i);
        }
    }
    return normalize(out);
}

IntervalSet union_sets(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet out = a;
    out.insert(out.end(), b.begin(), b.end());
    return normalize(out);
}

bool member(const IntervalSet& s, const Rational& x) {
    for (const auto& i : s)
        if (!i.empty() && i.contains(x)) return true;
    return false;
}

namespace {

// { u in c : u <= sup(targets) } with attainment, for one component c of
// the allowed set; targets is u meet c. Empty when there is no target.
std::optional<Interval> left_closure_within(const Interval& c, const IntervalSet& targets) {
    if (targets.empty()) return std::nullopt;
    const Interval& last = targets.back();
    Interval out = c;
    if (!last.hi) return out;  // targets unbounded above: all of c qualifies
    // sup attained iff the endpoint is closed.
    if (!out.hi || *last.hi < *out.hi || (*last.hi == *out.hi && out.hi_open)) {
        out.hi = last.hi;
        out.hi_open = last.hi_open;
    }
    return out.empty() ? std::nullopt : std::make_optional(out);
}

std::optional<Interval> right_closure_within(const Interval& c, const IntervalSet& targets) {
    if (targets.empty()) return std::nullopt;
    const Interval& first = targets.front();
    Interval out = c;
    if (!first.lo) return out;
    if (!out.lo || *first.lo > *out.lo || (*first.lo == *out.lo && out.lo_open)) {
        out.lo = first.lo;
        out.lo_open = first.lo_open;
    }
    return out.empty() ? std::nullopt : std::make_optional(out);
}

// Shared sweep for both semantics: within each component of `allowed`,
// points left (resp. right) of some target when rightward (resp.
// leftward) motion is possible.
IntervalSet directional_reach(const Rational& a, const Rational& b, const IntervalSet& u,
                              const IntervalSet& allowed) {
    IntervalSet res;
    for (const auto& c : allowed) {
        IntervalSet targets = intersect_sets(u, {c});
        if (b > 0) {
            if (auto i = left_closure_within(c, targets)) res.push_back(*i);
        }
        if (a < 0) {
            if (auto i = right_closure_within(c, targets)) res.push_back(*i);
        }
    }
    return res;
}

}  // namespace

IntervalSet rwa_may_1d(const Rational& a, const Rational& b, const IntervalSet& u,
                       const IntervalSet& v) {
    // Strictly-before avoidance: the journey must stay in comp(v) union u,
    // the arrival point only needs to be in u.
    IntervalSet allowed = normalize(union_sets(complement_set(v), u));
    IntervalSet res = normalize(u);  // delta = 0
    IntervalSet swept = directional_reach(a, b, u, allowed);
    return union_sets(res, swept);
}

IntervalSet rwa_must_1d(const Rational& a, const Rational& b, const IntervalSet& u,
                        const IntervalSet& v) {
    IntervalSet u_minus_v = intersect_sets(normalize(u), complement_set(v));
    if (a <= 0 && 0 <= b) {
        // The environment can stand still forever: only immediate wins.
        return u_minus_v;
    }
    // Strictly one-directional: every activity visits the same ray in the
    // same order, so must and may coincide with closed avoidance.
    IntervalSet allowed = complement_set(v);
    return normalize(directional_reach(a, b, intersect_sets(u, allowed), allowed));
}

ssyn::Region to_region(const IntervalSet& s, const ssyn::VarSpacePtr& space) {
    using ssyn::LinearConstraint;
    using ssyn::Rel;
    std::vector<ssyn::ConvexPoly> pieces;
    for (const auto& i : s) {
        if (i.empty()) continue;
        std::vector<LinearConstraint> cs;
        if (i.lo)
            cs.emplace_back(std::vector<Rational>{Rational(1)}, i.lo_open ? Rel::Gt : Rel::Ge,
                            *i.lo);
        if (i.hi)
            cs.emplace_back(std::vector<Rational>{Rational(-1)}, i.hi_open ? Rel::Gt : Rel::Ge,
                            -*i.hi);
        pieces.emplace_back(space, std::move(cs));
    }
    return ssyn::Region(space, std::move(pieces));
}

}  // namespace oracle
