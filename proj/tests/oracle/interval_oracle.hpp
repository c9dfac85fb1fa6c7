#pragma once

#include <optional>
#include <vector>

#include "ssyn/region.hpp"

// Exact 1-D reach-while-avoid oracle, written independently of the
// polyhedral kernel (it only shares the Rational type). Sets are unions
// of rational intervals; flows are closed bounded intervals [a, b] of
// admissible derivatives. Used by property tests as a cross
// implementation for rwa_may / rwa_must.
namespace oracle {

using ssyn::Rational;

struct Interval {
    std::optional<Rational> lo;  // nullopt = -infinity
    std::optional<Rational> hi;  // nullopt = +infinity
    bool lo_open = false;
    bool hi_open = false;

    bool empty() const {
        if (!lo || !hi) return false;
        if (*lo > *hi) return true;
        return *lo == *hi && (lo_open || hi_open);
    }
    bool contains(const Rational& x) const;

    bool operator==(const Interval& o) const {
        return lo == o.lo && hi == o.hi && lo_open == o.lo_open && hi_open == o.hi_open;
    }
};

using IntervalSet = std::vector<Interval>;

// Sorted, disjoint, maximal (adjacent touching intervals merged).
IntervalSet normalize(IntervalSet s);
IntervalSet complement_set(const IntervalSet& s);
IntervalSet intersect_sets(const IntervalSet& a, const IntervalSet& b);
IntervalSet union_sets(const IntervalSet& a, const IntervalSet& b);
bool member(const IntervalSet& s, const Rational& x);

// May semantics: some activity with derivative always in [a, b] reaches u
// at time delta with every strictly earlier point in comp(v) union u.
IntervalSet rwa_may_1d(const Rational& a, const Rational& b, const IntervalSet& u,
                       const IntervalSet& v);

// Must semantics: every such activity reaches u at some delta with v
// avoided on the whole closed prefix [0, delta].
IntervalSet rwa_must_1d(const Rational& a, const Rational& b, const IntervalSet& u,
                        const IntervalSet& v);

// Conversions for comparing against the engine (construction only; the
// oracle never reads engine regions).
ssyn::Region to_region(const IntervalSet& s, const ssyn::VarSpacePtr& space);

}  // namespace oracle
