#pragma once

#include <random>

#include "oracle/interval_oracle.hpp"
#include "ssyn/region.hpp"

namespace testkit {

// Randomized 1-D reach-while-avoid instances shared by the unit and
// acceptance property suites. Deterministic for a fixed seed.
struct Instance1D {
    ssyn::Rational a, b;  // flow interval [a, b], a <= b
    oracle::IntervalSet u, v;
};

inline ssyn::Rational rand_rat(std::mt19937_64& rng, int lo_quarters, int hi_quarters) {
    std::uniform_int_distribution<int> d(lo_quarters, hi_quarters);
    return ssyn::make_rational(d(rng), 4);
}

inline oracle::IntervalSet rand_interval_set(std::mt19937_64& rng, int max_pieces) {
    std::uniform_int_distribution<int> count(0, max_pieces);
    std::uniform_int_distribution<int> openness(0, 3);
    std::uniform_int_distribution<int> kind(0, 9);
    oracle::IntervalSet out;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        int k = kind(rng);
        oracle::Interval iv;
        if (k == 0) {  // point
            auto p = rand_rat(rng, -24, 24);
            iv = {p, p, false, false};
        } else if (k == 1) {  // unbounded ray
            auto p = rand_rat(rng, -24, 24);
            bool open = openness(rng) & 1;
            if (openness(rng) & 2)
                iv = {p, std::nullopt, open, false};
            else
                iv = {std::nullopt, p, false, open};
        } else {
            auto p = rand_rat(rng, -24, 24);
            auto q = rand_rat(rng, -24, 24);
            if (q < p) std::swap(p, q);
            int o = openness(rng);
            iv = {p, q, (o & 1) != 0, (o & 2) != 0};
        }
        if (!iv.empty()) out.push_back(iv);
    }
    return out;
}

inline Instance1D rand_instance(std::mt19937_64& rng) {
    Instance1D inst;
    // Same sign or spanning zero, in quarter steps within [-2, 2].
    inst.a = rand_rat(rng, -8, 8);
    inst.b = rand_rat(rng, -8, 8);
    if (inst.b < inst.a) std::swap(inst.a, inst.b);
    inst.u = rand_interval_set(rng, 3);
    inst.v = rand_interval_set(rng, 3);
    return inst;
}

inline ssyn::ConvexPoly flow_interval(const ssyn::Rational& a, const ssyn::Rational& b) {
    auto sp = ssyn::VarSpace::dotted({"x"});
    return ssyn::ConvexPoly(
        sp, {ssyn::LinearConstraint({ssyn::Rational(1)}, ssyn::Rel::Ge, a),
             ssyn::LinearConstraint({ssyn::Rational(-1)}, ssyn::Rel::Ge, -b)});
}

}  // namespace testkit
