#include <doctest.h>

#include "ssyn/flow_ops.hpp"
#include "support/testkit.hpp"

using namespace testkit;
using namespace ssyn;

namespace {

const auto x1 = space({"x"});
const auto d1 = VarSpace::dotted({"x"});
const auto x2 = space({"x", "y"});
const auto d2 = VarSpace::dotted({"x", "y"});

ConvexPoly flow1(const Rational& lo, const Rational& hi) {
    return poly(d1, {cons({rat(1)}, Rel::Ge, lo), cons({rat(-1)}, Rel::Ge, -hi)});
}

}  // namespace

TEST_CASE("preflow of an interval under unit flow is a backward ray") {
    Region r = preflow(interval(x1, rat(2), rat(3)), flow1(rat(1), rat(1)));
    CHECK(region_equal(r, Region(ray_le(x1, rat(3)))));
}

TEST_CASE("preflow of the unit square under diagonal flow") {
    auto p = box(x2, {{rat(0), rat(1)}, {rat(0), rat(1)}});
    auto f = poly(d2, {cons({rat(1), rat(0)}, Rel::Eq, rat(1)),
                       cons({rat(0), rat(1)}, Rel::Eq, rat(1))});
    Region r = preflow(p, f);
    // Closed form: x <= 1, y <= 1, x - y <= 1, y - x <= 1.
    auto expect = poly(x2, {cons({rat(-1), rat(0)}, Rel::Ge, rat(-1)),
                            cons({rat(0), rat(-1)}, Rel::Ge, rat(-1)),
                            cons({rat(-1), rat(1)}, Rel::Ge, rat(-1)),
                            cons({rat(1), rat(-1)}, Rel::Ge, rat(-1))});
    CHECK(region_equal(r, Region(expect)));

    // Cross-check by sampling delta and the (single) flow direction.
    for (long xi = -3; xi <= 2; ++xi) {
        for (long yi = -3; yi <= 2; ++yi) {
            bool inside = false;
            for (long num = 0; num <= 16 && !inside; ++num) {
                Rational delta = rat(num, 4);
                inside = p.contains({rat(xi) + delta, rat(yi) + delta});
            }
            CHECK(r.contains({rat(xi), rat(yi)}) == inside);
        }
    }
}

TEST_CASE("preflow reaches an open target from everywhere under positive flow") {
    Region r = preflow(ray_ge(x1, rat(2), true), flow1(rat(1), rat(2)));
    CHECK(region_equal(r, Region::universe(x1)));
}

TEST_CASE("positive preflow examples") {
    // (3, inf) under [1,2]: whole line.
    CHECK(region_equal(Region(pospref(ray_ge(x1, rat(3), true), flow1(rat(1), rat(2)))),
                       Region::universe(x1)));
    // {x = 0} under unit flow: strictly before.
    CHECK(region_equal(Region(pospref(point1d(x1, rat(0)), flow1(rat(1), rat(1)))),
                       Region(ray_le(x1, rat(0), true))));
    // Zero flow moves nothing.
    CHECK(region_equal(Region(pospref(interval(x1, rat(0), rat(1)), flow1(rat(0), rat(0)))),
                       Region(interval(x1, rat(0), rat(1)))));
}

TEST_CASE("preflow monotone and idempotent") {
    auto f = flow1(rat(1), rat(2));
    auto small = interval(x1, rat(2), rat(3));
    auto large = interval(x1, rat(1), rat(4));
    Region ps = preflow(small, f);
    Region pl = preflow(large, f);
    CHECK(region_includes(pl, ps));
    CHECK(region_equal(preflow_region(ps, f), ps));
}

TEST_CASE("boundary examples") {
    Region g(ray_le(x1, rat(0), true));   // x < 0
    Region g2(ray_ge(x1, rat(0)));        // x >= 0
    CHECK(region_equal(boundary(g, g2), Region(point1d(x1, rat(0)))));

    CHECK(boundary(Region(interval(x1, rat(0), rat(1))), Region(interval(x1, rat(2), rat(3))))
              .is_empty());

    // cl([0,1]) meets (1,2] empty; [0,1] meets cl((1,2]) is {1}.
    CHECK(region_equal(boundary(Region(interval(x1, rat(0), rat(1))),
                                Region(interval(x1, rat(1), rat(2), true, false))),
                       Region(point1d(x1, rat(1)))));
}

TEST_CASE("recession cone examples") {
    // (-inf, 2): cone {c <= 0}
    CHECK(region_equal(Region(recession_cone(ray_le(x1, rat(2), true))),
                       Region(ray_le(x1, rat(0)))));
    // Bounded box: {0}
    auto b = box(x2, {{rat(0), rat(1)}, {rat(0), rat(1)}});
    auto cone = recession_cone(b);
    auto origin = poly(x2, {cons({rat(1), rat(0)}, Rel::Eq, rat(0)),
                            cons({rat(0), rat(1)}, Rel::Eq, rat(0))});
    CHECK(region_equal(Region(cone), Region(origin)));
    // {x > 0, y >= x}: constants dropped, strictness relaxed.
    auto p = poly(x2, {cons({rat(1), rat(0)}, Rel::Gt, rat(0)),
                       cons({rat(-1), rat(1)}, Rel::Ge, rat(0))});
    auto expect = poly(x2, {cons({rat(1), rat(0)}, Rel::Ge, rat(0)),
                            cons({rat(-1), rat(1)}, Rel::Ge, rat(0))});
    CHECK(region_equal(Region(recession_cone(p)), Region(expect)));
    CHECK_THROWS(recession_cone(ConvexPoly::empty_poly(x1)));
}

TEST_CASE("bounded w.r.t. flow") {
    CHECK(is_bounded_wrt(ray_le(x1, rat(2), true), flow1(rat(1), rat(2))));
    CHECK_FALSE(is_bounded_wrt(ray_ge(x1, rat(3), true), flow1(rat(1), rat(2))));
    // 0 in cl(F): nothing is bounded.
    CHECK_FALSE(is_bounded_wrt(interval(x1, rat(0), rat(1)), flow1(rat(0), rat(1))));
    CHECK_FALSE(is_bounded_wrt(point1d(x1, rat(0)), flow1(rat(-1), rat(1))));
}

TEST_CASE("thin w.r.t. flow") {
    CHECK(is_thin_wrt(point1d(x1, rat(0)), flow1(rat(1), rat(1))));
    CHECK_FALSE(is_thin_wrt(interval(x1, rat(0), rat(1)), flow1(rat(1), rat(1))));
    // Diagonal line slides along the diagonal flow.
    auto line = poly(x2, {cons({rat(1), rat(-1)}, Rel::Eq, rat(0))});
    auto f = poly(d2, {cons({rat(1), rat(0)}, Rel::Eq, rat(1)),
                       cons({rat(0), rat(1)}, Rel::Eq, rat(1))});
    CHECK_FALSE(is_thin_wrt(line, f));
}

TEST_CASE("empty flow is rejected") {
    auto empty_flow = poly(d1, {cons({rat(1)}, Rel::Eq, rat(1)), cons({rat(1)}, Rel::Eq, rat(2))});
    CHECK_THROWS_AS(preflow(interval(x1, rat(0), rat(1)), empty_flow), std::invalid_argument);
    CHECK_THROWS_AS(pospref(interval(x1, rat(0), rat(1)), empty_flow), std::invalid_argument);
}
