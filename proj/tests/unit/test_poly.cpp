#include <doctest.h>

#include "support/testkit.hpp"

using namespace testkit;
using ssyn::closure;
using ssyn::eliminate;
using ssyn::intersect;
using ssyn::poly_includes;

TEST_CASE("emptiness with strict constraints") {
    auto sp = space({"x"});
    // {x >= 0, x < 0}
    CHECK(poly(sp, {cons({rat(1)}, Rel::Ge, rat(0)), cons({rat(-1)}, Rel::Gt, rat(0))})
              .is_empty());
    // {x > 0, x < 1}
    CHECK_FALSE(interval(sp, rat(0), rat(1), true, true).is_empty());
}

TEST_CASE("emptiness in two dimensions") {
    auto sp = space({"x", "y"});
    // {x >= 0, y >= 0, x + y < 0}
    CHECK(poly(sp, {cons({rat(1), rat(0)}, Rel::Ge, rat(0)),
                    cons({rat(0), rat(1)}, Rel::Ge, rat(0)),
                    cons({rat(-1), rat(-1)}, Rel::Gt, rat(0))})
              .is_empty());
    CHECK_FALSE(box(sp, {{rat(0), rat(1)}, {rat(0), rat(1)}}).is_empty());
}

TEST_CASE("intersect examples") {
    auto sp = space({"x"});
    auto a = interval(sp, rat(0), rat(2));
    auto b = interval(sp, rat(1), rat(3));
    CHECK(region_equal(Region(intersect(a, b)), Region(interval(sp, rat(1), rat(2)))));

    // [0,1] meets (1,2] is empty: touching open/closed
    CHECK(intersect(interval(sp, rat(0), rat(1)), interval(sp, rat(1), rat(2), true)).is_empty());

    auto h = ray_ge(sp, rat(0));
    CHECK(region_equal(Region(intersect(h, h)), Region(h)));
}

TEST_CASE("closure examples") {
    auto sp = space({"x"});
    auto p = interval(sp, rat(0), rat(1), true, false);  // (0, 1]
    CHECK(region_equal(Region(closure(p)), Region(interval(sp, rat(0), rat(1)))));

    // closure of {x > 0, x < 0} is empty, not {x = 0}
    auto contradictory =
        poly(sp, {cons({rat(1)}, Rel::Gt, rat(0)), cons({rat(-1)}, Rel::Gt, rat(0))});
    CHECK(closure(contradictory).is_empty());

    auto closed = ray_ge(sp, rat(1));
    CHECK(region_equal(Region(closure(closed)), Region(closed)));
}

TEST_CASE("poly inclusion") {
    auto sp = space({"x"});
    CHECK(poly_includes(interval(sp, rat(0), rat(3)), interval(sp, rat(1), rat(2))));
    CHECK_FALSE(poly_includes(interval(sp, rat(1), rat(2)), interval(sp, rat(0), rat(3))));
    CHECK(poly_includes(interval(sp, rat(0), rat(1)), interval(sp, rat(0), rat(1), true, true)));
    CHECK_FALSE(
        poly_includes(interval(sp, rat(0), rat(1), true, true), interval(sp, rat(0), rat(1))));
    CHECK(poly_includes(interval(sp, rat(0), rat(1)), ConvexPoly::empty_poly(sp)));
}

TEST_CASE("eliminate: bound combination") {
    auto sp = space({"x", "d"});
    // {x + d >= 2, d <= 1, d >= 0} projected on x -> {x >= 1}
    auto p = poly(sp, {cons({rat(1), rat(1)}, Rel::Ge, rat(2)),
                       cons({rat(0), rat(-1)}, Rel::Ge, rat(-1)),
                       cons({rat(0), rat(1)}, Rel::Ge, rat(0))});
    auto q = eliminate(p, {1});
    REQUIRE(q.dim() == 1);
    CHECK(region_equal(Region(q), Region(ray_ge(q.space(), rat(1)))));
}

TEST_CASE("eliminate: strictness propagates") {
    auto sp = space({"x", "d"});
    // {x > d, d > 0} -> {x > 0}
    auto p = poly(sp, {cons({rat(1), rat(-1)}, Rel::Gt, rat(0)),
                       cons({rat(0), rat(1)}, Rel::Gt, rat(0))});
    auto q = eliminate(p, {1});
    CHECK(region_equal(Region(q), Region(ray_ge(q.space(), rat(0), true))));
}

TEST_CASE("eliminate: equality substitution") {
    auto sp = space({"x", "y"});
    // {x = y + 1, y >= 0} -> {x >= 1}
    auto p = poly(sp, {cons({rat(1), rat(-1)}, Rel::Eq, rat(1)),
                       cons({rat(0), rat(1)}, Rel::Ge, rat(0))});
    auto q = eliminate(p, {1});
    CHECK(region_equal(Region(q), Region(ray_ge(q.space(), rat(1)))));
}

TEST_CASE("eliminate empty input stays empty") {
    auto sp = space({"x", "y"});
    auto p = poly(sp, {cons({rat(1), rat(0)}, Rel::Gt, rat(0)),
                       cons({rat(-1), rat(0)}, Rel::Gt, rat(0))});
    CHECK(eliminate(p, {1}).is_empty());
}

TEST_CASE("contains") {
    auto sp = space({"x", "y"});
    auto b = box(sp, {{rat(0), rat(2)}, {rat(0), rat(1)}});
    CHECK(b.contains({rat(1), rat(1, 2)}));
    CHECK(b.contains({rat(0), rat(0)}));
    CHECK_FALSE(b.contains({rat(3), rat(0)}));
}
