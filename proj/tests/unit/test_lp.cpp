#include <doctest.h>

#include "ssyn/lp.hpp"

using namespace ssyn;

namespace {
LpRow row(std::vector<long> a, long b) {
    LpRow r;
    for (long v : a) r.a.push_back(make_rational(v));
    r.b = make_rational(b);
    return r;
}
}  // namespace

TEST_CASE("bounded maximum with free variables") {
    // max x + y  s.t.  x <= 3, y <= 2, x + y <= 4
    auto res = lp_maximize({row({1, 0}, 3), row({0, 1}, 2), row({1, 1}, 4)},
                           {make_rational(1), make_rational(1)});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.value == 4);
    CHECK(res.point[0] + res.point[1] == 4);
}

TEST_CASE("infeasible system") {
    // x <= 0 and -x <= -1
    auto res = lp_maximize({row({1}, 0), row({-1}, -1)}, {make_rational(0)});
    CHECK(res.status == LpStatus::Infeasible);
}

TEST_CASE("unbounded objective") {
    auto res = lp_maximize({row({-1}, 0)}, {make_rational(1)});  // x >= 0, max x
    CHECK(res.status == LpStatus::Unbounded);
}

TEST_CASE("no constraints") {
    CHECK(lp_maximize({}, {make_rational(1)}).status == LpStatus::Unbounded);
    auto zero = lp_maximize({}, {make_rational(0)});
    REQUIRE(zero.status == LpStatus::Optimal);
    CHECK(zero.value == 0);
}

TEST_CASE("negative optimum reached exactly") {
    // max x s.t. x <= -5/3
    auto res = lp_maximize({row({3}, -5)}, {make_rational(1)});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.value == make_rational(-5, 3));
    CHECK(res.point[0] == make_rational(-5, 3));
}

TEST_CASE("equalities via opposing rows") {
    // x + y = 2 (two rows), max x - y s.t. x <= 5
    auto res = lp_maximize({row({1, 1}, 2), row({-1, -1}, -2), row({1, 0}, 5)},
                           {make_rational(1), make_rational(-1)});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.value == 8);  // x = 5, y = -3
}

TEST_CASE("degenerate feasibility") {
    // x <= 0, -x <= 0 forces x = 0.
    auto res = lp_maximize({row({1}, 0), row({-1}, 0)}, {make_rational(1)});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.value == 0);
}
