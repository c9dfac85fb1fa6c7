#include <doctest.h>

#include "oracle/interval_oracle.hpp"
#include "oracle/straightline_oracle.hpp"
#include "support/rand1d.hpp"
#include "support/testkit.hpp"

using namespace oracle;
using testkit::rat;

namespace {
Interval iv(long lo, long hi, bool lo_open = false, bool hi_open = false) {
    return {rat(lo), rat(hi), lo_open, hi_open};
}
}  // namespace

TEST_CASE("interval set algebra") {
    // [1,2) and [2,3] merge; (1,2) and (2,3) do not.
    auto merged = normalize({iv(1, 2, false, true), iv(2, 3)});
    REQUIRE(merged.size() == 1);
    CHECK(member(merged, rat(2)));
    auto gap = normalize({iv(1, 2, true, true), iv(2, 3, true, true)});
    CHECK(gap.size() == 2);
    CHECK_FALSE(member(gap, rat(2)));

    auto comp = complement_set({iv(0, 1)});
    CHECK(member(comp, rat(-1)));
    CHECK(member(comp, rat(2)));
    CHECK_FALSE(member(comp, rat(0)));
    CHECK_FALSE(member(comp, rat(1)));
    CHECK(complement_set(complement_set({iv(0, 1)})) == IntervalSet{iv(0, 1)});

    auto inter = intersect_sets({iv(0, 2)}, {iv(1, 3, true, false)});
    REQUIRE(inter.size() == 1);
    CHECK_FALSE(member(inter, rat(1)));
    CHECK(member(inter, rat(2)));
}

TEST_CASE("may oracle: unit flow around an avoid set") {
    // F = [1,1], U = [2,3], V = [1, 1.5): result [1.5, 3].
    auto res = rwa_may_1d(rat(1), rat(1), {iv(2, 3)}, {{rat(1), rat(3, 2), false, true}});
    REQUIRE(res.size() == 1);
    CHECK(member(res, rat(3, 2)));
    CHECK(member(res, rat(3)));
    CHECK_FALSE(member(res, rat(1)));
    CHECK_FALSE(member(res, rat(7, 2)));
    CHECK_FALSE(member(res, rat(149, 100)));
}

TEST_CASE("must oracle: strictly rightward flow") {
    // F = [1,2], U = [2,3], V = empty: (-inf, 3].
    auto res = rwa_must_1d(rat(1), rat(2), {iv(2, 3)}, {});
    REQUIRE(res.size() == 1);
    CHECK(member(res, rat(-100)));
    CHECK(member(res, rat(3)));
    CHECK_FALSE(member(res, rat(4)));

    // V = {1}: (1, 3].
    auto res2 = rwa_must_1d(rat(1), rat(2), {iv(2, 3)}, {iv(1, 1)});
    CHECK_FALSE(member(res2, rat(1)));
    CHECK_FALSE(member(res2, rat(0)));
    CHECK(member(res2, rat(2)));
    CHECK(member(res2, rat(11, 10)));
}

TEST_CASE("may oracle: bidirectional flow reaches any point") {
    auto res = rwa_may_1d(rat(-1), rat(1), {iv(5, 5)}, {});
    CHECK(member(res, rat(-1000)));
    CHECK(member(res, rat(1000)));
}

TEST_CASE("must oracle: flow that can stall wins nothing beyond U minus V") {
    auto res = rwa_must_1d(rat(0), rat(2), {iv(2, 3)}, {iv(3, 3)});
    REQUIRE(res.size() == 1);
    CHECK(member(res, rat(2)));
    CHECK_FALSE(member(res, rat(3)));
    CHECK_FALSE(member(res, rat(1)));
}

TEST_CASE("straightline oracle examples") {
    auto sp = testkit::space({"x"});
    auto flow = testkit::flow_interval(rat(1), rat(1));
    ssyn::Region u(testkit::interval(sp, rat(2), rat(3)));
    GridSpec grid{{rat(-1)}, {rat(4)}, rat(1, 4), 2, 100000};

    auto found = straightline_may_oracle(flow, u, ssyn::Region::empty(sp), {rat(0)}, 2, grid);
    CHECK(found.kind == OracleVerdict::Kind::WitnessFound);

    ssyn::Region v(testkit::interval(sp, rat(1), rat(3, 2), false, true));
    auto blocked = straightline_may_oracle(flow, u, v, {rat(0)}, 4, grid);
    CHECK(blocked.kind == OracleVerdict::Kind::NoWitnessInSample);
}

TEST_CASE("straightline oracle on the drift cone") {
    // Flow dx in [-1, 1], dy = 1; barrier y in [5,6], x in [-10, 20].
    auto sp = testkit::space({"x", "y"});
    auto dsp = ssyn::VarSpace::dotted({"x", "y"});
    auto flow = testkit::poly(
        dsp, {testkit::cons({rat(1), rat(0)}, ssyn::Rel::Ge, rat(-1)),
              testkit::cons({rat(-1), rat(0)}, ssyn::Rel::Ge, rat(-1)),
              testkit::cons({rat(0), rat(1)}, ssyn::Rel::Eq, rat(1))});
    ssyn::Region u(testkit::box(sp, {{rat(-20), rat(20)}, {rat(10), rat(11)}}));
    ssyn::Region v(testkit::box(sp, {{rat(-10), rat(20)}, {rat(5), rat(6)}}));
    GridSpec grid{{rat(-16), rat(-1)}, {rat(16), rat(12)}, rat(1, 2), 2, 400000};

    auto trapped = straightline_may_oracle(flow, u, v, {rat(5), rat(0)}, 4, grid);
    CHECK(trapped.kind == OracleVerdict::Kind::NoWitnessInSample);

    auto free_col = straightline_may_oracle(flow, u, v, {rat(-15), rat(0)}, 4, grid);
    CHECK(free_col.kind == OracleVerdict::Kind::WitnessFound);
}
