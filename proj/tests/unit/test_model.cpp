#include <doctest.h>

#include "ssyn/model.hpp"
#include "support/testkit.hpp"

using namespace testkit;
using namespace ssyn;

namespace {

// One location, derivative 1, with a guard-free controllable self-loop.
HybridAutomaton tiny_loop() {
    HybridAutomaton h;
    h.space_x = VarSpace::plain({"x"});
    h.space_xp = VarSpace::plain_primed({"x"});
    h.space_dot = VarSpace::dotted({"x"});
    h.locations.push_back({"l", Region::universe(h.space_x),
                           poly(h.space_dot, {cons({rat(1)}, Rel::Eq, rat(1))})});
    // keep x, no guard
    h.transitions.push_back(
        {"loop", "l", "l",
         Region(poly(h.space_xp, {cons({rat(-1), rat(1)}, Rel::Eq, rat(0))})),
         TransKind::Controllable});
    h.init = SymStateSet(h.space_x);
    h.init.set("l", Region(point1d(h.space_x, rat(0))));
    return h;
}

bool has_warning(const std::vector<Diagnostic>& ds) {
    for (const auto& d : ds)
        if (d.severity == Diagnostic::Severity::Warning) return true;
    return false;
}
bool has_error(const std::vector<Diagnostic>& ds) {
    for (const auto& d : ds)
        if (d.severity == Diagnostic::Severity::Error) return true;
    return false;
}

}  // namespace

TEST_CASE("validate flags a guard-free loop as a Zeno risk") {
    auto h = tiny_loop();
    auto ds = validate(h);
    CHECK_FALSE(has_error(ds));
    CHECK(has_warning(ds));
}

TEST_CASE("add_dwell_clock silences the Zeno warning and strengthens guards") {
    auto h = tiny_loop();
    auto h2 = add_dwell_clock(h, "t", make_rational(1));
    CHECK(h2.locations.size() == h.locations.size());
    CHECK(h2.transitions.size() == h.transitions.size());
    CHECK(h2.num_vars() == 2);

    auto ds = validate(h2);
    CHECK_FALSE(has_error(ds));
    CHECK_FALSE(has_warning(ds));

    // Guard gained t >= 1; update gained t' == 0.
    Region guard = guard_of(h2, h2.transitions[0]);
    Region expect(poly(h2.space_x, {cons({rat(0), rat(1)}, Rel::Ge, rat(1))}));
    CHECK(region_equal(guard, expect));

    // Strictly strengthens: the old guard was everything.
    CHECK_FALSE(region_equal(guard, Region::universe(h2.space_x)));

    CHECK_THROWS_AS(add_dwell_clock(h2, "t", make_rational(1)), std::invalid_argument);
}

TEST_CASE("add_dwell_clock with bound zero keeps the reset but not the wait") {
    auto h = tiny_loop();
    auto h2 = add_dwell_clock(h, "t", make_rational(0));
    Region guard = guard_of(h2, h2.transitions[0]);
    Region expect(poly(h2.space_x, {cons({rat(0), rat(1)}, Rel::Ge, rat(0))}));
    CHECK(region_equal(guard, expect));
    // Still Zeno-risky: zero dwell time.
    CHECK(has_warning(validate(h2)));
}

TEST_CASE("validate rejects initial states outside the invariant") {
    auto h = tiny_loop();
    h.locations[0].invariant = Region(ray_le(h.space_x, rat(1)));
    h.init.set("l", Region(point1d(h.space_x, rat(5))));
    CHECK(has_error(validate(h)));
}

TEST_CASE("validate reports dangling locations and empty flows") {
    auto h = tiny_loop();
    h.transitions[0].target = "nowhere";
    CHECK(has_error(validate(h)));

    auto h2 = tiny_loop();
    h2.locations[0].flow = poly(h2.space_dot, {cons({rat(1)}, Rel::Eq, rat(1)),
                                               cons({rat(1)}, Rel::Eq, rat(2))});
    CHECK(has_error(validate(h2)));
}

TEST_CASE("state set algebra runs over all locations") {
    auto h = tiny_loop();
    SymStateSet a(h.space_x);
    a.set("l", Region(interval(h.space_x, rat(0), rat(2))));
    SymStateSet c = sss_complement(h, a);
    CHECK(region_equal(c.at("l"), region({ray_le(h.space_x, rat(0), true),
                                          ray_ge(h.space_x, rat(2), true)})));
    CHECK(sss_equal(h, sss_complement(h, c), a));
    CHECK(sss_includes(h, invariant_states(h), a));

    SymStateSet empty(h.space_x);
    CHECK(sss_complement(h, empty).at("l").size() == 1);  // whole space
}
