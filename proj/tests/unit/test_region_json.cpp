#include <doctest.h>

#include "ssyn/parser.hpp"
#include "ssyn/tnc.hpp"
#include "switchsynth/region_json.hpp"
#include "switchsynth/svg.hpp"
#include "support/testkit.hpp"

using namespace testkit;
using namespace ssyn;
using namespace ssyn::cli;

TEST_CASE("state set JSON round-trips semantically") {
    auto sp = space({"x", "y"});
    HybridAutomaton h;  // only used for algebra helpers below
    SymStateSet s(sp);
    s.set("a", region({box(sp, {{rat(0), rat(1)}, {rat(-1, 2), rat(3)}}),
                       poly(sp, {cons({rat(1), rat(1)}, Rel::Gt, rat(7, 2))})}));
    s.set("b", Region::universe(sp));

    auto j = state_set_to_json(s);
    auto back = state_set_from_json(nlohmann::json::parse(j.dump()));
    REQUIRE(back.locations.size() == 2);
    CHECK(region_equal(back.locations.at("a"), s.at("a")));
    CHECK(region_equal(back.locations.at("b"), s.at("b")));

    // Byte-identical across serializations.
    CHECK(j.dump(2) == state_set_to_json(s).dump(2));
}

TEST_CASE("strategy JSON has winning region and permits") {
    ParsedModel pm = parse_model(R"(
var x;
location run    { inv: true; flow: dx == 1; }
location frozen { inv: true; flow: dx == 0; }
trans freeze: run -> frozen { guard: true; update: keep(x); kind: controllable; }
init: run { x == 0 };
spec safe { * : x <= 3; }
)");
    auto res = safety_region(pm.automaton, pm.spec->states, {});
    Strategy s = extract_strategy(pm.automaton, res.winning);
    auto j = strategy_to_json(s);
    CHECK(j.contains("winning"));
    REQUIRE(j.at("permits").size() == 1);
    CHECK(j.at("permits")[0].at("transition") == "freeze");

    Region got = region_pieces_from_json(j.at("permits")[0].at("region"), pm.automaton.space_x);
    CHECK(region_equal(got, s.permits[0].region));
}

TEST_CASE("svg renders a unit square as one polygon") {
    auto sp = space({"x", "y"});
    PlotSpec spec;
    spec.var_x = "x";
    spec.var_y = "y";
    spec.xmin = rat(-1);
    spec.xmax = rat(2);
    spec.ymin = rat(-1);
    spec.ymax = rat(2);
    Region square(box(sp, {{rat(0), rat(1)}, {rat(0), rat(1)}}));
    std::string svg = render_svg({{"only", {{square, "#cccccc"}}}}, spec);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    // Four real edges, none from box clipping.
    size_t lines = 0;
    for (size_t pos = 0; (pos = svg.find("<line", pos)) != std::string::npos; ++pos) ++lines;
    CHECK(lines >= 4);

    std::string empty_svg = render_svg({{"only", {}}}, spec);
    CHECK(empty_svg.find("<polygon") == std::string::npos);
    CHECK(empty_svg.find("<rect") != std::string::npos);  // frame still drawn
}

TEST_CASE("svg cross-section fixes variables") {
    ParsedModel pm = parse_model(gen_tnc(1));
    PlotSpec spec;
    spec.var_x = "x";
    spec.var_y = "y";
    spec.fixes["t"] = rat(0);
    spec.xmin = rat(-1);
    spec.xmax = rat(6);
    spec.ymin = rat(-2);
    spec.ymax = rat(4);
    Region pit_region = region_complement(pm.spec->states.at("SW"));
    auto plane = VarSpace::plain({"px", "py"});
    Region flat = section_to_plane(pit_region, spec, plane);
    CHECK(flat.contains({rat(1), rat(1, 2)}));
    CHECK_FALSE(flat.contains({rat(-1), rat(0)}));

    PlotSpec missing = spec;
    missing.fixes.clear();
    CHECK_THROWS(section_to_plane(pit_region, missing, plane));
}
