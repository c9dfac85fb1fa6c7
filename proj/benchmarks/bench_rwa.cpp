#include <benchmark/benchmark.h>

#include "ssyn/rwa.hpp"

namespace {

using namespace ssyn;

void bm_rwa_may_1d(benchmark::State& state) {
    auto sp = VarSpace::plain({"x"});
    auto dsp = VarSpace::dotted({"x"});
    ConvexPoly flow(dsp, {LinearConstraint({Rational(1)}, Rel::Ge, Rational(1)),
                          LinearConstraint({Rational(-1)}, Rel::Ge, Rational(-2))});
    auto iv = [&](long lo, long hi) {
        return ConvexPoly(sp, {LinearConstraint({Rational(1)}, Rel::Ge, Rational(lo)),
                               LinearConstraint({Rational(-1)}, Rel::Ge, Rational(-hi))});
    };
    Region u(sp, {iv(8, 9)});
    Region v(sp, {iv(2, 3), iv(5, 6)});
    for (auto _ : state) benchmark::DoNotOptimize(rwa_may(flow, u, v));
}
BENCHMARK(bm_rwa_may_1d);

void bm_rwa_must_1d(benchmark::State& state) {
    auto sp = VarSpace::plain({"x"});
    auto dsp = VarSpace::dotted({"x"});
    ConvexPoly flow(dsp, {LinearConstraint({Rational(1)}, Rel::Ge, Rational(1)),
                          LinearConstraint({Rational(-1)}, Rel::Ge, Rational(-2))});
    auto iv = [&](long lo, long hi) {
        return ConvexPoly(sp, {LinearConstraint({Rational(1)}, Rel::Ge, Rational(lo)),
                               LinearConstraint({Rational(-1)}, Rel::Ge, Rational(-hi))});
    };
    Region u(sp, {iv(8, 9)});
    Region v(sp, {iv(2, 3)});
    for (auto _ : state) benchmark::DoNotOptimize(rwa_must(flow, u, v));
}
BENCHMARK(bm_rwa_must_1d);

void bm_rwa_may_cone(benchmark::State& state) {
    auto sp = VarSpace::plain({"x", "y"});
    auto dsp = VarSpace::dotted({"x", "y"});
    ConvexPoly flow(dsp,
                    {LinearConstraint({Rational(1), Rational(0)}, Rel::Ge, Rational(-1)),
                     LinearConstraint({Rational(-1), Rational(0)}, Rel::Ge, Rational(-1)),
                     LinearConstraint({Rational(0), Rational(1)}, Rel::Eq, Rational(1))});
    auto bx = [&](long x0, long x1, long y0, long y1) {
        return ConvexPoly(sp,
                          {LinearConstraint({Rational(1), Rational(0)}, Rel::Ge, Rational(x0)),
                           LinearConstraint({Rational(-1), Rational(0)}, Rel::Ge, Rational(-x1)),
                           LinearConstraint({Rational(0), Rational(1)}, Rel::Ge, Rational(y0)),
                           LinearConstraint({Rational(0), Rational(-1)}, Rel::Ge, Rational(-y1))});
    };
    Region u(sp, {bx(-20, 20, 10, 11)});
    Region v(sp, {bx(-10, 5, 5, 6), bx(5, 20, 5, 6)});
    for (auto _ : state) benchmark::DoNotOptimize(rwa_may(flow, u, v));
}
BENCHMARK(bm_rwa_may_cone);

}  // namespace
