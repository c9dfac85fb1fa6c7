#include <benchmark/benchmark.h>

#include <random>

#include "ssyn/flow_ops.hpp"

namespace {

using namespace ssyn;

ConvexPoly random_box(std::mt19937_64& rng, const VarSpacePtr& sp) {
    std::uniform_int_distribution<int> coord(-8, 8);
    std::vector<LinearConstraint> cs;
    for (size_t i = 0; i < sp->dim(); ++i) {
        int lo = coord(rng), hi = coord(rng);
        if (hi < lo) std::swap(lo, hi);
        std::vector<Rational> a(sp->dim(), Rational(0)), b(sp->dim(), Rational(0));
        a[i] = 1;
        b[i] = -1;
        cs.emplace_back(a, Rel::Ge, Rational(lo));
        cs.emplace_back(b, Rel::Ge, Rational(-hi - 1));
    }
    return ConvexPoly(sp, std::move(cs));
}

void bm_emptiness(benchmark::State& state) {
    auto sp = VarSpace::plain({"a", "b", "c"});
    std::mt19937_64 rng(7);
    std::vector<ConvexPoly> polys;
    for (int i = 0; i < 64; ++i) polys.push_back(random_box(rng, sp));
    size_t i = 0;
    for (auto _ : state) {
        ConvexPoly p = intersect(polys[i % 64], polys[(i + 1) % 64]);
        benchmark::DoNotOptimize(p.is_empty());
        ++i;
    }
}
BENCHMARK(bm_emptiness);

void bm_region_difference(benchmark::State& state) {
    auto sp = VarSpace::plain({"a", "b"});
    std::mt19937_64 rng(11);
    Region r(sp, {random_box(rng, sp), random_box(rng, sp), random_box(rng, sp)});
    Region s(sp, {random_box(rng, sp), random_box(rng, sp)});
    for (auto _ : state) benchmark::DoNotOptimize(region_difference(r, s));
}
BENCHMARK(bm_region_difference);

void bm_preflow(benchmark::State& state) {
    auto sp = VarSpace::plain({"a", "b"});
    auto dsp = VarSpace::dotted({"a", "b"});
    std::mt19937_64 rng(13);
    ConvexPoly p = random_box(rng, sp);
    ConvexPoly flow(dsp, {LinearConstraint({Rational(1), Rational(0)}, Rel::Ge, Rational(1)),
                          LinearConstraint({Rational(-1), Rational(0)}, Rel::Ge, Rational(-2)),
                          LinearConstraint({Rational(0), Rational(1)}, Rel::Eq, Rational(1))});
    for (auto _ : state) benchmark::DoNotOptimize(preflow(p, flow));
}
BENCHMARK(bm_preflow);

}  // namespace
