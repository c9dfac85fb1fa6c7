#include <benchmark/benchmark.h>

#include "ssyn/parser.hpp"
#include "ssyn/synthesis.hpp"
#include "ssyn/tnc.hpp"

namespace {

using namespace ssyn;

void bm_tnc_synth(benchmark::State& state) {
    ParsedModel pm = parse_model(gen_tnc(static_cast<int>(state.range(0))));
    SynthesisOptions opt;
    opt.max_iter = 50;
    for (auto _ : state) {
        auto res = safety_region(pm.automaton, pm.spec->states, opt);
        benchmark::DoNotOptimize(res.iterations);
    }
}
BENCHMARK(bm_tnc_synth)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void bm_tnc_parse(benchmark::State& state) {
    std::string text = gen_tnc(6);
    for (auto _ : state) benchmark::DoNotOptimize(parse_model(text));
}
BENCHMARK(bm_tnc_parse)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
