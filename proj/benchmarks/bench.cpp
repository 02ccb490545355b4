#include "vhh/cutoffs.hpp"
#include "vhh/geometry.hpp"
#include "vhh/propagator.hpp"
#include "vhh/sectors.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_BandOblique(benchmark::State& state) {
    double x = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vhh::band_e_oblique({x, 0.37}));
        x += 1e-6;
        if (x >= 1.0) x = -1.0;
    }
}
BENCHMARK(BM_BandOblique);

void BM_CutoffEval(benchmark::State& state) {
    const vhh::GevreyCutoff chi(2.0);
    double t = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi(t));
        t += 1e-6;
        if (t >= 2.0) t = 1.0;
    }
}
BENCHMARK(BM_CutoffEval);

void BM_SliceEval(benchmark::State& state) {
    const vhh::GevreyCutoff chi(2.0);
    const int j = static_cast<int>(state.range(0));
    const double t = 1.5 * std::pow(10.0, -2.0 * j);
    for (auto _ : state) benchmark::DoNotOptimize(vhh::chi_j(chi, t, j, 10.0));
}
BENCHMARK(BM_SliceEval)->Arg(1)->Arg(4);

void BM_EnumerateSectors(benchmark::State& state) {
    const int j = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(vhh::enumerate_sectors(j));
    state.SetComplexityN(j);
}
BENCHMARK(BM_EnumerateSectors)->Arg(4)->Arg(16)->Arg(64);

void BM_SectorWeight(benchmark::State& state) {
    const vhh::GevreyCutoff chi(2.0);
    const vhh::SectorTriple s{4, 3, 2, 1, 2};
    const vhh::SectorPatch patch(s, 10.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(vhh::sector_weight(chi, patch, 1e-4, 1.001, 1.01));
}
BENCHMARK(BM_SectorWeight);

} // namespace

BENCHMARK_MAIN();
