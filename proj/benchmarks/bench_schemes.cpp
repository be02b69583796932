#include "gicreg/schemes.hpp"

#include <benchmark/benchmark.h>

using namespace gicreg;

namespace {

const ChannelParams kCh = ChannelParams::validated(6, 1, 3, 0.1);

}  // namespace

static void BM_SasonRates(benchmark::State& state) {
    const SasonParams p{0.6, 0.4, 0.7};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sason_rates(kCh, p));
    }
}
BENCHMARK(BM_SasonRates);

static void BM_Theorem3Rates(benchmark::State& state) {
    const auto p = ArmaSchemeParams::tied(SasonParams{0.6, 0.4, 0.7},
                                          FilterCoeffs{{0.7425}, {0.2605}},
                                          FilterCoeffs{{0.4950}, {0.9801}});
    QuadratureConfig q;
    q.points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(theorem3_rates(kCh, p, q));
    }
}
BENCHMARK(BM_Theorem3Rates)->Arg(512)->Arg(1024)->Arg(4096);

static void BM_Theorem5Rates(benchmark::State& state) {
    const HkSchemeParams p{0.9, 0.9, 0.95, 0.1, 0.1, 0.2, 0.2, 0.0, 0.0, 0.3, -0.3};
    QuadratureConfig q;
    q.points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(theorem5_rates(kCh, p, q));
    }
}
BENCHMARK(BM_Theorem5Rates)->Arg(512)->Arg(1024);

static void BM_HkBaseline(benchmark::State& state) {
    const HkBaselineParams p{0.4, 0.6};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hk_baseline_region(kCh, p));
    }
}
BENCHMARK(BM_HkBaseline);
