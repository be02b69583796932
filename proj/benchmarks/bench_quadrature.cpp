#include "gicreg/quadrature.hpp"

#include "gicreg/spectrum.hpp"

#include <benchmark/benchmark.h>

using namespace gicreg;

static void BM_PhiFixed(benchmark::State& state) {
    const ArmaSpectrum s = ArmaSpectrum::make({0.9}, {0.3}, 6.0);
    QuadratureConfig q;
    q.points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi([&](double w) { return s.eval(w); }, q));
    }
}
BENCHMARK(BM_PhiFixed)->Arg(512)->Arg(1024)->Arg(4096);

static void BM_PhiAdaptive(benchmark::State& state) {
    const ArmaSpectrum s = ArmaSpectrum::make({0.9}, {0.3}, 6.0);
    QuadratureConfig q;
    q.method = QuadratureConfig::Method::Adaptive;
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi([&](double w) { return s.eval(w); }, q));
    }
}
BENCHMARK(BM_PhiAdaptive);

static void BM_ClosedFormAr(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_form_ar(0.9, 6.0));
    }
}
BENCHMARK(BM_ClosedFormAr);

BENCHMARK_MAIN();
