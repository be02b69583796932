#include "gicreg/toeplitz.hpp"

#include <benchmark/benchmark.h>

using namespace gicreg;

static void BM_Autocovariance(benchmark::State& state) {
    const ArmaSpectrum s = ArmaSpectrum::make({0.9}, {0.3}, 6.0);
    const int lags = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(autocovariance(s, lags));
    }
}
BENCHMARK(BM_Autocovariance)->Arg(512)->Arg(2048);

static void BM_ToeplitzLogdet(benchmark::State& state) {
    const ArmaSpectrum s = ArmaSpectrum::make({0.9}, {0.3}, 6.0);
    std::vector<double> col = autocovariance(s, static_cast<int>(state.range(0)));
    col[0] += 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(toeplitz_logdet(col));
    }
}
BENCHMARK(BM_ToeplitzLogdet)->Arg(512)->Arg(1024)->Arg(2048);

static void BM_FiniteNRate(benchmark::State& state) {
    const ChannelParams ch = ChannelParams::validated(6, 1, 2, 0);
    const ArmaSpectrum s1 = ArmaSpectrum::make({0.9}, {}, 6.0);
    const ArmaSpectrum s2 = ArmaSpectrum::make({-0.5}, {}, 1.0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(finite_n_rate(OracleTerm::Interference, ch, s1, s2, n));
    }
}
BENCHMARK(BM_FiniteNRate)->Arg(512)->Arg(1024);
