#include <benchmark/benchmark.h>

#include "qeb/encoders.hpp"
#include "qeb/experiment.hpp"
#include "qeb/noise.hpp"
#include "qeb/pipeline.hpp"
#include "qeb/statevector.hpp"

namespace {

void BM_EncodeFrqi(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const auto img = qeb::generate_image(side, side, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qeb::encode_frqi(img));
    }
}
BENCHMARK(BM_EncodeFrqi)->Arg(4)->Arg(16)->Arg(64);

void BM_SimulateFrqi(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const auto circuit = qeb::encode_frqi(qeb::generate_image(side, side, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qeb::run_statevector(circuit));
    }
}
BENCHMARK(BM_SimulateFrqi)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SimulateLattice(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const auto circuit = qeb::encode(qeb::generate_image(side, side, 1), qeb::EncodingKind::QubitLattice);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qeb::run_statevector(circuit));
    }
}
BENCHMARK(BM_SimulateLattice)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SampleCounts(benchmark::State& state) {
    const auto sv = qeb::run_statevector(qeb::encode_frqi(qeb::generate_image(16, 16, 1)));
    const auto shots = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qeb::sample_counts(sv, shots, ++seed));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleCounts)->Arg(100)->Arg(10000)->Arg(100000);

void BM_NoisyFrqi(benchmark::State& state) {
    const auto circuit = qeb::encode_frqi(qeb::generate_image(8, 8, 1));
    const qeb::NoiseConfig noise{0.01, 0.01, 0.01};
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qeb::run_noisy(circuit, noise, 10000, ++seed));
    }
}
BENCHMARK(BM_NoisyFrqi)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
