#include <benchmark/benchmark.h>

#include <facelim/experiments.hpp>

namespace {

void BM_RunDistribution(benchmark::State& state) {
    const unsigned l = unsigned(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(facelim::run_distribution(l));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RunDistribution)->Arg(9)->Arg(13)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_PartitionStream(benchmark::State& state) {
    const unsigned l = unsigned(state.range(0));
    for (auto _ : state) {
        facelim::PartitionStream stream{l};
        while (auto p = stream.next()) benchmark::DoNotOptimize(*p);
    }
}
BENCHMARK(BM_PartitionStream)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
