#include <benchmark/benchmark.h>
#include <omp.h>

#include <vector>

#include "farey/bench.hpp"
#include "farey/search.hpp"
#include "farey/table.hpp"

namespace {

const std::vector<int> kOrders{50, 100, 200, 400};

void BM_IterationsSerial(benchmark::State& state) {
    const auto trials = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(farey::bench_iterations_serial(kOrders, trials, 42));
    state.SetItemsProcessed(state.iterations() * trials * kOrders.size());
}
BENCHMARK(BM_IterationsSerial)->Arg(250)->Unit(benchmark::kMillisecond);

void BM_IterationsParallel(benchmark::State& state) {
    const auto trials = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(farey::bench_iterations(kOrders, trials, 42));
    state.SetItemsProcessed(state.iterations() * trials * kOrders.size());
    state.counters["threads"] = omp_get_max_threads();
}
BENCHMARK(BM_IterationsParallel)->Arg(250)->Unit(benchmark::kMillisecond);

template <farey::Algorithm Algo>
void BM_Closest(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const farey::FareySequence seq(n);
    const farey::FareyTable table = farey::build_table(seq);
    std::vector<farey::SearchKey> keys;
    for (std::uint64_t t = 0; t < 1024; ++t) keys.push_back(farey::bench_key(7, n, t));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(farey::find_closest(seq, table, keys[i], Algo));
        i = (i + 1) & 1023;
    }
}
BENCHMARK_TEMPLATE(BM_Closest, farey::Algorithm::binary)->Arg(50)->Arg(400)->Arg(2000);
BENCHMARK_TEMPLATE(BM_Closest, farey::Algorithm::regula_falsi)->Arg(50)->Arg(400)->Arg(2000);

void BM_BuildTable(benchmark::State& state) {
    const farey::FareySequence seq(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(farey::build_table(seq));
}
BENCHMARK(BM_BuildTable)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
