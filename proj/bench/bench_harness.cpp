// Serial reference vs OpenMP kernels on the default suite and random search.

#include <benchmark/benchmark.h>

#include "mvspec/harness.hpp"

namespace {

using mvspec::Execution;

void runSuite(benchmark::State& state, Execution exec) {
    mvspec::SuiteConfig config;
    config.algebras = mvspec::defaultSuite();
    for (auto _ : state) benchmark::DoNotOptimize(mvspec::runAll(config, exec));
}

void search(benchmark::State& state, Execution exec) {
    const auto* s = mvspec::findStatement("T-21", mvspec::Variant::PaperStated);
    const auto samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mvspec::searchCounterexample(*s, samples, 42, 64, exec));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}

void BM_SuiteSerial(benchmark::State& state) { runSuite(state, Execution::Serial); }
void BM_SuiteParallel(benchmark::State& state) { runSuite(state, Execution::Parallel); }
void BM_SearchSerial(benchmark::State& state) { search(state, Execution::Serial); }
void BM_SearchParallel(benchmark::State& state) { search(state, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
