// Serial dense reference vs sparse kernel (serial and OpenMP) on a few
// complexes of increasing size, plus serial vs parallel assembly.

#include "chromcoh/homology.hpp"

#include <benchmark/benchmark.h>

using namespace chromcoh;

namespace {

struct Instance {
    const char* label;
    Graph graph;
    const char* algebra;
};

const std::vector<Instance>& instances() {
    static const std::vector<Instance> all = {
        {"p3/zx3", Graph(3, {{0, 1}, {1, 2}, {0, 2}}), "zx3"},
        {"bowtie/zx3", Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}), "zx3"},
        {"wheel4/zx2", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}), "zx2"},
        {"c5chords/zxn:4", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {1, 3}}), "zxn:4"},
    };
    return all;
}

const BigradedComplex& complex_for(std::size_t k) {
    static std::vector<std::optional<BigradedComplex>> cache(instances().size());
    if (!cache[k]) cache[k] = build_complex(instances()[k].graph, builtin_algebra(instances()[k].algebra));
    return *cache[k];
}

void BM_ReferenceDense(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto& cx = complex_for(k);
    state.SetLabel(instances()[k].label);
    for (auto _ : state) benchmark::DoNotOptimize(reference::cohomology(cx));
}

void BM_SparseSerial(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto& cx = complex_for(k);
    state.SetLabel(instances()[k].label);
    for (auto _ : state) benchmark::DoNotOptimize(cohomology(cx, Execution::Serial));
}

void BM_SparseParallel(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto& cx = complex_for(k);
    state.SetLabel(instances()[k].label);
    for (auto _ : state) benchmark::DoNotOptimize(cohomology(cx, Execution::Parallel));
}

void BM_BuildSerial(benchmark::State& state) {
    const auto& inst = instances()[static_cast<std::size_t>(state.range(0))];
    const auto a = builtin_algebra(inst.algebra);
    state.SetLabel(inst.label);
    for (auto _ : state) benchmark::DoNotOptimize(build_complex(inst.graph, a, std::nullopt, Execution::Serial));
}

void BM_BuildParallel(benchmark::State& state) {
    const auto& inst = instances()[static_cast<std::size_t>(state.range(0))];
    const auto a = builtin_algebra(inst.algebra);
    state.SetLabel(inst.label);
    for (auto _ : state) benchmark::DoNotOptimize(build_complex(inst.graph, a, std::nullopt, Execution::Parallel));
}

}  // namespace

BENCHMARK(BM_ReferenceDense)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
