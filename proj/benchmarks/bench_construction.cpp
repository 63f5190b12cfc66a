#include <benchmark/benchmark.h>

#include "cubicity/builder.hpp"
#include "cubicity/generator.hpp"
#include "cubicity/randunit.hpp"

using namespace cubicity;

namespace {

// n = n1 + n2 vertices, expected degree 4 on both sides.
BipartiteGraph sparse_graph(int n) {
    const int half = n / 2;
    return gen_random_bipartite(half, half, 4.0 / half, static_cast<std::uint64_t>(n));
}

void BM_RandUnit(benchmark::State& state) {
    const BipartiteGraph g = sparse_graph(static_cast<int>(state.range(0)));
    const Side side = randunit_side(g);
    std::uint64_t i = 0;
    for (auto _ : state) {
        Rng rng(derive_seed(1, i++));
        benchmark::DoNotOptimize(randunit(g, side, rng));
    }
    state.SetComplexityN(g.edge_count() + g.vertex_count());
}
BENCHMARK(BM_RandUnit)->RangeMultiplier(2)->Range(1 << 11, 1 << 15)->Complexity(benchmark::oN);

// Whole construction phase (t RANDUNIT dims plus both families), no verification.
void BM_BuildAttempt(benchmark::State& state) {
    const BipartiteGraph g = sparse_graph(static_cast<int>(state.range(0)));
    const int t = default_t(g);
    std::uint64_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(build_attempt(g, t, derive_seed(2, i++)));
    state.counters["t"] = t;
}
BENCHMARK(BM_BuildAttempt)->RangeMultiplier(2)->Range(1 << 9, 1 << 12)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
    const BipartiteGraph g = sparse_graph(static_cast<int>(state.range(0)));
    const CubeRepresentation rep = build_attempt(g, default_t(g), 3);
    for (auto _ : state) benchmark::DoNotOptimize(verify(rep, g));
    state.counters["k"] = rep.dimension();
}
BENCHMARK(BM_Verify)->RangeMultiplier(2)->Range(1 << 7, 1 << 10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
