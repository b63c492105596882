#include "iscount/coloring.hpp"
#include "iscount/constraints.hpp"
#include "iscount/graph_io.hpp"
#include "iscount/optimizer.hpp"
#include "iscount/oracle.hpp"
#include "iscount/published_weights.hpp"
#include "iscount/solver.hpp"

#include <benchmark/benchmark.h>

using namespace iscount;

static void BM_CountRandomCubic(benchmark::State& state) {
    const Graph g = random_cubic_graph(static_cast<int>(state.range(0)), 7);
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        auto r = count_independent_sets(g);
        nodes = r.stats.branch_nodes;
        benchmark::DoNotOptimize(r.count);
    }
    state.counters["branch_nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_CountRandomCubic)->DenseRange(40, 80, 20)->Unit(benchmark::kMillisecond);

static void BM_CountNo333(benchmark::State& state) {
    const Graph g = random_subcubic_graph(static_cast<int>(state.range(0)), 0.3, true, 3);
    for (auto _ : state) benchmark::DoNotOptimize(count_independent_sets(g).count);
}
BENCHMARK(BM_CountNo333)->DenseRange(30, 60, 10)->Unit(benchmark::kMillisecond);

static void BM_CountWithoutThreeIS(benchmark::State& state) {
    const Graph g = random_subcubic_graph(static_cast<int>(state.range(0)), 0.3, true, 3);
    SolverOptions opt;
    opt.enable_three_is = false;
    for (auto _ : state) benchmark::DoNotOptimize(count_independent_sets(g, opt).count);
}
BENCHMARK(BM_CountWithoutThreeIS)->DenseRange(30, 60, 10)->Unit(benchmark::kMillisecond);

static void BM_ChromaticGnp(benchmark::State& state) {
    const Graph g = gnp_graph(static_cast<int>(state.range(0)), 0.5, 11);
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticGnp)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_OracleMeetInMiddle(benchmark::State& state) {
    const Graph g = gnp_graph(static_cast<int>(state.range(0)), 0.2, 5);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_ind(g));
}
BENCHMARK(BM_OracleMeetInMiddle)->DenseRange(16, 28, 4)->Unit(benchmark::kMillisecond);

static void BM_OptimizeRegime(benchmark::State& state) {
    const auto regime = static_cast<Regime>(state.range(0));
    const auto cs = generate_constraints(regime, published::context(regime));
    for (auto _ : state) benchmark::DoNotOptimize(optimize_weights(cs));
    state.SetLabel(std::string(regime_name(regime)));
}
BENCHMARK(BM_OptimizeRegime)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
