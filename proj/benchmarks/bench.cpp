#include <benchmark/benchmark.h>

#include "flipsurf/explorer.hpp"
#include "flipsurf/models.hpp"
#include "flipsurf/mutation.hpp"
#include "flipsurf/proofkit.hpp"

using namespace flipsurf;

static void BM_MutateB(benchmark::State& state) {
    BMatrix b = BMatrix::from_arrows(5, {{2, 1}, {2, 5}, {1, 4}, {1, 3}, {5, 3}, {3, 2}, {3, 2}});
    int k = 1;
    for (auto _ : state) {
        b = mutate_b(b, k);
        k = k % 5 + 1;
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_MutateB);

static void BM_TaggedFlipWalk(benchmark::State& state) {
    TaggedTriangulation t =
        build_canonical_triangulation(MarkedSurface{1, {2}, 1}).t;
    int arc = 1;
    for (auto _ : state) {
        t = t.flipped(arc);
        arc = arc % t.pattern.arc_count() + 1;
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_TaggedFlipWalk);

static void BM_ModelFlipWalk(benchmark::State& state) {
    ModelTriangulation t = fan_triangulation(MarkedSurface{0, {6}, 1});
    int label = 1;
    for (auto _ : state) {
        t = model_flip(t, label);
        label = label % static_cast<int>(t.arcs.size()) + 1;
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_ModelFlipWalk);

static void BM_ExchangeGraphD4(benchmark::State& state) {
    ModelTriangulation start = fan_triangulation(MarkedSurface{0, {4}, 1});
    for (auto _ : state) {
        ExchangeGraph g = bfs_exchange_graph(start, 100000);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_ExchangeGraphD4);

static void BM_GreenSearchA3(benchmark::State& state) {
    BMatrix b = BMatrix::from_arrows(3, {{1, 2}, {2, 3}});
    for (auto _ : state) {
        GreenSearchResult res = find_maximal_green_sequences(b, 10);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_GreenSearchA3);

BENCHMARK_MAIN();
