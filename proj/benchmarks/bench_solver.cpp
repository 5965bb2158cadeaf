#include <random>

#include <benchmark/benchmark.h>

#include "pdzf/constructions.hpp"
#include "pdzf/decomposition.hpp"
#include "pdzf/forts.hpp"
#include "pdzf/propagation.hpp"
#include "pdzf/solver.hpp"

using namespace pdzf;

namespace {

Graph seeded_tree(std::size_t n) {
    std::mt19937_64 rng(n);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
    return Graph::from_edges(n, edges);
}

void BM_CgTreePd(benchmark::State& state) {
    Graph tree = seeded_tree(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(restricted_pd_number(tree, tree.empty_set()).value);
}
BENCHMARK(BM_CgTreePd)->Arg(16)->Arg(32)->Arg(60);

void BM_TreeSplitPd(benchmark::State& state) {
    Graph tree = seeded_tree(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tree_pd_parallel(tree).value);
}
BENCHMARK(BM_TreeSplitPd)->Arg(16)->Arg(32)->Arg(60);

void BM_CgGridPd(benchmark::State& state) {
    Graph g = grid2(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(restricted_pd_number(g, g.empty_set()).value);
}
BENCHMARK(BM_CgGridPd)->Arg(4)->Arg(6)->Arg(8);

void BM_CgGridZf(benchmark::State& state) {
    Graph g = grid2(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(restricted_zf_number(g, g.empty_set()).value);
}
BENCHMARK(BM_CgGridZf)->Arg(4)->Arg(6);

void BM_Separator(benchmark::State& state) {
    Graph g = spider_complete(6);
    SolveOptions opts;
    opts.separator = static_cast<Separator>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(restricted_pd_number(g, g.empty_set(), opts).cuts_added);
}
BENCHMARK(BM_Separator)->DenseRange(0, 2);

void BM_ZfClosure(benchmark::State& state) {
    Graph p = path(static_cast<std::size_t>(state.range(0)));
    VertexSet b = VertexSet::of(p.order(), {0});
    for (auto _ : state) benchmark::DoNotOptimize(closure(p, b).size());
}
BENCHMARK(BM_ZfClosure)->Arg(64)->Arg(1024)->Arg(16384);

void BM_MinimumViolatedFort(benchmark::State& state) {
    Graph g = grid2(static_cast<std::size_t>(state.range(0)));
    VertexSet forbidden = VertexSet::of(g.order(), {0});
    for (auto _ : state) benchmark::DoNotOptimize(minimum_violated_fort(g, forbidden).size());
}
BENCHMARK(BM_MinimumViolatedFort)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
