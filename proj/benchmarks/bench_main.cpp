#include <benchmark/benchmark.h>

#include "nonsep/branching.hpp"
#include "nonsep/connectivity.hpp"
#include "nonsep/gallery.hpp"
#include "nonsep/generators.hpp"
#include "nonsep/oracles.hpp"
#include "nonsep/search.hpp"
#include "nonsep/semicomplete.hpp"
#include "nonsep/tree.hpp"
#include "nonsep/undirected.hpp"

using namespace nonsep;

namespace {

std::vector<Digraph> branching_inputs(int n_min, int n_max, int count) {
    Rng rng(7);
    std::vector<Digraph> out;
    for (int i = 0; i < count; ++i)
        out.push_back(branching_instance(i % 2 ? Regime::HighInDegree : Regime::OrientedInDegree3, i % 3, n_min, n_max, rng));
    return out;
}

}  // namespace

static void BM_ArcConnectivity(benchmark::State& state) {
    Rng rng(1);
    const Digraph d = random_semicomplete(static_cast<int>(state.range(0)), rng, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(arc_connectivity(d));
}
BENCHMARK(BM_ArcConnectivity)->Arg(16)->Arg(32)->Arg(64);

static void BM_EdmondsTwoBranchings(benchmark::State& state) {
    Rng rng(2);
    Digraph d;
    do d = random_semicomplete(static_cast<int>(state.range(0)), rng, 0.3); while (!is_k_arc_strong(d, 2));
    for (auto _ : state) benchmark::DoNotOptimize(edmonds_branchings(d, 0, 2));
}
BENCHMARK(BM_EdmondsTwoBranchings)->Arg(8)->Arg(16)->Arg(32);

static void BM_NiceDecomposition(benchmark::State& state) {
    Rng rng(3);
    Digraph d = layered_semicomplete(std::vector<int>(state.range(0), 5), rng);
    d.add_arc(d.order() - 1, 0);
    for (auto _ : state) benchmark::DoNotOptimize(nice_decomposition(d));
}
BENCHMARK(BM_NiceDecomposition)->Arg(2)->Arg(4)->Arg(8);

static void BM_SemicompleteBranching(benchmark::State& state) {
    Rng rng(4);
    Digraph d;
    do d = random_semicomplete(static_cast<int>(state.range(0)), rng); while (!is_k_arc_strong(d, 2));
    for (auto _ : state) benchmark::DoNotOptimize(sd_nonsep_branching(d));
}
BENCHMARK(BM_SemicompleteBranching)->Arg(8)->Arg(16)->Arg(32);

static void BM_MainBranching(benchmark::State& state) {
    const auto inputs = branching_inputs(12, 24, 12);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(main_nonsep_branching(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_MainBranching);

static void BM_NonsepSpanningTree(benchmark::State& state) {
    Rng rng(5);
    std::vector<Digraph> inputs;
    for (int i = 0; i < 8; ++i) inputs.push_back(tree_instance(static_cast<int>(state.range(0)), rng, i % 2 == 1));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(nonsep_spanning_tree(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_NonsepSpanningTree)->Arg(14)->Arg(20)->Arg(28);

static void BM_UndirectedPathTree(benchmark::State& state) {
    Rng rng(6);
    const UndirectedGraph g = undirected_instance(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(edge_disjoint_hp_and_tree(g));
}
BENCHMARK(BM_UndirectedPathTree)->Arg(10)->Arg(16);

static void BM_CanonicalForm(benchmark::State& state) {
    Rng rng(8);
    const Digraph d = random_alpha2_digraph(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(9)->Arg(10);

static void BM_OracleTreeDhat(benchmark::State& state) {
    const Digraph d = build(GalleryId::parse("DHAT")).graph;
    for (auto _ : state) benchmark::DoNotOptimize(oracle_nonsep_tree(d));
}
BENCHMARK(BM_OracleTreeDhat);

static void BM_OracleBranchingW1(benchmark::State& state) {
    const Digraph d = build(GalleryId::parse("W1")).graph;
    for (auto _ : state) benchmark::DoNotOptimize(oracle_nonsep_branching(d));
}
BENCHMARK(BM_OracleBranchingW1);

BENCHMARK_MAIN();
