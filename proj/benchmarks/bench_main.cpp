#include <benchmark/benchmark.h>

#include "cyclecert/certify.hpp"
#include "cyclecert/decompose.hpp"
#include "cyclecert/digraph.hpp"
#include "cyclecert/out_tree.hpp"
#include "cyclecert/subdivision.hpp"

using namespace cyclecert;

static void BM_Generate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_strong_digraph(n, 0.15, seed++));
}
BENCHMARK(BM_Generate)->Arg(20)->Arg(40)->Arg(80);

static void BM_FinalizeDecompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Digraph d = generate_strong_digraph(n, 0.15, 7);
    for (auto _ : state) {
        auto fin = finalize(d, spanning_out_tree(d, 0));
        benchmark::DoNotOptimize(decompose(d, fin.tree, 2));
    }
}
BENCHMARK(BM_FinalizeDecompose)->Arg(20)->Arg(40)->Arg(80);

static void BM_Certify(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Digraph d = generate_strong_digraph(n, 0.15, 11);
    CertifyConfig cfg;
    cfg.allow_antiparallel = true;  // the generator emits 2-cycles
    for (auto _ : state) benchmark::DoNotOptimize(certify(d, 2, cfg));
}
BENCHMARK(BM_Certify)->Arg(15)->Arg(30)->Arg(40);

static void BM_Oracle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Digraph d = generate_strong_digraph(n, 0.3, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            find_subdivision_bruteforce(d, CyclePattern::six_cycle(1)));
}
BENCHMARK(BM_Oracle)->Arg(7)->Arg(9);

BENCHMARK_MAIN();
