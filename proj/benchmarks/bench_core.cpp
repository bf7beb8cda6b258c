#include "antisym/eigensolver.hpp"
#include "antisym/lattice.hpp"
#include "antisym/sweep.hpp"
#include "antisym/symmetry.hpp"

#include <benchmark/benchmark.h>

using namespace antisym;

static void BM_Eigenvalues(benchmark::State& state) {
    const auto f = build_ring(static_cast<int>(state.range(0)));
    const auto h = f.hamiltonian_at(0.7);
    for (auto _ : state)
        benchmark::DoNotOptimize(eigenvalues(h));
}
BENCHMARK(BM_Eigenvalues)->Arg(4)->Arg(16)->Arg(32)->Arg(64);

static void BM_Sweep(benchmark::State& state) {
    const auto f = build_chain(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep(f, 0.0, 2.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Sweep)->Arg(64)->Arg(201);

static void BM_ExceptionalPoints(benchmark::State& state) {
    const auto f = build_chain(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_exceptional_points(f, 0.0, 2.0, 64));
}
BENCHMARK(BM_ExceptionalPoints);

static void BM_Automorphisms(benchmark::State& state) {
    const auto g = build_ring(static_cast<int>(state.range(0))).graph();
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_automorphisms(g));
}
BENCHMARK(BM_Automorphisms)->Arg(8)->Arg(12)->Arg(16);

static void BM_ClassifySymmetries(benchmark::State& state) {
    const auto f = build_ring(8);
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_symmetries(f));
}
BENCHMARK(BM_ClassifySymmetries);

BENCHMARK_MAIN();
