#include <benchmark/benchmark.h>

#include "petersson/arith.hpp"

using namespace petersson;

static void BM_cohen_H_table(benchmark::State& state) {
    for (auto _ : state) {
        Rat acc(0);
        for (uint64_t n = 0; n < (uint64_t)state.range(0); ++n) acc += cohen_H(3, n);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_cohen_H_table)->Arg(64)->Arg(256);

static void BM_dirichlet_convolution(benchmark::State& state) {
    ArithSeq a = seq_npow(11, (std::size_t)state.range(0));
    ArithSeq b = seq_ones((std::size_t)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_mul(a, b));
}
BENCHMARK(BM_dirichlet_convolution)->Arg(200)->Arg(500);

static void BM_psi_seq(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(psi_seq((std::size_t)state.range(0)));
}
BENCHMARK(BM_psi_seq)->Arg(1000);

BENCHMARK_MAIN();
