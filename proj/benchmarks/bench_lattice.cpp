#include <benchmark/benchmark.h>

#include "petersson/lattice.hpp"

using namespace petersson;

static void BM_e8_pairs(benchmark::State& state) {
    Lattice e8 = builtin_e8();
    BinQF T{(int64_t)state.range(0), 1, 1};
    for (auto _ : state) benchmark::DoNotOptimize(rep_number(e8, T));
}
BENCHMARK(BM_e8_pairs)->Arg(4)->Arg(8)->Arg(16);

static void BM_d16_pairs(benchmark::State& state) {
    Lattice d16 = builtin_d16plus();
    BinQF T{(int64_t)state.range(0), 1, 2};
    for (auto _ : state) benchmark::DoNotOptimize(rep_number(d16, T));
}
BENCHMARK(BM_d16_pairs)->Arg(2)->Arg(3);

static void BM_theta16(benchmark::State& state) {
    Lattice d16 = builtin_d16plus();
    for (auto _ : state) benchmark::DoNotOptimize(theta1_qexp(d16, (std::size_t)state.range(0)));
}
BENCHMARK(BM_theta16)->Arg(4);
