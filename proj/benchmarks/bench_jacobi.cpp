#include <benchmark/benchmark.h>

#include "petersson/hecke.hpp"
#include "petersson/jacobi.hpp"

using namespace petersson;

static void BM_jac_eis_m(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(jac_eis_m(12, (uint64_t)state.range(0), 8));
}
BENCHMARK(BM_jac_eis_m)->Arg(4)->Arg(9)->Arg(12);

static void BM_apply_V(benchmark::State& state) {
    JacExp e = jac_eis_1(12, 64);
    for (auto _ : state) benchmark::DoNotOptimize(apply_V(e, (uint64_t)state.range(0)));
}
BENCHMARK(BM_apply_V)->Arg(2)->Arg(6)->Arg(12);
