#include <benchmark/benchmark.h>

#include "padcell/padic.hpp"
#include "padcell/power_groups.hpp"

using namespace padcell;

namespace {

const PrecisionContext ctx3(3, 8);
const PrecisionContext ctx3_deep(3, 32);

void BM_Add(benchmark::State& state) {
    PAdic x = PAdic::from_rational(Rat(22, 7), ctx3);
    PAdic y = PAdic::from_rational(Rat(-5, 13), ctx3);
    for (auto _ : state) benchmark::DoNotOptimize(x + y);
}
BENCHMARK(BM_Add);

void BM_Mul(benchmark::State& state) {
    PAdic x = PAdic::from_rational(Rat(22, 7), ctx3);
    PAdic y = PAdic::from_rational(Rat(-5, 13), ctx3);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_Mul);

void BM_Div(benchmark::State& state) {
    PAdic x = PAdic::from_rational(Rat(22, 7), ctx3);
    PAdic y = PAdic::from_rational(Rat(-5, 13), ctx3);
    for (auto _ : state) benchmark::DoNotOptimize(x / y);
}
BENCHMARK(BM_Div);

void BM_AngularComponent(benchmark::State& state) {
    PAdic x = PAdic::from_rational(Rat(22, 7), ctx3_deep);
    for (auto _ : state) benchmark::DoNotOptimize(x.ac(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AngularComponent)->Arg(1)->Arg(8)->Arg(24);

void BM_HenselRoot(benchmark::State& state) {
    PrecisionContext ctx(3, static_cast<int>(state.range(0)));
    PAdic theta = PAdic::from_rational(Rat(4), ctx);
    for (auto _ : state) benchmark::DoNotOptimize(hensel_kth_root(theta, 2, ctx));
}
BENCHMARK(BM_HenselRoot)->Arg(8)->Arg(32)->Arg(128);

void BM_CosetReps(benchmark::State& state) {
    long n = state.range(0);
    int m = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(coset_reps(n, m, 5));
}
BENCHMARK(BM_CosetReps)->Args({2, 1})->Args({4, 2})->Args({6, 3});

void BM_InCoset(benchmark::State& state) {
    PAdic x = PAdic::from_rational(Rat(44, 7), ctx3);
    CosetSpec spec = CosetSpec::qnm(2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(in_coset(x, Rat(2), spec));
}
BENCHMARK(BM_InCoset);

} // namespace

BENCHMARK_MAIN();
