#include <benchmark/benchmark.h>

#include "padcell/decompose.hpp"
#include "padcell/oracle.hpp"
#include "padcell/parser.hpp"
#include "padcell/rewrite.hpp"

using namespace padcell;

namespace {

void BM_ParseFormula(benchmark::State& state) {
    const std::string s = "exists u. ord(star(u, u) - 4) >= ord(9) and Pn[2](u + 1)";
    for (auto _ : state) benchmark::DoNotOptimize(parse_formula(s));
}
BENCHMARK(BM_ParseFormula);

void BM_NormalForm(benchmark::State& state) {
    Term t = parse_term("star(t, t) - t + divg[1](t, 3)");
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(t, 3));
}
BENCHMARK(BM_NormalForm);

void BM_DecomposeCoset(benchmark::State& state) {
    Formula f = parse_formula("Pn[2](t) and not Qnm[2,1](1, t)");
    for (auto _ : state) benchmark::DoNotOptimize(decompose(f, {3, 12}));
}
BENCHMARK(BM_DecomposeCoset);

void BM_DecomposeQuadratic(benchmark::State& state) {
    Formula f = parse_formula("ord(star(t, t) - 4) >= ord(9)");
    for (auto _ : state) benchmark::DoNotOptimize(decompose(f, {3, 12}));
}
BENCHMARK(BM_DecomposeQuadratic);

void BM_EliminateExists(benchmark::State& state) {
    Formula f = parse_formula("exists t. ord(t) < ord(9) and Qnm[3,2](1, t + 1)");
    for (auto _ : state) benchmark::DoNotOptimize(eliminate_exists(f, {3, 12}));
}
BENCHMARK(BM_EliminateExists);

void BM_CoverCheck(benchmark::State& state) {
    PrecisionContext ctx(3, 8);
    Formula f = parse_formula("ord(star(t, t) - 4) >= ord(9)");
    Decomposition dec = decompose(f, {3, 12});
    SampleGrid grid = sample_grid(3, static_cast<long>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(cover_check(f, dec.cells, grid, ctx, 12));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.points.size()));
}
BENCHMARK(BM_CoverCheck)->Arg(2)->Arg(4);

} // namespace

BENCHMARK_MAIN();
