#include <benchmark/benchmark.h>

#include "tracecodes/charsums.hpp"
#include "tracecodes/codes.hpp"
#include "tracecodes/predict.hpp"

using namespace tracecodes;

namespace {

const Field& field_of(int m, TableMode mode = TableMode::Auto) {
    static std::map<std::pair<int, int>, Field> cache;
    const auto key = std::make_pair(m, static_cast<int>(mode));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, Field(m, std::nullopt, mode)).first;
    return it->second;
}

void BM_FieldConstruction(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Field f(m);
        benchmark::DoNotOptimize(f.generator());
    }
}
BENCHMARK(BM_FieldConstruction)->Arg(8)->Arg(12)->Arg(16);

void BM_MulTabled(benchmark::State& state) {
    const Field& f = field_of(static_cast<int>(state.range(0)));
    FieldElem x = 3, acc = 1;
    for (auto _ : state) {
        acc = f.mul(acc, x) | 1;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_MulTabled)->Arg(10)->Arg(16)->Arg(20);

void BM_MulCarryless(benchmark::State& state) {
    const Field& f = field_of(static_cast<int>(state.range(0)), TableMode::NoTables);
    FieldElem x = 3, acc = 1;
    for (auto _ : state) {
        acc = f.mul(acc, x) | 1;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_MulCarryless)->Arg(10)->Arg(16)->Arg(20);

void BM_WeilSumBrute(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Field& f = field_of(m);
    const int h = m % 2 == 0 ? m / 2 : 1;
    for (auto _ : state) benchmark::DoNotOptimize(weil_sum_brute(f, h, 1, 1));
    state.SetItemsProcessed(state.iterations() * f.q());
}
BENCHMARK(BM_WeilSumBrute)->Arg(10)->Arg(12)->Arg(14);

void BM_WeilSumAllB(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Field& f = field_of(m);
    const int h = m % 2 == 0 ? m / 2 : 1;
    for (auto _ : state) benchmark::DoNotOptimize(weil_sum_all_b(f, h, 1));
    // one batched call answers q sums
    state.SetItemsProcessed(state.iterations() * f.q());
}
BENCHMARK(BM_WeilSumAllB)->Arg(10)->Arg(12)->Arg(14);

void BM_WeightDistribution(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Field& f = field_of(m);
    const auto set = defining_set(f, 1, 0);
    for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(f, set));
    state.SetItemsProcessed(state.iterations() * f.q() * set.length());
}
BENCHMARK(BM_WeightDistribution)->Arg(10)->Arg(12)->Arg(14);

void BM_PredictedCode(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(predicted_code(12, 2, 0));
}
BENCHMARK(BM_PredictedCode);

} // namespace

BENCHMARK_MAIN();
