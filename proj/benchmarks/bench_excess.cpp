#include "excess/agring.hpp"
#include "excess/excess.hpp"
#include "excess/products.hpp"
#include "excess/strata.hpp"
#include "excess/trees.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace excess;

void BM_EnumerateTrees(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(g, g - 1));
    state.counters["trees"] = static_cast<double>(enumerate_trees(g, g - 1).size());
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_Smoothings(benchmark::State& state) {
    const auto trees = enumerate_trees(7, 6);
    for (auto _ : state)
        for (const auto& t : trees) benchmark::DoNotOptimize(smoothings(t));
}
BENCHMARK(BM_Smoothings)->Unit(benchmark::kMillisecond);

void BM_ContributionsRecursion(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(all_contributions(g, Method::Recursion));
}
BENCHMARK(BM_ContributionsRecursion)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_ContributionsPixton(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(all_contributions(g, Method::Pixton));
}
BENCHMARK(BM_ContributionsPixton)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_AssemblePullback(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const auto cs = all_contributions(g, Method::Pixton);
    for (auto _ : state) benchmark::DoNotOptimize(assemble_pullback(g, cs));
}
BENCHMARK(BM_AssemblePullback)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_AgReduce(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    Poly p(1);
    for (int i = 1; i < g; ++i) p *= Poly(1) + Poly(Variable::lambda(i));
    p = power(p, 2);
    for (auto _ : state) benchmark::DoNotOptimize(reduce(p, g));
}
BENCHMARK(BM_AgReduce)->DenseRange(3, 7)->Unit(benchmark::kMicrosecond);

void BM_SoclePairings(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (int d = 0; d <= g * (g - 1) / 2; ++d) benchmark::DoNotOptimize(rank(socle_pairing(g, d).matrix));
}
BENCHMARK(BM_SoclePairings)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_EulerTensor(benchmark::State& state) {
    const int a = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(euler_tensor(a, a));
}
BENCHMARK(BM_EulerTensor)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
