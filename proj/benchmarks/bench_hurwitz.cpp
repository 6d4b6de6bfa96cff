#include <benchmark/benchmark.h>

#include "hurwitz/idealizer.hpp"
#include "hurwitz/roots_oracle.hpp"
#include "hurwitz/search.hpp"
#include "hurwitz/stability.hpp"

using namespace hurwitz;

namespace {

Polynomial stable_of_degree(int n) {
    Rng rng(n);
    return sample_stable(n, rng);
}

void BM_HurwitzMinors(benchmark::State& state) {
    const Polynomial f = stable_of_degree(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz_minors(f));
}
BENCHMARK(BM_HurwitzMinors)->DenseRange(3, 12, 3);

void BM_QuasiStability(benchmark::State& state) {
    Rng rng(state.range(0));
    const Polynomial f = sample_quasi_stable(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(quasi_stability_agt(f));
}
BENCHMARK(BM_QuasiStability)->DenseRange(4, 10, 3);

void BM_FindRoots(benchmark::State& state) {
    const Polynomial f = stable_of_degree(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_roots(f));
}
BENCHMARK(BM_FindRoots)->DenseRange(3, 12, 3);

void BM_MembershipY(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Polynomial g = identity_poly(n);
    for (auto _ : state) benchmark::DoNotOptimize(in_Y(n, g, false));
}
BENCHMARK(BM_MembershipY)->DenseRange(3, 8, 1);

}  // namespace

BENCHMARK_MAIN();
