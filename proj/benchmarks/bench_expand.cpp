#include <benchmark/benchmark.h>

#include "oir/fixtures.hpp"

using namespace oir;

static void BM_ExpandQuadratic(benchmark::State& state) {
    const MonomialOIIdeal ideal = fixtures::cob_ideal();
    const int width = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto gens = ideal.expand(width);
        benchmark::DoNotOptimize(gens);
    }
}
BENCHMARK(BM_ExpandQuadratic)->DenseRange(4, 9);

static void BM_ExpandPrincipalD3(benchmark::State& state) {
    const MonomialOIIdeal ideal = fixtures::principal_ideal(3);
    const int width = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto gens = ideal.expand(width);
        benchmark::DoNotOptimize(gens);
    }
}
BENCHMARK(BM_ExpandPrincipalD3)->DenseRange(3, 9);

static void BM_PropagateOrderIdeal(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    TupleSet ideal;
    for (const Tuple& t : TuplePoset::strictly_increasing(2, w).elements())
        ideal.insert(t);
    for (auto _ : state) {
        auto pushed = propagate_order_ideal(ideal, w);
        benchmark::DoNotOptimize(pushed);
    }
}
BENCHMARK(BM_PropagateOrderIdeal)->DenseRange(4, 8);
