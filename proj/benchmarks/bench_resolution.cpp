#include <benchmark/benchmark.h>

#include "oir/family.hpp"
#include "oir/fixtures.hpp"
#include "oir/free_complex.hpp"

using namespace oir;

static void BM_BuildBoxComplex(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    const auto gens = fixtures::principal_ideal(2).expand(width);
    for (auto _ : state) {
        auto complex = BoxComplex::build(gens, BoxMode::Squarefree);
        benchmark::DoNotOptimize(complex);
    }
}
BENCHMARK(BM_BuildBoxComplex)->DenseRange(4, 8);

static void BM_CellularResolution(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    const auto gens = fixtures::principal_ideal(2).expand(width);
    const auto complex = BoxComplex::build(gens, BoxMode::Squarefree);
    for (auto _ : state) {
        auto resolution = cellular_resolution(complex, gens);
        benchmark::DoNotOptimize(resolution);
    }
}
BENCHMARK(BM_CellularResolution)->DenseRange(4, 8);

static void BM_VerifyExactness(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    const auto gens = fixtures::cob_ideal().expand(width);
    const auto resolution =
        cellular_resolution(BoxComplex::build(gens, BoxMode::Squarefree), gens);
    const int bound = resolution.top_generator_degree() + 2;
    for (auto _ : state) {
        auto report = verify_exact_up_to(resolution, bound, 2);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VerifyExactness)->DenseRange(4, 7);

static void BM_VerifyNaturality(benchmark::State& state) {
    const int max_width = static_cast<int>(state.range(0));
    FlatOIFamily family(fixtures::cob_ideal(), max_width);
    family.materialize_up_to(max_width);
    for (auto _ : state) {
        auto report = family.verify_naturality(max_width);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VerifyNaturality)->DenseRange(5, 7);

static void BM_MinimizePadded(benchmark::State& state) {
    const FreeOIComplex base = fixtures::oi_koszul_complex(static_cast<int>(state.range(0)));
    FreeOIComplex padded = direct_sum(base, trivial_complex(base.signature(), 1, 2, 1));
    padded = direct_sum(padded, trivial_complex(base.signature(), 2, 3, 2));
    for (auto _ : state) {
        auto reduced = minimize(padded);
        benchmark::DoNotOptimize(reduced);
    }
}
BENCHMARK(BM_MinimizePadded)->DenseRange(2, 4);

static void BM_EvaluateKoszul(benchmark::State& state) {
    const FreeOIComplex koszul = fixtures::oi_koszul_complex(4);
    const int width = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto evaluated = evaluate_at_width(koszul, width);
        benchmark::DoNotOptimize(evaluated);
    }
}
BENCHMARK(BM_EvaluateKoszul)->DenseRange(4, 8);
