#include <benchmark/benchmark.h>

#include "srkit/corpus.hpp"
#include "srkit/homology.hpp"
#include "srkit/integer_matrix.hpp"
#include "srkit/monomial.hpp"
#include "srkit/serre.hpp"

using namespace srkit;

static void BM_SmithNormalForm(benchmark::State& state) {
    const auto c = sphere_product(3);
    const auto m = boundary_matrix(c, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
    state.counters["cols"] = static_cast<double>(m.cols());
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_ChainSpectrum(benchmark::State& state) {
    const auto c = builtin_from_spec(state.range(0) == 0 ? "torus_7" : "sphere_product:3");
    for (auto _ : state) benchmark::DoNotOptimize(chain_spectrum(c));
}
BENCHMARK(BM_ChainSpectrum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_MaxSerre(benchmark::State& state) {
    const auto c = sphere_product(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(max_serre(c));
}
BENCHMARK(BM_MaxSerre)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_HochsterTable(benchmark::State& state) {
    const auto c = torus_7();
    for (auto _ : state) benchmark::DoNotOptimize(hochster_table(c));
}
BENCHMARK(BM_HochsterTable)->Unit(benchmark::kMicrosecond);

// (x_0 x_1, x_2 x_3, ..., x_{2n-2} x_{2n-1}) has 2^n minimal primes.
static void BM_MinimalPrimes(benchmark::State& state) {
    const int pairs = static_cast<int>(state.range(0));
    std::vector<Monomial> gens;
    for (int i = 0; i < pairs; ++i) {
        std::vector<int> e(static_cast<std::size_t>(2 * pairs), 0);
        e[static_cast<std::size_t>(2 * i)] = e[static_cast<std::size_t>(2 * i + 1)] = 1;
        gens.emplace_back(e);
    }
    const MonomialIdeal ideal(2 * pairs, gens);
    for (auto _ : state) benchmark::DoNotOptimize(minimal_primes(ideal));
}
BENCHMARK(BM_MinimalPrimes)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
