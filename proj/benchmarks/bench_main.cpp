#include <benchmark/benchmark.h>

#include "dyndeg/fabc.hpp"
#include "dyndeg/monomial.hpp"
#include "dyndeg/poly_gcd.hpp"
#include "dyndeg/poly_text.hpp"
#include "dyndeg/ratmap.hpp"

namespace {

using namespace dyndeg;

void BM_DegreeSequenceStable(benchmark::State& state) {
    auto const f = build_map(FabcParams{1, 1, 1});
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(degree_sequence(f, n));
}
BENCHMARK(BM_DegreeSequenceStable)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_DegreeSequenceUnstable(benchmark::State& state) {
    auto const f = build_map(FabcParams{1, -3, 3});
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(degree_sequence(f, n));
}
BENCHMARK(BM_DegreeSequenceUnstable)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_GcdCommonFactor(benchmark::State& state) {
    auto const k = static_cast<std::uint64_t>(state.range(0));
    QPoly const g = parse_poly("X*Y - 2*Y*Z + 3*Z^2 + X^2", 3);
    QPoly const u = parse_poly("X + Y - Z", 3).pow(k);
    QPoly const v = parse_poly("X - 5*Y + 7*Z", 3).pow(k);
    QPoly const a = g * u, b = g * v;
    for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_GcdCommonFactor)->RangeMultiplier(2)->Range(2, 16)->Unit(benchmark::kMillisecond);

void BM_GcdCoprime(benchmark::State& state) {
    auto const k = static_cast<std::uint64_t>(state.range(0));
    QPoly const a = parse_poly("X^2 + Y*Z - Z^2", 3).pow(k);
    QPoly const b = parse_poly("X*Y + 3*Z^2", 3).pow(k);
    for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_GcdCoprime)->RangeMultiplier(2)->Range(2, 16)->Unit(benchmark::kMillisecond);

void BM_SpectralRadius(benchmark::State& state) {
    std::mt19937_64 rng(7);
    MonomialMap const m(random_nonsingular_matrix(rng, static_cast<std::size_t>(state.range(0)), -9, 9));
    for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(m, 1e-9));
}
BENCHMARK(BM_SpectralRadius)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_ExceptionalLocus(benchmark::State& state) {
    auto const fam = parse_family("1", "1", "T");
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(family_exceptional_locus(fam, n));
}
BENCHMARK(BM_ExceptionalLocus)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
