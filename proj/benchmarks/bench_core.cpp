#include <benchmark/benchmark.h>

#include "isoparity/cases.hpp"
#include "isoparity/character.hpp"
#include "isoparity/divpoly.hpp"
#include "isoparity/isogeny.hpp"
#include "isoparity/localdata.hpp"
#include "isoparity/parity.hpp"

namespace {

using namespace isoparity;

// y^2 + y = x^3 - x^2 with its rational 5-torsion kernel x^2 - x.
WeierstrassModel curve5() {
    return {rational(0), rational(-1), rational(1), rational(0), rational(0)};
}

KernelPolynomial kernel5() {
    return {Int(5), PolyQ({rational(0), rational(-1), rational(1)})};
}

void BM_velu(benchmark::State& state) {
    WeierstrassModel m = curve5();
    KernelPolynomial k = kernel5();
    for (auto _ : state) benchmark::DoNotOptimize(velu(m, k));
}
BENCHMARK(BM_velu);

void BM_tate(benchmark::State& state) {
    WeierstrassModel m = curve5();
    for (auto _ : state) benchmark::DoNotOptimize(tate_algorithm(m, Int(11)));
}
BENCHMARK(BM_tate);

void BM_division_polynomial(benchmark::State& state) {
    WeierstrassModel m = curve5();
    for (auto _ : state) benchmark::DoNotOptimize(division_polynomial(m, 13));
}
BENCHMARK(BM_division_polynomial);

void BM_frobenius_eigenvalue(benchmark::State& state) {
    WeierstrassModel m = curve5();
    KernelPolynomial k = kernel5();
    for (auto _ : state) benchmark::DoNotOptimize(frobenius_eigenvalue(m, k, Int(97)));
}
BENCHMARK(BM_frobenius_eigenvalue);

void BM_verify_entry(benchmark::State& state) {
    WeierstrassModel m = curve5();
    KernelPolynomial k = kernel5();
    for (auto _ : state) {
        IsogenyData iso = build_isogeny(m, k);
        CharacterStudy st = study_character(iso.domain, iso.kernel, bad_primes(iso));
        benchmark::DoNotOptimize(verify_global_report(iso, st.chi, {Int(3), Int(7)}));
    }
}
BENCHMARK(BM_verify_entry);

void BM_grid_verify(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(grid_verify(state.range(0)));
}
BENCHMARK(BM_grid_verify)->Arg(100)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
