#include <benchmark/benchmark.h>

#include <xaax/canonical_forms.hpp>
#include <xaax/lie_tools.hpp>
#include <xaax/linalg.hpp>
#include <xaax/oracle.hpp>
#include <xaax/pascal_delta.hpp>
#include <xaax/solver.hpp>

namespace {

xaax::CanonicalSpec hard_spec(std::size_t n) {
    xaax::CanonicalSpec spec{n, 0};
    spec.mu = spec.hard_case_mu();
    return spec;
}

void BM_Delta(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(xaax::delta(n));
}
BENCHMARK(BM_Delta)->DenseRange(2, 16, 2);

void BM_ExplicitBasis(benchmark::State& state) {
    const auto spec = hard_spec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(xaax::explicit_basis(spec));
}
BENCHMARK(BM_ExplicitBasis)->DenseRange(2, 12, 2);

// Full kernel computation: dominated by RREF of a (2n)^2 x (2n)^2 system.
void BM_OracleBasis(benchmark::State& state) {
    const auto a = xaax::h_block(hard_spec(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(xaax::oracle_basis(a));
}
BENCHMARK(BM_OracleBasis)->DenseRange(1, 8)->Unit(benchmark::kMillisecond);

void BM_SpanEqual(benchmark::State& state) {
    const auto spec = hard_spec(static_cast<std::size_t>(state.range(0)));
    const auto ours = xaax::explicit_basis(spec);
    const auto theirs = xaax::oracle_basis(xaax::h_block(spec));
    for (auto _ : state)
        benchmark::DoNotOptimize(xaax::span_equal(ours.elements, theirs.elements));
}
BENCHMARK(BM_SpanEqual)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_StructureConstants(benchmark::State& state) {
    const auto basis = xaax::explicit_basis(hard_spec(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(xaax::structure_constants(basis));
}
BENCHMARK(BM_StructureConstants)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
