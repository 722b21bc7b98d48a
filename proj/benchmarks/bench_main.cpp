#include <benchmark/benchmark.h>

#include "hkt/hopf.hpp"
#include "hkt/slice.hpp"

using namespace hkt;

static void BM_BuildHopf(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_hopf(HopfSpec(2)));
}
BENCHMARK(BM_BuildHopf)->Unit(benchmark::kMillisecond);

static void BM_TwistedDHopfForm(benchmark::State& state) {
    const HopfGeometry geo = build_hopf(HopfSpec(2));
    const auto& s = geo.structures[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state) benchmark::DoNotOptimize(twisted_d(s.L, s.omega));
}
BENCHMARK(BM_TwistedDHopfForm)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

static void BM_TypeProjection(benchmark::State& state) {
    const HopfGeometry geo = build_hopf(HopfSpec(2));
    const Mat4 L = HypercomplexFrame::right().structure(AxisTriple(Rational(3, 5), Rational(4, 5), 0));
    for (auto _ : state) benchmark::DoNotOptimize(pq_project(L, geo.H_plus, 2, 1));
}
BENCHMARK(BM_TypeProjection)->Unit(benchmark::kMicrosecond);

static void BM_Curvature(benchmark::State& state) {
    const TorusSpec spec(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const Connection A{random_field(spec, 1, 1, 0.3)};
    for (auto _ : state) benchmark::DoNotOptimize(curvature(A));
    state.SetItemsProcessed(state.iterations() * A.A.sites());
}
BENCHMARK(BM_Curvature)->Args({4, 2})->Args({6, 2})->Args({8, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

static void BM_FlowStep(benchmark::State& state) {
    const TorusSpec spec(static_cast<int>(state.range(0)), 2);
    Connection A0 = cartan_connection(spec, {0.31, 0.17, 0.23, 0.41});
    A0.A += 1e-2 * random_field(spec, 1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(ym_flow(A0, spec.orientation(), {0.004, 1, 0.0}));
}
BENCHMARK(BM_FlowStep)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_HorizontalSlice(benchmark::State& state) {
    const TorusSpec spec(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const Connection A = zero_connection(spec);
    for (auto _ : state) benchmark::DoNotOptimize(horizontal_slice(spec, A, spec.frame.I));
}
BENCHMARK(BM_HorizontalSlice)->Args({4, 2})->Args({4, 3})->Args({6, 2})->Unit(benchmark::kMillisecond);

static void BM_ModuliStructure(benchmark::State& state) {
    const TorusSpec spec(4, static_cast<int>(state.range(0)));
    const TangentBasis tb = horizontal_slice(spec, zero_connection(spec), spec.frame.I);
    for (auto _ : state) benchmark::DoNotOptimize(verify_moduli_structure(spec, tb));
}
BENCHMARK(BM_ModuliStructure)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
