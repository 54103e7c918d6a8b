#include <benchmark/benchmark.h>

#include "dsm/forward.hpp"
#include "dsm/imaging.hpp"
#include "dsm/special_functions.hpp"
#include "fixtures.hpp"

namespace {

void BM_BesselSequence(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dsm::special::bessel_j_sequence(order, x));
        x = x < 30.0 ? x + 0.37 : 0.5;
    }
}
BENCHMARK(BM_BesselSequence)->Arg(20)->Arg(60)->Arg(120);

void BM_SynthPoint(benchmark::State& state) {
    const dsm::Scenario s = dsm::fixtures::example1();
    for (auto _ : state) {
        benchmark::DoNotOptimize(dsm::synth_point(s, dsm::FieldMode::asymptotic));
    }
}
BENCHMARK(BM_SynthPoint);

void BM_IndicatorMap(benchmark::State& state) {
    const dsm::Scenario s = dsm::fixtures::example1();
    const auto data = dsm::synth_point(s, dsm::FieldMode::asymptotic);
    const dsm::ExecPolicy policy{static_cast<unsigned>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(dsm::indicator_map(data, s, dsm::FieldMode::asymptotic, policy));
    }
}
BENCHMARK(BM_IndicatorMap)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_AnalyticPhiMap(benchmark::State& state) {
    const dsm::Scenario s = dsm::fixtures::example1();
    const int order = dsm::minimum_truncation_order(s);
    const dsm::ExecPolicy policy{static_cast<unsigned>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(dsm::analytic_phi_map(s, order, policy));
    }
}
BENCHMARK(BM_AnalyticPhiMap)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_SynthExtended(benchmark::State& state) {
    const dsm::Scenario s = dsm::fixtures::example2();
    for (auto _ : state) {
        benchmark::DoNotOptimize(dsm::synth_extended(s, static_cast<int>(state.range(0)), dsm::FieldMode::asymptotic));
    }
}
BENCHMARK(BM_SynthExtended)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
