#include <jcs/channel.hpp>
#include <jcs/opa.hpp>
#include <jcs/scenario.hpp>

#include <benchmark/benchmark.h>

namespace {

jcs::ChannelRealization paper_gains() {
    const jcs::Scenario sc = jcs::paper_defaults();
    return jcs::mean_surrogate(jcs::derive_variances(sc.params, sc.geometry));
}

void BM_SolveScd(benchmark::State& state) {
    const jcs::SystemParams p = jcs::paper_defaults().params;
    const jcs::ChannelRealization g = paper_gains();
    for (auto _ : state) benchmark::DoNotOptimize(jcs::solve_scd(p, g));
}
BENCHMARK(BM_SolveScd)->Unit(benchmark::kMicrosecond);

void BM_SolveCcd(benchmark::State& state) {
    const jcs::SystemParams p = jcs::paper_defaults().params;
    const jcs::ChannelRealization g = paper_gains();
    for (auto _ : state) benchmark::DoNotOptimize(jcs::solve_ccd(p, g));
}
BENCHMARK(BM_SolveCcd)->Unit(benchmark::kMicrosecond);

void BM_GridOracle(benchmark::State& state) {
    const jcs::SystemParams p = jcs::paper_defaults().params;
    const jcs::ChannelRealization g = paper_gains();
    const auto res = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(jcs::grid_oracle(jcs::Problem::CCD, p, g, res, 1));
}
BENCHMARK(BM_GridOracle)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
