#include <benchmark/benchmark.h>

#include "uavlink/channel.hpp"
#include "uavlink/coverage.hpp"
#include "uavlink/scenario.hpp"
#include "uavlink/weather.hpp"

using namespace uavlink;

static void BMWaterPermittivity(benchmark::State& state)
{
    double f = 28.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(weather::water_permittivity(f, 293.15));
    }
}
BENCHMARK(BMWaterPermittivity);

static void BMPathLoss(benchmark::State& state)
{
    const channel::ChannelParams ch;
    const auto geom = channel::LinkGeometry::from_height_distance(120.0, 350.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(channel::path_loss(geom, ch, 5.8));
    }
}
BENCHMARK(BMPathLoss);

static void BMCoverageRadius(benchmark::State& state)
{
    coverage::CoverageProblem prob;
    prob.gamma = 5.8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(coverage::coverage_radius(120.0, prob));
    }
}
BENCHMARK(BMCoverageRadius);

static void BMOptimalAltitude(benchmark::State& state)
{
    coverage::CoverageProblem prob;
    prob.h_min = 10.0;
    prob.h_max = 300.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(coverage::optimal_altitude(prob, 1.0));
    }
}
BENCHMARK(BMOptimalAltitude)->Unit(benchmark::kMillisecond);

// Arg: worker threads.
static void BMSweepF6(benchmark::State& state)
{
    scenario::ScenarioConfig cfg;
    cfg.weather_list = scenario::default_weather_list(28.0);
    scenario::apply_preset(cfg, scenario::experiment_preset(scenario::Experiment::f6));
    for (auto _ : state) {
        auto rows = scenario::run_sweep(cfg, static_cast<unsigned>(state.range(0)));
        benchmark::DoNotOptimize(rows.data());
    }
}
BENCHMARK(BMSweepF6)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
