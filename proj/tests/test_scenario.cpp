#include "uavlink/errors.hpp"
#include "uavlink/scenario.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace uavlink;
using namespace uavlink::scenario;

namespace {

ScenarioConfig preset_config(Experiment kind)
{
    ScenarioConfig cfg;
    cfg.weather_list = default_weather_list(28.0);
    apply_preset(cfg, experiment_preset(kind));
    return cfg;
}

} // namespace

TEST(GroundNodes, EmptyAndInsideDisc)
{
    EXPECT_TRUE(place_ground_nodes(1, 0, 10.0).empty());
    for (const auto& p : place_ground_nodes(42, 5000, 250.0))
        EXPECT_LE(p.x * p.x + p.y * p.y, 250.0 * 250.0);
    EXPECT_THROW(place_ground_nodes(1, 1, 0.0), DomainError);
}

TEST(GroundNodes, DeterministicPerSeed)
{
    EXPECT_EQ(place_ground_nodes(9, 100, 1000.0), place_ground_nodes(9, 100, 1000.0));
    EXPECT_NE(place_ground_nodes(9, 1, 1.0), place_ground_nodes(10, 1, 1.0));
}

TEST(GroundNodes, UniformOverArea)
{
    // Half the points should fall inside radius R / sqrt(2).
    const double radius = 100.0;
    const auto pts = place_ground_nodes(77, 20000, radius);
    int inner = 0;
    for (const auto& p : pts)
        inner += std::hypot(p.x, p.y) <= radius / std::sqrt(2.0);
    EXPECT_NEAR(inner / 20000.0, 0.5, 0.015);
}

TEST(DeriveSeed, DistinctPerIndex)
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i)
        seen.insert(derive_seed(123, i));
    EXPECT_EQ(seen.size(), 1000u);
    EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
    EXPECT_NE(derive_seed(5, 3), derive_seed(6, 3));
}

TEST(Grid, Values)
{
    EXPECT_EQ((Grid{0.0, 90.0, 1.0}.values().size()), 91u);
    EXPECT_EQ((Grid{100.0, 1000.0, 100.0}.values().size()), 10u);
    EXPECT_EQ((Grid{0.0, 1.0, 0.1}.values().back()), 1.0);
    EXPECT_EQ((Grid{5.0, 5.0, 1.0}.values().size()), 1u);
    EXPECT_THROW((Grid{1.0, 0.0, 1.0}.validate("g")), DomainError);
    EXPECT_THROW((Grid{0.0, 1.0, 0.0}.validate("g")), DomainError);
}

TEST(Presets, Fragments)
{
    const auto f4 = experiment_preset(Experiment::f4);
    ASSERT_TRUE(f4.angle_grid);
    EXPECT_EQ(f4.angle_grid->values().size(), 91u);
    EXPECT_EQ(f4.slant_distance_m, 1000.0);

    const auto f5 = experiment_preset(Experiment::f5);
    EXPECT_EQ(f5.altitude_m, 120.0);
    ASSERT_TRUE(f5.distance_grid);
    EXPECT_EQ(f5.distance_grid->values().front(), 100.0);
    EXPECT_EQ(f5.distance_grid->values().back(), 1000.0);
    EXPECT_EQ(f5.distance_grid->values().size(), 10u);

    const auto f6 = experiment_preset(Experiment::f6);
    EXPECT_TRUE(f6.coverage);
    EXPECT_TRUE(f6.altitude_grid);
}

TEST(Experiment, Names)
{
    EXPECT_EQ(parse_experiment("f6"), Experiment::f6);
    EXPECT_EQ(to_string(Experiment::grid), "grid");
    EXPECT_THROW(parse_experiment("f9"), LookupError);
}

TEST(RunSweep, RowCountAndOrder)
{
    auto cfg = preset_config(Experiment::f5);
    cfg.iterations = 2;
    const auto rows = run_sweep(cfg);
    ASSERT_EQ(rows.size(), 2u * 3u * 10u);
    EXPECT_EQ(rows.front().iteration, 1);
    EXPECT_EQ(rows.front().weather, "rain");
    EXPECT_EQ(rows[10].weather, "fog");
    EXPECT_EQ(rows[30].iteration, 2);
    EXPECT_EQ(rows[9].ground_distance_m, 1000.0);
    for (const auto& r : rows) {
        EXPECT_FALSE(r.coverage_radius_m);
        EXPECT_EQ(r.altitude_m, 120.0);
    }
}

TEST(RunSweep, TenPointGrid)
{
    auto cfg = preset_config(Experiment::f4);
    cfg.angle_grid = {0.0, 90.0, 10.0};
    EXPECT_EQ(run_sweep(cfg).size(), 30u);
}

TEST(RunSweep, F5EnergyEfficiencyDecreasing)
{
    const auto rows = run_sweep(preset_config(Experiment::f5));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].weather == rows[i - 1].weather)
            EXPECT_LT(rows[i].ee_bits_per_joule, rows[i - 1].ee_bits_per_joule);
    }
}

TEST(RunSweep, F4PresetFogAboveRain)
{
    auto cfg = preset_config(Experiment::f4);
    cfg.weather_list = {weather::WeatherSpec::preset("moderate rain", "rain"),
                        weather::WeatherSpec::preset("moderate fog", "fog")};
    const auto rows = run_sweep(cfg);
    ASSERT_EQ(rows.size(), 182u);
    for (std::size_t i = 0; i < 91; ++i) {
        EXPECT_EQ(rows[i].angle_deg, rows[i + 91].angle_deg);
        EXPECT_GT(rows[i + 91].path_loss_db, rows[i].path_loss_db);
        EXPECT_DOUBLE_EQ(rows[i].weather_excess_db, 5.8);
    }
}

TEST(RunSweep, F6ReportsEdgeOfCoverage)
{
    const auto cfg = preset_config(Experiment::f6);
    const auto rows = run_sweep(cfg);
    ASSERT_EQ(rows.size(), 3u * 50u);
    for (const auto& r : rows) {
        ASSERT_TRUE(r.coverage_radius_m);
        EXPECT_EQ(r.ground_distance_m, *r.coverage_radius_m);
        if (*r.coverage_radius_m > 0.0)
            EXPECT_LE(r.path_loss_db, cfg.coverage.pl_max);
    }
    // 490 m is too high for a 110 dB budget even directly below.
    EXPECT_EQ(*rows[48].coverage_radius_m, 0.0);
}

TEST(RunSweep, GridModeUsesPlacement)
{
    ScenarioConfig cfg;
    cfg.weather_list = default_weather_list(28.0);
    cfg.n_nodes = 7;
    cfg.iterations = 3;
    const auto rows = run_sweep(cfg);
    ASSERT_EQ(rows.size(), 3u * 3u * 7u);
    // Same GN set for every condition within an iteration.
    for (std::size_t i = 0; i < 7; ++i)
        EXPECT_EQ(rows[i].ground_distance_m, rows[7 + i].ground_distance_m);
    EXPECT_NE(rows[0].ground_distance_m, rows[21].ground_distance_m);
    for (const auto& r : rows) {
        EXPECT_TRUE(r.coverage_radius_m);
        EXPECT_LE(r.ground_distance_m, cfg.node_radius_m);
        EXPECT_TRUE(std::isfinite(r.sinr));
    }
    cfg.n_nodes = 0;
    EXPECT_TRUE(run_sweep(cfg).empty());
}

TEST(RunSweep, IndependentOfWorkerCount)
{
    ScenarioConfig cfg;
    cfg.weather_list = default_weather_list(28.0);
    cfg.n_nodes = 40;
    cfg.iterations = 4;
    const auto one = run_sweep(cfg, 1);
    EXPECT_EQ(one, run_sweep(cfg, 3));
    EXPECT_EQ(one, run_sweep(cfg, 8));

    cfg.master_seed = 2;
    EXPECT_NE(one, run_sweep(cfg, 1));
}

TEST(RunSweep, InterferersLowerSinr)
{
    auto cfg = preset_config(Experiment::f5);
    const auto clean = run_sweep(cfg);
    cfg.interferers = {{1.0, 800.0}};
    cfg.extra_interferer = Interferer{2.0, 600.0};
    const auto noisy = run_sweep(cfg);
    for (std::size_t i = 0; i < clean.size(); ++i) {
        EXPECT_LT(noisy[i].sinr, clean[i].sinr);
        EXPECT_EQ(noisy[i].path_loss_db, clean[i].path_loss_db);
    }
}

TEST(RunSweep, ValidatesConfig)
{
    auto cfg = preset_config(Experiment::f5);
    cfg.iterations = 0;
    EXPECT_THROW(run_sweep(cfg), DomainError);
    cfg = preset_config(Experiment::f5);
    cfg.weather_list.clear();
    EXPECT_THROW(run_sweep(cfg), DomainError);
}

TEST(RunSweep, ModelErrorsNameTheGridPoint)
{
    auto cfg = preset_config(Experiment::f5);
    cfg.weather_list = {weather::WeatherSpec::rain({12.5, 0.0, 1.0}, "bad-rain")};
    try {
        run_sweep(cfg);
        FAIL() << "expected DomainError";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("bad-rain"), std::string::npos);
    }

    // Interferer co-located with the GN at ground level: degenerate at 0 deg.
    cfg = preset_config(Experiment::f4);
    cfg.angle_grid = {0.0, 10.0, 5.0};
    cfg.interferers = {{1.0, 1.0}};
    cfg.slant_distance_m = 1000.0;
    EXPECT_NO_THROW(run_sweep(cfg));

    // Distance 0 at altitude h is fine; f4 at 90 degrees too.
    cfg = preset_config(Experiment::f4);
    cfg.angle_grid = {90.0, 90.0, 1.0};
    EXPECT_EQ(run_sweep(cfg).size(), 3u);
}

TEST(DefaultWeather, RequiresKnownCarrier)
{
    EXPECT_EQ(default_weather_list(60.0).size(), 3u);
    EXPECT_THROW(default_weather_list(39.0), DomainError);
}
