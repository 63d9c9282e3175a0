#pragma once

#include "uavlink/channel.hpp"
#include "uavlink/radio_link.hpp"
#include "uavlink/weather.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uavlink::scenario {

enum class Experiment { f4, f5, f6, grid };

std::string_view to_string(Experiment e);
/// Throws LookupError for anything but "f4", "f5", "f6", "grid".
Experiment parse_experiment(std::string_view name);

/// Inclusive arithmetic grid start, start + step, ..., stop.
struct Grid {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    /// Points are computed as start + i * step, so no error accumulates.
    std::vector<double> values() const;
    void validate(std::string_view name) const;

    bool operator==(const Grid&) const = default;
};

/// Co-channel transmitter at the serving UAV's altitude, `distance_m`
/// horizontally from the ground node, seen through the same channel and
/// weather as the serving link.
struct Interferer {
    double power_w = 0.0;
    double distance_m = 0.0;

    bool operator==(const Interferer&) const = default;
};

struct CoverageSettings {
    double pl_max = 110.0;       // dB; sample budget, not a measured value
    double tolerance = 1e-3;     // m
    double radius_limit = 100e3; // m

    bool operator==(const CoverageSettings&) const = default;
};

struct ScenarioConfig {
    std::vector<weather::WeatherSpec> weather_list;
    channel::ChannelParams channel;
    radio::RadioConfig radio;
    std::vector<Interferer> interferers;
    std::optional<Interferer> extra_interferer;
    CoverageSettings coverage;

    Experiment experiment = Experiment::grid;
    Grid angle_grid{0.0, 90.0, 1.0};
    Grid distance_grid{100.0, 1000.0, 100.0};
    Grid altitude_grid{10.0, 500.0, 10.0};
    double altitude_m = 120.0;        // fixed UAV height for f5 and grid
    double slant_distance_m = 1000.0; // fixed slant range for f4
    double node_radius_m = 1000.0;    // GN scatter disc for grid
    std::size_t n_nodes = 10;
    int iterations = 1;
    std::uint64_t master_seed = 1;

    void validate() const;
};

/// Settings an experiment fixes; fields left empty keep the config value.
struct ExperimentPreset {
    Experiment kind = Experiment::grid;
    std::optional<Grid> angle_grid;
    std::optional<Grid> distance_grid;
    std::optional<Grid> altitude_grid;
    std::optional<double> altitude_m;
    std::optional<double> slant_distance_m;
    std::optional<CoverageSettings> coverage;
};

/// f4 sweeps elevation 0..90 deg at a fixed 1000 m slant range; f5 sweeps
/// ground distance 100..1000 m at 120 m altitude; f6 sweeps altitude and
/// solves the coverage radius at each point.
ExperimentPreset experiment_preset(Experiment kind);
void apply_preset(ScenarioConfig& cfg, const ExperimentPreset& preset);

/// Three default conditions: power-law rain, Rayleigh fog, snow; the
/// rain coefficients are the carrier defaults.
std::vector<weather::WeatherSpec> default_weather_list(double freq_ghz);

struct Position {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Position&) const = default;
};

/// SplitMix64 finalizer applied to master_seed + golden-gamma * (index + 1).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

/// n points uniform on the disc of the given radius, centred under the
/// UAV. mt19937_64 draws are mapped to [0, 1) with 53-bit precision so
/// the stream is identical across standard libraries.
std::vector<Position> place_ground_nodes(std::uint64_t seed, std::size_t n, double radius_m);

struct SweepRow {
    int iteration = 0;
    std::string weather;
    double angle_deg = 0.0;
    double ground_distance_m = 0.0;
    double altitude_m = 0.0;
    double gamma_db_km = 0.0;
    double path_loss_db = 0.0;
    double weather_excess_db = 0.0;
    double sinr = 0.0;
    double spectral_eff = 0.0;
    double ee_bits_per_joule = 0.0;
    std::optional<double> coverage_radius_m;

    bool operator==(const SweepRow&) const = default;
};

/// Runs the sweep: iterations outermost, then weather conditions, then
/// the experiment grid. Rows come back in that order for any `workers`.
std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg, unsigned workers = 1);

} // namespace uavlink::scenario
