#pragma once

#include "uavlink/scenario.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uavlink::config {

/// Which attenuation model feeds each weather condition.
enum class AttenuationMode { parametric, preset, both };

std::string_view to_string(AttenuationMode m);
AttenuationMode parse_mode(std::string_view name);

struct RainSection {
    double rate = 12.5; // mm/h
    std::optional<double> k;
    std::optional<double> alpha;
    std::string preset = "moderate rain";

    bool operator==(const RainSection&) const = default;
};

struct FogSection {
    double density = 0.05;       // g/m^3
    double temperature = 293.15; // K
    std::string preset = "moderate fog";

    bool operator==(const FogSection&) const = default;
};

struct SnowSection {
    double rate = 5.0;                 // mm/h
    std::optional<double> wavelength;  // cm; derived from the carrier when unset
    std::optional<std::string> preset; // no tabulated snow value by default

    bool operator==(const SnowSection&) const = default;
};

struct SweepSection {
    std::vector<std::string> conditions{"rain", "fog", "snow"};
    int iterations = 1;
    std::uint64_t n_nodes = 10;
    std::uint64_t seed = 1;
    double altitude = 120.0;        // m
    double slant_distance = 1000.0; // m
    double node_radius = 1000.0;    // m
    scenario::Grid angle_grid{0.0, 90.0, 1.0};
    scenario::Grid distance_grid{100.0, 1000.0, 100.0};
    scenario::Grid altitude_grid{10.0, 500.0, 10.0};

    bool operator==(const SweepSection&) const = default;
};

/// Contents of a configuration document. Every key has a default, so an
/// empty document is a complete configuration.
struct Settings {
    channel::ChannelParams channel;
    radio::RadioConfig radio;
    std::vector<scenario::Interferer> interferers;
    std::optional<scenario::Interferer> extra_interferer;
    RainSection rain;
    FogSection fog;
    SnowSection snow;
    scenario::CoverageSettings coverage;
    SweepSection sweep;

    /// Throws ConfigError naming the offending key.
    void validate() const;

    /// Weather list for the chosen mode. Labels are the condition names
    /// ("rain", "fog", "snow", "clear"); in `both` mode each condition
    /// yields "<name>/parametric" then "<name>/preset".
    std::vector<weather::WeatherSpec> weather_list(AttenuationMode mode) const;

    scenario::ScenarioConfig to_scenario(scenario::Experiment experiment, AttenuationMode mode,
                                         std::optional<std::uint64_t> seed_override = std::nullopt) const;

    bool operator==(const Settings&) const = default;
};

/// Parses sectioned `key = value` text. Unknown sections or keys, bad
/// values and invariant violations raise ConfigError with the line
/// number or key name.
Settings parse_config(std::string_view text);
Settings load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config(serialize(s)) == s.
std::string serialize(const Settings& s);

} // namespace uavlink::config
