#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace uavlink::weather {

// Units at this boundary: GHz, kelvin, mm/h, g/m^3, cm; results in dB/km.

/// Power-law rain model gamma = k * R^alpha.
struct RainParams {
    double rate = 12.5; // mm/h
    double k = 0.0;
    double alpha = 0.0;
};

/// Rayleigh fog/cloud model driven by liquid water density.
struct FogParams {
    double density = 0.05;        // g/m^3
    double temperature = 293.15;  // K
};

struct SnowParams {
    double rate = 5.0;       // mm/h
    double wavelength = 0.0; // cm
};

/// Complex relative permittivity of liquid water.
struct Permittivity {
    double real_part = 0.0;
    double imag_part = 0.0;
    double eta = 0.0; // (2 + real_part) / imag_part
    // Intermediates, exposed for inspection and testing.
    double static_eps = 0.0;   // epsilon_0
    double primary_relax_ghz = 0.0;
    double secondary_relax_ghz = 0.0;
};

/// Rain k/alpha defaults per carrier. Horizontal-polarisation pairs from
/// the ITU-R P.838-3 table, shipped for the two carriers the simulator
/// targets. Other carriers must supply k and alpha explicitly.
struct RainCoefficients {
    double k;
    double alpha;
};
std::optional<RainCoefficients> default_rain_coefficients(double freq_ghz);

double rain_attenuation(const RainParams& p);
Permittivity water_permittivity(double freq_ghz, double temp_k);
/// K1(f, T) in (dB/km)/(g/m^3).
double fog_coefficient(double freq_ghz, double temp_k);
double fog_attenuation(const FogParams& p, double freq_ghz);
double snow_attenuation(const SnowParams& p);

/// Tabulated specific attenuation per weather condition, dB/km.
inline constexpr std::array<std::pair<std::string_view, double>, 7> preset_table{{
    {"clear air", 0.43},
    {"haze", 4.2},
    {"moderate rain", 5.8},
    {"heavy rain", 9.2},
    {"light fog", 20.0},
    {"moderate fog", 42.2},
    {"heavy fog", 125.0},
}};

double preset_attenuation(std::string_view name);

struct Clear {};
struct Preset {
    std::string name;
};

/// One weather condition: parametric model, tabulated preset, or clear.
/// Clear contributes no excess attenuation; the clear-air constant is
/// carried by the channel's atmospheric term instead.
struct WeatherSpec {
    using Model = std::variant<Clear, RainParams, FogParams, SnowParams, Preset>;

    std::string label;
    Model model;

    static WeatherSpec clear(std::string label = "clear") { return {std::move(label), Clear{}}; }
    static WeatherSpec rain(RainParams p, std::string label = "rain") { return {std::move(label), p}; }
    static WeatherSpec fog(FogParams p, std::string label = "fog") { return {std::move(label), p}; }
    static WeatherSpec snow(SnowParams p, std::string label = "snow") { return {std::move(label), p}; }
    static WeatherSpec preset(std::string name, std::string label);
};

/// Specific attenuation gamma in dB/km for a condition at the given carrier.
double resolve(const WeatherSpec& spec, double freq_ghz);

} // namespace uavlink::weather
