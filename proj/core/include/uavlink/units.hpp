#pragma once

#include <cmath>
#include <numbers>

namespace uavlink::units {

inline constexpr double speed_of_light = 299'792'458.0; // m/s

constexpr double ghz_to_hz(double ghz) { return ghz * 1e9; }
constexpr double m_to_km(double m) { return m / 1000.0; }
constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Free-space wavelength in centimetres for a carrier in GHz.
constexpr double wavelength_cm(double freq_ghz)
{
    return speed_of_light / ghz_to_hz(freq_ghz) * 100.0;
}

inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

} // namespace uavlink::units
