#pragma once

#include "uavlink/scenario.hpp"

#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace uavlink::csv {

inline constexpr std::string_view header =
    "iteration,weather,angle_deg,ground_distance_m,altitude_m,gamma_db_km,path_loss_db,"
    "weather_excess_db,sinr,spectral_eff_bps_hz,ee_bits_per_joule,coverage_radius_m";

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// Header plus one line per row, '\n' terminated. Throws
/// std::runtime_error when the stream fails.
void write_csv(std::span<const scenario::SweepRow> rows, std::ostream& out);

} // namespace uavlink::csv
