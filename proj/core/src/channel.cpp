#include "uavlink/channel.hpp"

#include "uavlink/errors.hpp"
#include "uavlink/units.hpp"

#include <cmath>
#include <numbers>

namespace uavlink::channel {

using detail::require;

void ChannelParams::validate() const
{
    require(a > 0.0, "channel parameter a must be > 0");
    require(b > 0.0, "channel parameter b must be > 0");
    require(eta_nlos >= eta_los, "eta_nlos must be >= eta_los");
    require(freq_ghz > 0.0, "carrier frequency must be > 0 GHz");
    require(beta >= 0.0, "atmospheric attenuation beta must be >= 0 dB/km");
}

double ChannelParams::constant_term() const
{
    const double f_hz = units::ghz_to_hz(freq_ghz);
    return 20.0 * std::log10(4.0 * std::numbers::pi * f_hz / units::speed_of_light) + eta_nlos;
}

double elevation_angle(double altitude_m, double ground_distance_m)
{
    require(altitude_m >= 0.0, "altitude must be >= 0 m");
    require(ground_distance_m >= 0.0, "ground distance must be >= 0 m");
    if (altitude_m == 0.0 && ground_distance_m == 0.0)
        throw GeometryError("UAV and ground node coincide (h = 0, r = 0)");
    return units::rad_to_deg(std::atan2(altitude_m, ground_distance_m));
}

LinkGeometry LinkGeometry::from_height_distance(double altitude_m, double ground_distance_m)
{
    LinkGeometry g;
    g.elevation_deg = elevation_angle(altitude_m, ground_distance_m);
    g.altitude = altitude_m;
    g.ground_distance = ground_distance_m;
    g.slant_distance = std::hypot(altitude_m, ground_distance_m);
    return g;
}

LinkGeometry LinkGeometry::from_slant_elevation(double slant_m, double elevation_deg)
{
    require(slant_m > 0.0, "slant distance must be > 0 m");
    require(elevation_deg >= 0.0 && elevation_deg <= 90.0, "elevation must lie in [0, 90] degrees");
    LinkGeometry g;
    g.slant_distance = slant_m;
    g.elevation_deg = elevation_deg;
    if (elevation_deg == 90.0) {
        g.altitude = slant_m;
        g.ground_distance = 0.0;
    } else if (elevation_deg == 0.0) {
        g.altitude = 0.0;
        g.ground_distance = slant_m;
    } else {
        const double rad = units::deg_to_rad(elevation_deg);
        g.altitude = slant_m * std::sin(rad);
        g.ground_distance = slant_m * std::cos(rad);
    }
    return g;
}

double los_probability(double elevation_deg, double a, double b)
{
    require(elevation_deg >= 0.0 && elevation_deg <= 90.0, "elevation must lie in [0, 90] degrees");
    return 1.0 / (1.0 + a * std::exp(-b * (elevation_deg - a)));
}

PathLossBreakdown path_loss_breakdown(const LinkGeometry& geom, const ChannelParams& ch, double gamma_db_km)
{
    require(gamma_db_km >= 0.0, "weather attenuation must be >= 0 dB/km");
    if (!(geom.slant_distance > 0.0))
        throw GeometryError("slant distance is zero; path loss is undefined");

    const double d_km = units::m_to_km(geom.slant_distance);
    PathLossBreakdown out;
    out.p_los = los_probability(geom.elevation_deg, ch.a, ch.b);
    out.atmospheric_db = ch.beta * d_km;
    out.weather_excess_db = gamma_db_km * d_km;
    out.total_db = ch.los_weight() * out.p_los + 20.0 * std::log10(geom.slant_distance) +
                   ch.constant_term() + out.atmospheric_db + out.weather_excess_db;
    return out;
}

} // namespace uavlink::channel
