#pragma once

namespace uavlink::channel {

/// Environment and carrier constants of the air-to-ground model.
/// Defaults are the dense-urban values at 28 GHz with the clear-air
/// atmospheric term.
struct ChannelParams {
    double a = 9.61;
    double b = 0.16;
    double eta_los = 1.0;   // dB
    double eta_nlos = 20.0; // dB
    double freq_ghz = 28.0;
    double beta = 0.43;     // dB/km

    /// Throws DomainError naming the offending field.
    void validate() const;

    /// Weight on P_LoS in the mixed path loss: eta_los - eta_nlos.
    double los_weight() const { return eta_los - eta_nlos; }
    /// Constant term: 20 log10(4 pi f / c) + eta_nlos, f in Hz.
    double constant_term() const;

    bool operator==(const ChannelParams&) const = default;
};

/// UAV-to-ground geometry. Construct through the factories so the
/// derived slant distance and elevation stay consistent.
struct LinkGeometry {
    double altitude = 0.0;        // m
    double ground_distance = 0.0; // m
    double slant_distance = 0.0;  // m
    double elevation_deg = 0.0;

    /// From UAV height and horizontal distance.
    static LinkGeometry from_height_distance(double altitude_m, double ground_distance_m);
    /// From slant distance and elevation; 0 and 90 degrees are exact.
    static LinkGeometry from_slant_elevation(double slant_m, double elevation_deg);
};

double elevation_angle(double altitude_m, double ground_distance_m);

double los_probability(double elevation_deg, double a, double b);

struct PathLossBreakdown {
    double total_db = 0.0;
    double p_los = 0.0;
    double atmospheric_db = 0.0;     // beta * d
    double weather_excess_db = 0.0;  // gamma * d
};

PathLossBreakdown path_loss_breakdown(const LinkGeometry& geom, const ChannelParams& ch, double gamma_db_km);

/// Composite LoS/NLoS path loss with atmospheric and weather terms, dB.
inline double path_loss(const LinkGeometry& geom, const ChannelParams& ch, double gamma_db_km)
{
    return path_loss_breakdown(geom, ch, gamma_db_km).total_db;
}

} // namespace uavlink::channel
