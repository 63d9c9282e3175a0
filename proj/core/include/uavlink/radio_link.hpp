#pragma once

#include <optional>
#include <vector>

namespace uavlink::radio {

struct RadioConfig {
    double bandwidth_hz = 5e6;
    double noise_psd_dbm_hz = -174.0;
    double tx_power_w = 5.0;
    int hops = 1;

    void validate() const;

    bool operator==(const RadioConfig&) const = default;
};

/// Transmit power and linear channel gain of one link.
struct Link {
    double power_w = 0.0;
    double gain = 0.0;

    double received_w() const { return power_w * gain; }
};

/// Serving link plus co-channel interferers. `extra` is a single
/// distinguished interferer (for instance a neighbouring UAV) kept apart
/// from the regular interferer sum.
struct LinkSet {
    Link serving;
    std::vector<Link> interferers;
    std::optional<Link> extra;

    void validate() const;
};

/// 10^(-pl/10).
double channel_gain(double path_loss_db);

/// Thermal noise power over the band, in watts.
double noise_power(double psd_dbm_hz, double bandwidth_hz);

double sinr(const LinkSet& links, double noise_w);

/// Shannon spectral efficiency log2(1 + sinr), bit/s/Hz.
double spectral_efficiency(double sinr_linear);

/// Delivered bits per joule: B log2(1 + sinr) / (P_tx * hops).
double energy_efficiency(const RadioConfig& cfg, double sinr_linear);

} // namespace uavlink::radio
