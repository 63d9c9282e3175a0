#include "uavlink/radio_link.hpp"

#include "uavlink/errors.hpp"

#include <cmath>

namespace uavlink::radio {

using detail::require;

void RadioConfig::validate() const
{
    require(bandwidth_hz > 0.0, "bandwidth must be > 0 Hz");
    require(tx_power_w > 0.0, "tx_power must be > 0 W");
    require(hops >= 1, "hops must be >= 1");
}

void LinkSet::validate() const
{
    auto check = [](const Link& l) {
        require(l.power_w > 0.0, "link power must be > 0 W");
        require(l.gain >= 0.0, "link gain must be >= 0");
    };
    check(serving);
    for (const auto& l : interferers)
        check(l);
    if (extra)
        check(*extra);
}

double channel_gain(double path_loss_db)
{
    return std::pow(10.0, -path_loss_db / 10.0);
}

double noise_power(double psd_dbm_hz, double bandwidth_hz)
{
    require(bandwidth_hz > 0.0, "bandwidth must be > 0 Hz");
    return std::pow(10.0, (psd_dbm_hz + 10.0 * std::log10(bandwidth_hz) - 30.0) / 10.0);
}

double sinr(const LinkSet& links, double noise_w)
{
    require(noise_w > 0.0, "noise power must be > 0 W");
    links.validate();
    double interference = 0.0;
    for (const auto& l : links.interferers)
        interference += l.received_w();
    if (links.extra)
        interference += links.extra->received_w();
    return links.serving.received_w() / (interference + noise_w);
}

double spectral_efficiency(double sinr_linear)
{
    require(sinr_linear >= 0.0, "SINR must be >= 0");
    return std::log2(1.0 + sinr_linear);
}

double energy_efficiency(const RadioConfig& cfg, double sinr_linear)
{
    cfg.validate();
    return cfg.bandwidth_hz * spectral_efficiency(sinr_linear) / (cfg.tx_power_w * cfg.hops);
}

} // namespace uavlink::radio
