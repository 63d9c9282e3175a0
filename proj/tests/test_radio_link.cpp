#include "oracles.hpp"

#include "uavlink/channel.hpp"
#include "uavlink/errors.hpp"
#include "uavlink/radio_link.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace uavlink;
using namespace uavlink::radio;

TEST(ChannelGain, Decades)
{
    EXPECT_EQ(channel_gain(0.0), 1.0);
    EXPECT_NEAR(channel_gain(30.0), 1e-3, 1e-18);
    EXPECT_LT(oracle::relative_error(channel_gain(107.7), oracle::kGain1077), 1e-12);
}

TEST(NoisePower, ThermalFloor)
{
    EXPECT_LT(oracle::relative_error(noise_power(-174.0, 1.0), oracle::kNoise174At1Hz), 1e-12);
    EXPECT_LT(oracle::relative_error(noise_power(-174.0, 5e6), oracle::kNoise174At5MHz), 1e-12);
    EXPECT_NEAR(noise_power(-30.0, 1.0), 1e-6, 1e-20);
    EXPECT_THROW(noise_power(-174.0, 0.0), DomainError);
}

TEST(Sinr, Ratios)
{
    LinkSet links;
    links.serving = {2.0, 1e-12};
    EXPECT_DOUBLE_EQ(sinr(links, 2e-12), 1.0);

    links.serving = {5.0, 1e-10};
    const double base = sinr(links, 2e-14);
    EXPECT_NEAR(base, 2.5e4, 1e-8);

    links.interferers.push_back({1.0, 2e-14});
    EXPECT_NEAR(sinr(links, 2e-14), base / 2.0, 1e-8);

    links.extra = Link{2.0, 1e-14};
    EXPECT_NEAR(sinr(links, 2e-14), base / 3.0, 1e-8);
}

TEST(Sinr, Validation)
{
    LinkSet links;
    links.serving = {1.0, 1e-10};
    EXPECT_THROW(sinr(links, 0.0), DomainError);
    links.interferers.push_back({-1.0, 1e-10});
    EXPECT_THROW(sinr(links, 1e-14), DomainError);
    links.interferers = {{1.0, -1e-10}};
    EXPECT_THROW(sinr(links, 1e-14), DomainError);
}

TEST(Sinr, NonIncreasingInInterferenceProperty)
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> p(0.1, 10.0), g(1e-16, 1e-9), bump(1.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        LinkSet links;
        links.serving = {p(rng), g(rng)};
        for (int m = 0; m < 3; ++m)
            links.interferers.push_back({p(rng), g(rng)});
        links.extra = Link{p(rng), g(rng)};
        const double noise = 2e-14;
        const double before = sinr(links, noise);

        auto more = links;
        more.interferers[i % 3].power_w *= bump(rng);
        EXPECT_LE(sinr(more, noise), before);
        more = links;
        more.interferers[i % 3].gain *= bump(rng);
        EXPECT_LE(sinr(more, noise), before);
        more = links;
        more.extra->power_w *= bump(rng);
        EXPECT_LE(sinr(more, noise), before);
    }
}

TEST(SpectralEfficiency, Shannon)
{
    EXPECT_EQ(spectral_efficiency(0.0), 0.0);
    EXPECT_EQ(spectral_efficiency(1.0), 1.0);
    EXPECT_LT(oracle::relative_error(spectral_efficiency(2.5e4), oracle::kSe25e4), 1e-12);
    EXPECT_THROW(spectral_efficiency(-0.1), DomainError);
}

TEST(EnergyEfficiency, Values)
{
    RadioConfig cfg;
    EXPECT_EQ(energy_efficiency(cfg, 1.0), 1e6);
    EXPECT_EQ(energy_efficiency(cfg, 0.0), 0.0);
    EXPECT_LT(oracle::relative_error(energy_efficiency(cfg, 2.5e4), oracle::kEe25e4), 1e-12);
    cfg.hops = 0;
    EXPECT_THROW(energy_efficiency(cfg, 1.0), DomainError);
    cfg = {};
    cfg.tx_power_w = 0.0;
    EXPECT_THROW(energy_efficiency(cfg, 1.0), DomainError);
}

TEST(EnergyEfficiency, ScalingProperty)
{
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> bw(1e5, 1e8), pw(0.1, 20.0), s(0.0, 1e5), k(0.5, 8.0);
    std::uniform_int_distribution<int> hops(1, 5);
    for (int i = 0; i < 1000; ++i) {
        RadioConfig cfg{bw(rng), -174.0, pw(rng), hops(rng)};
        const double sn = s(rng);
        const double base = energy_efficiency(cfg, sn);
        if (base == 0.0)
            continue;
        const double f = k(rng);
        auto scaled = cfg;
        scaled.bandwidth_hz *= f;
        EXPECT_LE(oracle::relative_error(energy_efficiency(scaled, sn), f * base), 1e-12);
        scaled = cfg;
        scaled.tx_power_w *= f;
        EXPECT_LE(oracle::relative_error(energy_efficiency(scaled, sn), base / f), 1e-12);
        scaled = cfg;
        scaled.hops *= 2;
        EXPECT_LE(oracle::relative_error(energy_efficiency(scaled, sn), base / 2.0), 1e-12);
    }
}

TEST(EnergyEfficiency, DecreasesWithDistance)
{
    const channel::ChannelParams ch;
    const RadioConfig cfg;
    const double noise = noise_power(cfg.noise_psd_dbm_hz, cfg.bandwidth_hz);
    double prev = 1e300;
    for (double d = 100.0; d <= 1000.0; d += 10.0) {
        const auto g = channel::LinkGeometry::from_height_distance(120.0, d);
        LinkSet links;
        links.serving = {cfg.tx_power_w, channel_gain(channel::path_loss(g, ch, 5.8))};
        const double ee = energy_efficiency(cfg, sinr(links, noise));
        EXPECT_LE(ee, prev);
        prev = ee;
    }
}

TEST(ChannelGain, DeterministicForEqualGeometry)
{
    const channel::ChannelParams ch;
    const auto g1 = channel::LinkGeometry::from_height_distance(120.0, 345.0);
    const auto g2 = channel::LinkGeometry::from_height_distance(120.0, 345.0);
    EXPECT_EQ(channel_gain(channel::path_loss(g1, ch, 2.0)), channel_gain(channel::path_loss(g2, ch, 2.0)));
}
