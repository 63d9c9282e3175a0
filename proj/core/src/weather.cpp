#include "uavlink/weather.hpp"

#include "uavlink/errors.hpp"

#include <cmath>

namespace uavlink::weather {

namespace {

using detail::require;

std::string preset_labels()
{
    std::string out;
    for (const auto& [name, value] : preset_table) {
        if (!out.empty())
            out += ", ";
        out += '"';
        out += name;
        out += '"';
    }
    return out;
}

} // namespace

std::optional<RainCoefficients> default_rain_coefficients(double freq_ghz)
{
    if (freq_ghz == 28.0)
        return RainCoefficients{0.2051, 0.9679};
    if (freq_ghz == 60.0)
        return RainCoefficients{0.8606, 0.7656};
    return std::nullopt;
}

double rain_attenuation(const RainParams& p)
{
    require(p.rate >= 0.0, "rain rate must be >= 0 mm/h");
    require(p.k > 0.0, "rain coefficient k must be > 0");
    require(p.alpha > 0.0, "rain exponent alpha must be > 0");
    return p.k * std::pow(p.rate, p.alpha);
}

Permittivity water_permittivity(double freq_ghz, double temp_k)
{
    require(freq_ghz > 0.0, "frequency must be > 0 GHz");
    require(temp_k > 0.0, "temperature must be > 0 K");

    // Double-Debye model of liquid water.
    const double theta = 300.0 / temp_k;
    const double eps0 = 77.66 + 103.3 * (theta - 1.0);
    const double eps1 = 0.0671 * eps0;
    const double eps2 = 3.52;
    const double fp = 20.20 - 146.0 * (theta - 1.0) + 316.0 * (theta - 1.0) * (theta - 1.0);
    const double fs = 39.8 * fp;

    const double rp = freq_ghz / fp;
    const double rs = freq_ghz / fs;
    const double dp = 1.0 + rp * rp;
    const double ds = 1.0 + rs * rs;

    Permittivity out;
    out.imag_part = freq_ghz * (eps0 - eps1) / (fp * dp) + freq_ghz * (eps1 - eps2) / (fs * ds);
    out.real_part = (eps0 - eps1) / dp + (eps1 - eps2) / ds + eps2;
    out.eta = (2.0 + out.real_part) / out.imag_part;
    out.static_eps = eps0;
    out.primary_relax_ghz = fp;
    out.secondary_relax_ghz = fs;
    return out;
}

double fog_coefficient(double freq_ghz, double temp_k)
{
    const Permittivity eps = water_permittivity(freq_ghz, temp_k);
    return 0.819 * freq_ghz / (eps.imag_part * (1.0 + eps.eta * eps.eta));
}

double fog_attenuation(const FogParams& p, double freq_ghz)
{
    require(p.density >= 0.0, "fog liquid water density must be >= 0 g/m^3");
    return fog_coefficient(freq_ghz, p.temperature) * p.density;
}

double snow_attenuation(const SnowParams& p)
{
    require(p.rate >= 0.0, "snowfall rate must be >= 0 mm/h");
    require(p.wavelength > 0.0, "wavelength must be > 0 cm");
    const double lambda2 = p.wavelength * p.wavelength;
    return 0.00349 * std::pow(p.rate, 1.6) / (lambda2 * lambda2) + 0.00224 * p.rate / p.wavelength;
}

double preset_attenuation(std::string_view name)
{
    for (const auto& [label, value] : preset_table) {
        if (label == name)
            return value;
    }
    throw LookupError("unknown weather preset \"" + std::string(name) +
                      "\"; expected one of " + preset_labels());
}

WeatherSpec WeatherSpec::preset(std::string name, std::string label)
{
    preset_attenuation(name);
    return {std::move(label), Preset{std::move(name)}};
}

double resolve(const WeatherSpec& spec, double freq_ghz)
{
    struct Visitor {
        double freq_ghz;
        double operator()(const Clear&) const { return 0.0; }
        double operator()(const RainParams& p) const { return rain_attenuation(p); }
        double operator()(const FogParams& p) const { return fog_attenuation(p, freq_ghz); }
        double operator()(const SnowParams& p) const { return snow_attenuation(p); }
        double operator()(const Preset& p) const { return preset_attenuation(p.name); }
    };
    return std::visit(Visitor{freq_ghz}, spec.model);
}

} // namespace uavlink::weather
