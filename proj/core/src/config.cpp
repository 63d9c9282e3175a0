#include "uavlink/config.hpp"

#include "uavlink/csv.hpp"
#include "uavlink/errors.hpp"
#include "uavlink/units.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <type_traits>

namespace uavlink::config {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        out.push_back(trim(s.substr(pos, next - pos)));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view text)
{
    T value{};
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError("expected a number, got \"" + std::string(text) + "\"");
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(value))
            throw ConfigError("expected a finite number, got \"" + std::string(text) + "\"");
    }
    return value;
}

std::string unquote(std::string_view v)
{
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
        v = v.substr(1, v.size() - 2);
    return std::string(v);
}

std::vector<double> parse_list(std::string_view v)
{
    std::vector<double> out;
    if (trim(v).empty())
        return out;
    for (auto item : split(v, ','))
        out.push_back(parse_number<double>(item));
    return out;
}

std::string format_list(const std::vector<double>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ", ";
        out += csv::format_double(xs[i]);
    }
    return out;
}

scenario::Grid parse_grid(std::string_view v)
{
    const auto parts = split(v, ':');
    if (parts.size() != 3)
        throw ConfigError("expected a grid as start:stop:step, got \"" + std::string(v) + "\"");
    return {parse_number<double>(parts[0]), parse_number<double>(parts[1]), parse_number<double>(parts[2])};
}

std::string format_grid(const scenario::Grid& g)
{
    return csv::format_double(g.start) + ":" + csv::format_double(g.stop) + ":" + csv::format_double(g.step);
}

// Interferer lists are parsed as two parallel keys and zipped in validate.
struct RawInterferers {
    std::vector<double> powers;
    std::vector<double> distances;
    std::optional<double> extra_power;
    std::optional<double> extra_distance;
};

struct Key {
    std::string section;
    std::string name;
    std::function<void(Settings&, RawInterferers&, std::string_view)> set;
    std::function<std::optional<std::string>(const Settings&)> get;
};

template <typename Field>
Key number_key(std::string section, std::string name, Field field)
{
    using T = std::remove_cvref_t<decltype(field(std::declval<Settings&>()))>;
    return {std::move(section), std::move(name),
            [field](Settings& s, RawInterferers&, std::string_view v) {
                field(s) = parse_number<T>(v);
            },
            [field](const Settings& s) -> std::optional<std::string> {
                const T value = field(s);
                if constexpr (std::is_floating_point_v<T>)
                    return csv::format_double(value);
                else
                    return std::to_string(value);
            }};
}

template <typename Field>
Key optional_number_key(std::string section, std::string name, Field field)
{
    return {std::move(section), std::move(name),
            [field](Settings& s, RawInterferers&, std::string_view v) {
                field(s) = parse_number<double>(v);
            },
            [field](const Settings& s) -> std::optional<std::string> {
                const auto& value = field(s);
                if (!value)
                    return std::nullopt;
                return csv::format_double(*value);
            }};
}

template <typename Field>
Key grid_key(std::string name, Field field)
{
    return {"sweep", std::move(name),
            [field](Settings& s, RawInterferers&, std::string_view v) { field(s) = parse_grid(v); },
            [field](const Settings& s) -> std::optional<std::string> {
                return format_grid(field(s));
            }};
}

const std::vector<Key>& key_table()
{
    static const std::vector<Key> keys = [] {
        std::vector<Key> k;
        k.push_back(number_key("channel", "a", [](auto& s) -> auto& { return s.channel.a; }));
        k.push_back(number_key("channel", "b", [](auto& s) -> auto& { return s.channel.b; }));
        k.push_back(number_key("channel", "eta_los", [](auto& s) -> auto& { return s.channel.eta_los; }));
        k.push_back(number_key("channel", "eta_nlos", [](auto& s) -> auto& { return s.channel.eta_nlos; }));
        k.push_back(number_key("channel", "freq", [](auto& s) -> auto& { return s.channel.freq_ghz; }));
        k.push_back(number_key("channel", "beta", [](auto& s) -> auto& { return s.channel.beta; }));

        k.push_back(number_key("radio", "bandwidth", [](auto& s) -> auto& { return s.radio.bandwidth_hz; }));
        k.push_back(number_key("radio", "noise_psd", [](auto& s) -> auto& { return s.radio.noise_psd_dbm_hz; }));
        k.push_back(number_key("radio", "tx_power", [](auto& s) -> auto& { return s.radio.tx_power_w; }));
        k.push_back(number_key("radio", "hops", [](auto& s) -> auto& { return s.radio.hops; }));
        k.push_back({"radio", "interferer_powers",
                     [](Settings&, RawInterferers& raw, std::string_view v) { raw.powers = parse_list(v); },
                     [](const Settings& s) -> std::optional<std::string> {
                         if (s.interferers.empty())
                             return std::nullopt;
                         std::vector<double> xs;
                         for (const auto& it : s.interferers)
                             xs.push_back(it.power_w);
                         return format_list(xs);
                     }});
        k.push_back({"radio", "interferer_distances",
                     [](Settings&, RawInterferers& raw, std::string_view v) { raw.distances = parse_list(v); },
                     [](const Settings& s) -> std::optional<std::string> {
                         if (s.interferers.empty())
                             return std::nullopt;
                         std::vector<double> xs;
                         for (const auto& it : s.interferers)
                             xs.push_back(it.distance_m);
                         return format_list(xs);
                     }});
        k.push_back({"radio", "extra_interferer_power",
                     [](Settings&, RawInterferers& raw, std::string_view v) { raw.extra_power = parse_number<double>(v); },
                     [](const Settings& s) -> std::optional<std::string> {
                         if (!s.extra_interferer)
                             return std::nullopt;
                         return csv::format_double(s.extra_interferer->power_w);
                     }});
        k.push_back({"radio", "extra_interferer_distance",
                     [](Settings&, RawInterferers& raw, std::string_view v) {
                         raw.extra_distance = parse_number<double>(v);
                     },
                     [](const Settings& s) -> std::optional<std::string> {
                         if (!s.extra_interferer)
                             return std::nullopt;
                         return csv::format_double(s.extra_interferer->distance_m);
                     }});

        k.push_back(number_key("weather.rain", "rate", [](auto& s) -> auto& { return s.rain.rate; }));
        k.push_back(optional_number_key("weather.rain", "k", [](auto& s) -> auto& { return s.rain.k; }));
        k.push_back(optional_number_key("weather.rain", "alpha",
                                        [](auto& s) -> auto& { return s.rain.alpha; }));
        k.push_back({"weather.rain", "preset",
                     [](Settings& s, RawInterferers&, std::string_view v) { s.rain.preset = unquote(v); },
                     [](const Settings& s) -> std::optional<std::string> { return s.rain.preset; }});

        k.push_back(number_key("weather.fog", "density", [](auto& s) -> auto& { return s.fog.density; }));
        k.push_back(number_key("weather.fog", "temperature", [](auto& s) -> auto& { return s.fog.temperature; }));
        k.push_back({"weather.fog", "preset",
                     [](Settings& s, RawInterferers&, std::string_view v) { s.fog.preset = unquote(v); },
                     [](const Settings& s) -> std::optional<std::string> { return s.fog.preset; }});

        k.push_back(number_key("weather.snow", "rate", [](auto& s) -> auto& { return s.snow.rate; }));
        k.push_back(optional_number_key("weather.snow", "wavelength",
                                        [](auto& s) -> auto& { return s.snow.wavelength; }));
        k.push_back({"weather.snow", "preset",
                     [](Settings& s, RawInterferers&, std::string_view v) { s.snow.preset = unquote(v); },
                     [](const Settings& s) -> std::optional<std::string> { return s.snow.preset; }});

        k.push_back(number_key("coverage", "pl_max", [](auto& s) -> auto& { return s.coverage.pl_max; }));
        k.push_back(number_key("coverage", "tolerance", [](auto& s) -> auto& { return s.coverage.tolerance; }));
        k.push_back(number_key("coverage", "radius_limit", [](auto& s) -> auto& { return s.coverage.radius_limit; }));

        k.push_back({"sweep", "conditions",
                     [](Settings& s, RawInterferers&, std::string_view v) {
                         s.sweep.conditions.clear();
                         for (auto c : split(v, ','))
                             s.sweep.conditions.emplace_back(c);
                     },
                     [](const Settings& s) -> std::optional<std::string> {
                         std::string out;
                         for (std::size_t i = 0; i < s.sweep.conditions.size(); ++i)
                             out += (i ? ", " : "") + s.sweep.conditions[i];
                         return out;
                     }});
        k.push_back(number_key("sweep", "iterations", [](auto& s) -> auto& { return s.sweep.iterations; }));
        k.push_back(number_key("sweep", "n_nodes", [](auto& s) -> auto& { return s.sweep.n_nodes; }));
        k.push_back(number_key("sweep", "seed", [](auto& s) -> auto& { return s.sweep.seed; }));
        k.push_back(number_key("sweep", "altitude", [](auto& s) -> auto& { return s.sweep.altitude; }));
        k.push_back(number_key("sweep", "slant_distance", [](auto& s) -> auto& { return s.sweep.slant_distance; }));
        k.push_back(number_key("sweep", "node_radius", [](auto& s) -> auto& { return s.sweep.node_radius; }));
        k.push_back(grid_key("angle_grid", [](auto& s) -> auto& { return s.sweep.angle_grid; }));
        k.push_back(grid_key("distance_grid", [](auto& s) -> auto& { return s.sweep.distance_grid; }));
        k.push_back(grid_key("altitude_grid", [](auto& s) -> auto& { return s.sweep.altitude_grid; }));
        return k;
    }();
    return keys;
}

const Key* find_key(std::string_view section, std::string_view name)
{
    for (const auto& k : key_table()) {
        if (k.section == section && k.name == name)
            return &k;
    }
    return nullptr;
}

[[noreturn]] void invalid(std::string_view section, std::string_view key, const std::string& why)
{
    throw ConfigError("[" + std::string(section) + "] " + std::string(key) + ": " + why);
}

void check(bool ok, std::string_view section, std::string_view key, const std::string& why)
{
    if (!ok)
        invalid(section, key, why);
}

void check_grid(const scenario::Grid& g, std::string_view key)
{
    check(g.step > 0.0, "sweep", key, "step must be > 0");
    check(g.stop >= g.start, "sweep", key, "stop must be >= start");
}

weather::WeatherSpec parametric_spec(const Settings& s, const std::string& condition, const std::string& label)
{
    if (condition == "rain") {
        weather::RainParams p{s.rain.rate, 0.0, 0.0};
        if (s.rain.k && s.rain.alpha) {
            p.k = *s.rain.k;
            p.alpha = *s.rain.alpha;
        } else if (auto d = weather::default_rain_coefficients(s.channel.freq_ghz)) {
            p.k = s.rain.k.value_or(d->k);
            p.alpha = s.rain.alpha.value_or(d->alpha);
        } else {
            invalid("weather.rain", "k", "no default rain coefficients for freq = " +
                                             csv::format_double(s.channel.freq_ghz) +
                                             " GHz; set k and alpha explicitly");
        }
        return weather::WeatherSpec::rain(p, label);
    }
    if (condition == "fog")
        return weather::WeatherSpec::fog({s.fog.density, s.fog.temperature}, label);
    if (condition == "snow") {
        const double lambda = s.snow.wavelength.value_or(units::wavelength_cm(s.channel.freq_ghz));
        return weather::WeatherSpec::snow({s.snow.rate, lambda}, label);
    }
    return weather::WeatherSpec::clear(label);
}

std::optional<std::string> preset_name(const Settings& s, const std::string& condition)
{
    if (condition == "rain")
        return s.rain.preset;
    if (condition == "fog")
        return s.fog.preset;
    if (condition == "snow")
        return s.snow.preset;
    return std::nullopt;
}

} // namespace

std::string_view to_string(AttenuationMode m)
{
    switch (m) {
    case AttenuationMode::parametric:
        return "parametric";
    case AttenuationMode::preset:
        return "preset";
    case AttenuationMode::both:
        return "both";
    }
    return "?";
}

AttenuationMode parse_mode(std::string_view name)
{
    for (auto m : {AttenuationMode::parametric, AttenuationMode::preset, AttenuationMode::both}) {
        if (to_string(m) == name)
            return m;
    }
    throw ConfigError("unknown attenuation mode \"" + std::string(name) + "\"; expected parametric, preset or both");
}

void Settings::validate() const
{
    check(channel.a > 0.0, "channel", "a", "must be > 0");
    check(channel.b > 0.0, "channel", "b", "must be > 0");
    check(channel.eta_nlos >= channel.eta_los, "channel", "eta_nlos", "must be >= eta_los");
    check(channel.freq_ghz > 0.0, "channel", "freq", "must be > 0");
    check(channel.beta >= 0.0, "channel", "beta", "must be >= 0");

    check(radio.bandwidth_hz > 0.0, "radio", "bandwidth", "must be > 0");
    check(radio.tx_power_w > 0.0, "radio", "tx_power", "must be > 0");
    check(radio.hops >= 1, "radio", "hops", "must be >= 1");
    for (const auto& it : interferers) {
        check(it.power_w > 0.0, "radio", "interferer_powers", "every power must be > 0");
        check(it.distance_m > 0.0, "radio", "interferer_distances", "every distance must be > 0");
    }
    if (extra_interferer) {
        check(extra_interferer->power_w > 0.0, "radio", "extra_interferer_power", "must be > 0");
        check(extra_interferer->distance_m > 0.0, "radio", "extra_interferer_distance", "must be > 0");
    }

    check(rain.rate >= 0.0, "weather.rain", "rate", "must be >= 0");
    check(!rain.k || *rain.k > 0.0, "weather.rain", "k", "must be > 0");
    check(!rain.alpha || *rain.alpha > 0.0, "weather.rain", "alpha", "must be > 0");
    check(fog.density >= 0.0, "weather.fog", "density", "must be >= 0");
    check(fog.temperature > 0.0, "weather.fog", "temperature", "must be > 0");
    check(snow.rate >= 0.0, "weather.snow", "rate", "must be >= 0");
    check(!snow.wavelength || *snow.wavelength > 0.0, "weather.snow", "wavelength", "must be > 0");
    auto check_preset = [](const std::string& name, std::string_view section) {
        try {
            weather::preset_attenuation(name);
        } catch (const LookupError& e) {
            invalid(section, "preset", e.what());
        }
    };
    check_preset(rain.preset, "weather.rain");
    check_preset(fog.preset, "weather.fog");
    if (snow.preset)
        check_preset(*snow.preset, "weather.snow");

    check(coverage.pl_max > 0.0, "coverage", "pl_max", "must be > 0");
    check(coverage.tolerance > 0.0, "coverage", "tolerance", "must be > 0");
    check(coverage.radius_limit > coverage.tolerance, "coverage", "radius_limit", "must exceed tolerance");

    check(!sweep.conditions.empty(), "sweep", "conditions", "must list at least one condition");
    std::set<std::string> seen;
    for (const auto& c : sweep.conditions) {
        check(c == "rain" || c == "fog" || c == "snow" || c == "clear", "sweep", "conditions",
              "unknown condition \"" + c + "\"; expected rain, fog, snow or clear");
        check(seen.insert(c).second, "sweep", "conditions", "duplicate condition \"" + c + "\"");
    }
    check(sweep.iterations >= 1, "sweep", "iterations", "must be >= 1");
    check(sweep.altitude > 0.0, "sweep", "altitude", "must be > 0");
    check(sweep.slant_distance > 0.0, "sweep", "slant_distance", "must be > 0");
    check(sweep.node_radius > 0.0, "sweep", "node_radius", "must be > 0");
    check_grid(sweep.angle_grid, "angle_grid");
    check(sweep.angle_grid.start >= 0.0 && sweep.angle_grid.stop <= 90.0, "sweep", "angle_grid",
          "must lie within [0, 90] degrees");
    check_grid(sweep.distance_grid, "distance_grid");
    check(sweep.distance_grid.start >= 0.0, "sweep", "distance_grid", "must be >= 0");
    check_grid(sweep.altitude_grid, "altitude_grid");
    check(sweep.altitude_grid.start > 0.0, "sweep", "altitude_grid", "must be > 0");
}

std::vector<weather::WeatherSpec> Settings::weather_list(AttenuationMode mode) const
{
    std::vector<weather::WeatherSpec> out;
    for (const auto& c : sweep.conditions) {
        const auto preset = preset_name(*this, c);
        switch (mode) {
        case AttenuationMode::parametric:
            out.push_back(parametric_spec(*this, c, c));
            break;
        case AttenuationMode::preset:
            // Conditions without a tabulated value keep their parametric model.
            out.push_back(preset ? weather::WeatherSpec::preset(*preset, c) : parametric_spec(*this, c, c));
            break;
        case AttenuationMode::both:
            out.push_back(parametric_spec(*this, c, c + "/parametric"));
            if (preset)
                out.push_back(weather::WeatherSpec::preset(*preset, c + "/preset"));
            break;
        }
    }
    return out;
}

scenario::ScenarioConfig Settings::to_scenario(scenario::Experiment experiment, AttenuationMode mode,
                                               std::optional<std::uint64_t> seed_override) const
{
    validate();
    scenario::ScenarioConfig cfg;
    cfg.weather_list = weather_list(mode);
    for (const auto& w : cfg.weather_list) {
        try {
            weather::resolve(w, channel.freq_ghz);
        } catch (const ModelError& e) {
            throw ConfigError("weather condition '" + w.label + "': " + e.what());
        }
    }
    cfg.channel = channel;
    cfg.radio = radio;
    cfg.interferers = interferers;
    cfg.extra_interferer = extra_interferer;
    cfg.coverage = coverage;
    cfg.experiment = experiment;
    cfg.angle_grid = sweep.angle_grid;
    cfg.distance_grid = sweep.distance_grid;
    cfg.altitude_grid = sweep.altitude_grid;
    cfg.altitude_m = sweep.altitude;
    cfg.slant_distance_m = sweep.slant_distance;
    cfg.node_radius_m = sweep.node_radius;
    cfg.n_nodes = static_cast<std::size_t>(sweep.n_nodes);
    cfg.iterations = sweep.iterations;
    cfg.master_seed = seed_override.value_or(sweep.seed);
    try {
        cfg.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

Settings parse_config(std::string_view text)
{
    Settings s;
    RawInterferers raw;
    std::set<std::string> sections{"channel", "radio", "weather.rain", "weather.fog", "weather.snow", "coverage",
                                   "sweep"};
    std::set<std::pair<std::string, std::string>> assigned;
    std::string section;

    int line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        const auto at = [&](const std::string& msg) {
            return ConfigError("line " + std::to_string(line_no) + ": " + msg);
        };
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = trim(line.substr(0, hash));
        if (line.empty())
            continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw at("unterminated section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (!sections.contains(section))
                throw at("unknown section [" + section + "]");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw at("expected key = value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty())
            throw at("missing key before '='");
        if (section.empty())
            throw at("key \"" + std::string(key) + "\" appears before any section header");
        const Key* k = find_key(section, key);
        if (!k)
            throw at("unknown key \"" + std::string(key) + "\" in [" + section + "]");
        if (!assigned.emplace(section, std::string(key)).second)
            throw at("duplicate key \"" + std::string(key) + "\" in [" + section + "]");
        try {
            k->set(s, raw, value);
        } catch (const ConfigError& e) {
            throw at("[" + section + "] " + std::string(key) + ": " + e.what());
        }
    }

    if (raw.powers.size() != raw.distances.size())
        invalid("radio", "interferer_distances", "must list as many entries as interferer_powers");
    for (std::size_t i = 0; i < raw.powers.size(); ++i)
        s.interferers.push_back({raw.powers[i], raw.distances[i]});
    if (raw.extra_power.has_value() != raw.extra_distance.has_value())
        invalid("radio", "extra_interferer_distance", "extra_interferer_power and extra_interferer_distance go together");
    if (raw.extra_power)
        s.extra_interferer = scenario::Interferer{*raw.extra_power, *raw.extra_distance};

    s.validate();
    return s;
}

Settings load_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::string serialize(const Settings& s)
{
    std::string out;
    std::string section;
    for (const auto& k : key_table()) {
        const auto value = k.get(s);
        if (!value)
            continue;
        if (k.section != section) {
            if (!section.empty())
                out += '\n';
            section = k.section;
            out += "[" + section + "]\n";
        }
        out += k.name + " = " + *value + "\n";
    }
    return out;
}

} // namespace uavlink::config
