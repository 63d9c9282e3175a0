#include "uavlink/scenario.hpp"

#include "uavlink/coverage.hpp"
#include "uavlink/errors.hpp"
#include "uavlink/units.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

namespace uavlink::scenario {

namespace {

using detail::require;

// One grid point to evaluate, in emission order.
struct Point {
    int iteration;
    std::size_t weather;
    channel::LinkGeometry geometry;
    bool with_coverage;
};

double unit_draw(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

SweepRow evaluate(const ScenarioConfig& cfg, const Point& pt, double gamma)
{
    const auto& ch = cfg.channel;
    channel::LinkGeometry geom = pt.geometry;

    std::optional<double> radius;
    if (pt.with_coverage) {
        coverage::CoverageProblem prob;
        prob.channel = ch;
        prob.gamma = gamma;
        prob.pl_max = cfg.coverage.pl_max;
        prob.h_min = prob.h_max = geom.altitude;
        prob.tolerance = cfg.coverage.tolerance;
        prob.radius_limit = cfg.coverage.radius_limit;
        radius = coverage::coverage_radius(geom.altitude, prob).value_or(0.0);
        // f6 reports the link at the cell edge.
        if (cfg.experiment == Experiment::f6)
            geom = channel::LinkGeometry::from_height_distance(geom.altitude, *radius);
    }

    const auto pl = channel::path_loss_breakdown(geom, ch, gamma);

    radio::LinkSet links;
    links.serving = {cfg.radio.tx_power_w, radio::channel_gain(pl.total_db)};
    auto interferer_link = [&](const Interferer& it) {
        const auto g = channel::LinkGeometry::from_height_distance(geom.altitude, it.distance_m);
        return radio::Link{it.power_w, radio::channel_gain(channel::path_loss(g, ch, gamma))};
    };
    for (const auto& it : cfg.interferers)
        links.interferers.push_back(interferer_link(it));
    if (cfg.extra_interferer)
        links.extra = interferer_link(*cfg.extra_interferer);

    const double noise = radio::noise_power(cfg.radio.noise_psd_dbm_hz, cfg.radio.bandwidth_hz);

    SweepRow row;
    row.iteration = pt.iteration;
    row.weather = cfg.weather_list[pt.weather].label;
    row.angle_deg = geom.elevation_deg;
    row.ground_distance_m = geom.ground_distance;
    row.altitude_m = geom.altitude;
    row.gamma_db_km = gamma;
    row.path_loss_db = pl.total_db;
    row.weather_excess_db = pl.weather_excess_db;
    row.sinr = radio::sinr(links, noise);
    row.spectral_eff = radio::spectral_efficiency(row.sinr);
    row.ee_bits_per_joule = radio::energy_efficiency(cfg.radio, row.sinr);
    row.coverage_radius_m = radius;

    for (double v : {row.angle_deg, row.ground_distance_m, row.altitude_m, row.gamma_db_km, row.path_loss_db,
                     row.weather_excess_db, row.sinr, row.spectral_eff, row.ee_bits_per_joule, radius.value_or(0.0)}) {
        if (!std::isfinite(v))
            throw DomainError("model produced a non-finite value (path loss " + std::to_string(row.path_loss_db) +
                              " dB, SINR " + std::to_string(row.sinr) + ")");
    }
    return row;
}

std::string describe(const ScenarioConfig& cfg, const Point& pt)
{
    std::ostringstream os;
    os << "iteration " << pt.iteration << ", weather '" << cfg.weather_list[pt.weather].label
       << "', altitude " << pt.geometry.altitude << " m, ground distance " << pt.geometry.ground_distance
       << " m, elevation " << pt.geometry.elevation_deg << " deg";
    return os.str();
}

[[noreturn]] void rethrow_annotated(std::exception_ptr error, const std::string& context)
{
    try {
        std::rethrow_exception(error);
    } catch (const InfeasibleError& e) {
        throw InfeasibleError(context + ": " + e.what());
    } catch (const SolverError& e) {
        throw SolverError(context + ": " + e.what());
    } catch (const GeometryError& e) {
        throw GeometryError(context + ": " + e.what());
    } catch (const LookupError& e) {
        throw LookupError(context + ": " + e.what());
    } catch (const DomainError& e) {
        throw DomainError(context + ": " + e.what());
    } catch (const ModelError& e) {
        throw ModelError(context + ": " + e.what());
    }
}

std::vector<Point> enumerate_points(const ScenarioConfig& cfg)
{
    std::vector<Point> points;
    for (int t = 1; t <= cfg.iterations; ++t) {
        std::vector<channel::LinkGeometry> grid;
        bool with_coverage = false;
        switch (cfg.experiment) {
        case Experiment::f4:
            for (double theta : cfg.angle_grid.values())
                grid.push_back(channel::LinkGeometry::from_slant_elevation(cfg.slant_distance_m, theta));
            break;
        case Experiment::f5:
            for (double r : cfg.distance_grid.values())
                grid.push_back(channel::LinkGeometry::from_height_distance(cfg.altitude_m, r));
            break;
        case Experiment::f6:
            with_coverage = true;
            for (double h : cfg.altitude_grid.values())
                grid.push_back(channel::LinkGeometry::from_height_distance(h, 0.0));
            break;
        case Experiment::grid: {
            with_coverage = true;
            const auto seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(t));
            for (const auto& p : place_ground_nodes(seed, cfg.n_nodes, cfg.node_radius_m))
                grid.push_back(channel::LinkGeometry::from_height_distance(cfg.altitude_m, std::hypot(p.x, p.y)));
            break;
        }
        }
        for (std::size_t w = 0; w < cfg.weather_list.size(); ++w) {
            for (const auto& g : grid)
                points.push_back({t, w, g, with_coverage});
        }
    }
    return points;
}

} // namespace

std::string_view to_string(Experiment e)
{
    switch (e) {
    case Experiment::f4:
        return "f4";
    case Experiment::f5:
        return "f5";
    case Experiment::f6:
        return "f6";
    case Experiment::grid:
        return "grid";
    }
    return "?";
}

Experiment parse_experiment(std::string_view name)
{
    for (auto e : {Experiment::f4, Experiment::f5, Experiment::f6, Experiment::grid}) {
        if (to_string(e) == name)
            return e;
    }
    throw LookupError("unknown experiment \"" + std::string(name) + "\"; expected f4, f5, f6 or grid");
}

std::vector<double> Grid::values() const
{
    std::vector<double> out;
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i)
        out.push_back(start + static_cast<double>(i) * step);
    return out;
}

void Grid::validate(std::string_view name) const
{
    const std::string n(name);
    require(std::isfinite(start) && std::isfinite(stop) && std::isfinite(step), n + " must be finite");
    require(step > 0.0, n + " step must be > 0");
    require(stop >= start, n + " stop must be >= start");
}

void ScenarioConfig::validate() const
{
    require(!weather_list.empty(), "weather list must not be empty");
    channel.validate();
    radio.validate();
    for (const auto& it : interferers) {
        require(it.power_w > 0.0, "interferer power must be > 0 W");
        require(it.distance_m > 0.0, "interferer distance must be > 0 m");
    }
    if (extra_interferer) {
        require(extra_interferer->power_w > 0.0, "extra interferer power must be > 0 W");
        require(extra_interferer->distance_m > 0.0, "extra interferer distance must be > 0 m");
    }
    require(coverage.pl_max > 0.0, "pl_max must be > 0 dB");
    require(coverage.tolerance > 0.0, "coverage tolerance must be > 0 m");
    require(coverage.radius_limit > coverage.tolerance, "radius_limit must exceed tolerance");

    angle_grid.validate("angle_grid");
    require(angle_grid.start >= 0.0 && angle_grid.stop <= 90.0, "angle_grid must lie in [0, 90] degrees");
    distance_grid.validate("distance_grid");
    require(distance_grid.start >= 0.0, "distance_grid must be >= 0 m");
    require(altitude_m > 0.0 || distance_grid.start > 0.0, "f5 geometry degenerates at h = 0, r = 0");
    altitude_grid.validate("altitude_grid");
    require(altitude_grid.start > 0.0, "altitude_grid must be > 0 m");
    require(altitude_m > 0.0, "altitude_m must be > 0 m");
    require(slant_distance_m > 0.0, "slant_distance_m must be > 0 m");
    require(node_radius_m > 0.0, "node_radius_m must be > 0 m");
    require(iterations >= 1, "iterations must be >= 1");
}

ExperimentPreset experiment_preset(Experiment kind)
{
    ExperimentPreset p;
    p.kind = kind;
    switch (kind) {
    case Experiment::f4:
        p.angle_grid = Grid{0.0, 90.0, 1.0};
        p.slant_distance_m = 1000.0;
        break;
    case Experiment::f5:
        p.distance_grid = Grid{100.0, 1000.0, 100.0};
        p.altitude_m = 120.0;
        break;
    case Experiment::f6:
        p.altitude_grid = Grid{10.0, 500.0, 10.0};
        p.coverage = CoverageSettings{};
        break;
    case Experiment::grid:
        break;
    }
    return p;
}

void apply_preset(ScenarioConfig& cfg, const ExperimentPreset& preset)
{
    cfg.experiment = preset.kind;
    if (preset.angle_grid)
        cfg.angle_grid = *preset.angle_grid;
    if (preset.distance_grid)
        cfg.distance_grid = *preset.distance_grid;
    if (preset.altitude_grid)
        cfg.altitude_grid = *preset.altitude_grid;
    if (preset.altitude_m)
        cfg.altitude_m = *preset.altitude_m;
    if (preset.slant_distance_m)
        cfg.slant_distance_m = *preset.slant_distance_m;
    if (preset.coverage)
        cfg.coverage = *preset.coverage;
}

std::vector<weather::WeatherSpec> default_weather_list(double freq_ghz)
{
    const auto coeffs = weather::default_rain_coefficients(freq_ghz);
    if (!coeffs)
        throw DomainError("no default rain coefficients for " + std::to_string(freq_ghz) +
                          " GHz; supply k and alpha explicitly");
    return {
        weather::WeatherSpec::rain({12.5, coeffs->k, coeffs->alpha}),
        weather::WeatherSpec::fog({0.05, 293.15}),
        weather::WeatherSpec::snow({5.0, units::wavelength_cm(freq_ghz)}),
    };
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index)
{
    std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<Position> place_ground_nodes(std::uint64_t seed, std::size_t n, double radius_m)
{
    require(radius_m > 0.0, "placement radius must be > 0 m");
    std::mt19937_64 rng(seed);
    std::vector<Position> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = radius_m * std::sqrt(unit_draw(rng));
        const double phi = 2.0 * std::numbers::pi * unit_draw(rng);
        out.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return out;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg, unsigned workers)
{
    cfg.validate();

    std::vector<double> gammas;
    for (const auto& w : cfg.weather_list) {
        try {
            gammas.push_back(weather::resolve(w, cfg.channel.freq_ghz));
        } catch (const ModelError&) {
            rethrow_annotated(std::current_exception(), "weather '" + w.label + "'");
        }
    }

    const std::vector<Point> points = enumerate_points(cfg);
    std::vector<SweepRow> rows(points.size());
    std::vector<std::exception_ptr> errors(points.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                rows[i] = evaluate(cfg, points[i], gammas[points[i].weather]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const unsigned n_threads = std::clamp<unsigned>(workers, 1, 256);
    if (n_threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < n_threads; ++i)
            pool.emplace_back(work);
    }

    // Report the first failure in loop order so errors are deterministic too.
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (errors[i])
            rethrow_annotated(errors[i], describe(cfg, points[i]));
    }
    return rows;
}

} // namespace uavlink::scenario
