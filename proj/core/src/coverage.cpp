#include "uavlink/coverage.hpp"

#include "uavlink/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace uavlink::coverage {

namespace {

using detail::require;

double edge_loss(double altitude_m, double radius_m, const CoverageProblem& prob)
{
    return channel::path_loss(channel::LinkGeometry::from_height_distance(altitude_m, radius_m), prob.channel,
                              prob.gamma);
}

} // namespace

void CoverageProblem::validate() const
{
    channel.validate();
    require(gamma >= 0.0, "gamma must be >= 0 dB/km");
    require(pl_max > 0.0, "pl_max must be > 0 dB");
    require(h_min >= 0.0 && h_min <= h_max, "altitude range must satisfy 0 <= h_min <= h_max");
    require(tolerance > 0.0, "tolerance must be > 0 m");
    require(radius_limit > tolerance, "radius_limit must exceed tolerance");
}

std::optional<double> coverage_radius(double altitude_m, const CoverageProblem& prob)
{
    prob.validate();
    require(altitude_m >= 0.0, "altitude must be >= 0 m");

    // At ground level r = 0 is degenerate; start just off it.
    double lo = altitude_m > 0.0 ? 0.0 : prob.tolerance;
    double loss_lo = edge_loss(altitude_m, lo, prob);
    if (loss_lo > prob.pl_max)
        return std::nullopt;

    double hi = prob.radius_limit;
    double loss_hi = edge_loss(altitude_m, hi, prob);
    if (loss_hi <= prob.pl_max)
        return hi;

    // Invariant: loss(lo) <= pl_max < loss(hi). Loss grows with radius
    // whenever eta_nlos >= eta_los; a midpoint outside [loss_lo, loss_hi]
    // means that assumption broke and "largest radius" is ill-defined.
    while (hi - lo > prob.tolerance) {
        const double mid = lo + 0.5 * (hi - lo);
        const double loss_mid = edge_loss(altitude_m, mid, prob);
        if (loss_mid < loss_lo - 1e-9 || loss_mid > loss_hi + 1e-9)
            throw SolverError("path loss is not monotone in radius at altitude " + std::to_string(altitude_m) +
                              " m near r = " + std::to_string(mid) + " m");
        if (loss_mid <= prob.pl_max) {
            lo = mid;
            loss_lo = loss_mid;
        } else {
            hi = mid;
            loss_hi = loss_mid;
        }
    }
    return lo;
}

CoverageSolution optimal_altitude(const CoverageProblem& prob, double grid_step)
{
    prob.validate();
    const double span = prob.h_max - prob.h_min;
    require(grid_step > 0.0, "altitude grid step must be > 0 m");
    require(span == 0.0 || grid_step < span, "altitude grid step must be smaller than the altitude range");

    auto radius_at = [&](double h) { return coverage_radius(h, prob).value_or(-1.0); };

    std::vector<double> grid;
    const auto steps = static_cast<long>(std::floor(span / grid_step));
    for (long i = 0; i <= steps; ++i)
        grid.push_back(prob.h_min + static_cast<double>(i) * grid_step);
    if (grid.back() < prob.h_max)
        grid.push_back(prob.h_max);

    std::size_t best = 0;
    double best_radius = -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = radius_at(grid[i]);
        if (r > best_radius) {
            best_radius = r;
            best = i;
        }
    }
    if (best_radius < 0.0)
        throw InfeasibleError("no altitude in [" + std::to_string(prob.h_min) + ", " + std::to_string(prob.h_max) +
                              "] m covers any ground radius within pl_max = " + std::to_string(prob.pl_max) + " dB");

    double best_h = grid[best];

    // Golden-section refinement on the neighbouring grid cells.
    if (grid.size() > 1) {
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double lo = grid[best == 0 ? 0 : best - 1];
        double hi = grid[best + 1 < grid.size() ? best + 1 : best];
        double x1 = hi - inv_phi * (hi - lo);
        double x2 = lo + inv_phi * (hi - lo);
        double f1 = radius_at(x1);
        double f2 = radius_at(x2);
        while (hi - lo > prob.tolerance) {
            if (f1 >= f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = radius_at(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = radius_at(x2);
            }
        }
        const double h = 0.5 * (lo + hi);
        const double r = radius_at(h);
        if (r > best_radius) {
            best_radius = r;
            best_h = h;
        }
    }

    return {best_h, best_radius, edge_loss(best_h, best_radius, prob)};
}

} // namespace uavlink::coverage
