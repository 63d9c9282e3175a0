#pragma once

#include "uavlink/channel.hpp"

#include <optional>

namespace uavlink::coverage {

/// Budget-constrained coverage problem: the cell edge is where the
/// composite path loss reaches pl_max.
struct CoverageProblem {
    channel::ChannelParams channel;
    double gamma = 0.0;          // weather attenuation, dB/km
    double pl_max = 110.0;       // dB
    double h_min = 10.0;         // m
    double h_max = 1000.0;       // m
    double tolerance = 1e-3;     // m
    double radius_limit = 100e3; // m, upper end of the radius bracket

    void validate() const;
};

struct CoverageSolution {
    double altitude = 0.0;
    double radius = 0.0;
    double path_loss_at_edge = 0.0;
};

/// Largest ground radius whose path loss stays within the budget, to
/// within the problem tolerance. Empty when even the point below the UAV
/// exceeds the budget. A radius at radius_limit means the bracket was
/// never crossed.
std::optional<double> coverage_radius(double altitude_m, const CoverageProblem& prob);

/// Altitude maximizing the coverage radius: grid search over
/// [h_min, h_max] followed by golden-section refinement around the best
/// grid point. Equal radii resolve to the lowest altitude.
CoverageSolution optimal_altitude(const CoverageProblem& prob, double grid_step = 1.0);

} // namespace uavlink::coverage
