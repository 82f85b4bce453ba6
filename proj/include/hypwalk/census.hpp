#pragma once

#include <string>
#include <vector>

#include "hypwalk/group.hpp"

namespace hypwalk {

struct BallCensus {
    std::vector<double> radius_grid;
    std::vector<long long> counts; // elements g with d(e, g) <= radius_grid[j]
    double slope_estimate = 0.0;   // LS slope of log(count) vs R, top half of grid
};

/// Enumerates all group elements with d(e, g) <= R_max by breadth-first
/// closure under generator multiplication, deduplicating elements by their
/// orbit point. Throws on R_max above the cap (memory grows like e^R) and on
/// an orbit-point quantization collision between distinct matrices.
BallCensus ball_census(const GroupModel& model, double R_max, double step,
                       double cap = 12.0);

/// CSV with columns R, count, log_count.
std::string census_csv(const BallCensus& census);

} // namespace hypwalk
