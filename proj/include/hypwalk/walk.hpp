#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypwalk/criterion.hpp"
#include "hypwalk/group.hpp"

namespace hypwalk {

struct WalkConfig {
    GroupModel model;
    StepMeasure mu;
    int steps = 50;
    int trials = 1000;
    uint64_t seed = 0;
    double stop_radius = 1.0 - 1e-4; // boundary runs only
    bool skip_measure_validation = false; // test hook for degenerate measures
};

struct WalkStats {
    double drift_hat = 0.0;
    double drift_stderr = 0.0;
    double entropy_hat = 0.0;
    double entropy_stderr = 0.0;
    double volume_hat = 1.0; // logarithmic volume; equals 1 for these actions
    double fi_gap = 0.0;     // drift_hat * volume_hat - entropy_hat
    long long samples_used = 0;
    bool entropy_downward_biased = true; // plug-in estimator at fixed n
};

struct BoundarySample {
    std::vector<double> angles; // exit angles in [0, 2pi), converged trials
    int trials = 0;
    int non_converged = 0;
    std::vector<long long> histogram; // fixed bins over [0, 2pi)
};

struct PathPoint {
    DiskPoint position;
    int word_length = 0;
};

struct FirstPassage {
    double F_hat = 0.0;
    double stderr_ = 0.0;
    double green_upper = 0.0; // -log F_hat; inf when no hits
    bool zero_hits = false;
};

struct DivergenceRow {
    int k = 0;
    double geo_distance = 0.0;
    double green_upper = 0.0;
    double gap_lower_bound = 0.0; // k * (L - weight_cost)
    bool zero_hits = false;
};

/// One walk trajectory; positions are orbit points of the partial products.
std::vector<PathPoint> sample_path(const WalkConfig& config, uint64_t trial = 0);

std::pair<double, double> estimate_drift(const WalkConfig& config);

/// Plug-in entropy of the empirical endpoint distribution, divided by the
/// step count. Downward-biased for the true n-step entropy.
std::pair<double, double> estimate_entropy(const WalkConfig& config);

WalkStats simulate(const WalkConfig& config);

FirstPassage first_passage(const WalkConfig& config, const Word& target,
                           int horizon);

std::vector<DivergenceRow> divergence_probe(const WalkConfig& config,
                                            const Word& g, int k_max,
                                            int horizon = 200);

BoundarySample sample_boundary(const WalkConfig& config, int bins = 0,
                               long long step_cap = 100000);

/// Per-bin 4-sigma check that the histogram is invariant under rotation by
/// 2pi/n (bins must be divisible by n).
bool rotation_symmetry_ok(const std::vector<long long>& histogram, int n);

std::string walk_stats_json(const WalkStats& stats);
std::string boundary_csv(const BoundarySample& sample);
std::string boundary_json(const BoundarySample& sample);

} // namespace hypwalk
