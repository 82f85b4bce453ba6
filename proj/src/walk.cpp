#include "hypwalk/walk.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "hypwalk/rng.hpp"

namespace hypwalk {

namespace {

constexpr double kMatchTol = 1e-7;

// cumulative distribution over generator indices, in generator order
std::vector<double> cumulative(const WalkConfig& config) {
    std::vector<double> cdf;
    cdf.reserve(config.model.generators.size());
    double acc = 0.0;
    for (const Generator& g : config.model.generators) {
        auto it = config.mu.weights.find(g.label);
        acc += it == config.mu.weights.end() ? 0.0 : it->second;
        cdf.push_back(acc);
    }
    if (!(cdf.back() > 0.0))
        throw std::invalid_argument("step measure has empty support");
    return cdf;
}

size_t pick(const std::vector<double>& cdf, double u) {
    const double x = u * cdf.back();
    for (size_t i = 0; i < cdf.size(); ++i)
        if (x < cdf[i]) return i;
    return cdf.size() - 1;
}

void validate_config(const WalkConfig& config) {
    if (config.steps < 0) throw std::invalid_argument("steps must be >= 0");
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (!config.skip_measure_validation) config.mu.validate(config.model);
}

std::pair<double, double> mean_stderr(const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= xs.size();
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var = xs.size() > 1 ? var / (xs.size() - 1) : 0.0;
    return {mean, std::sqrt(var / xs.size())};
}

int64_t endpoint_key(const DiskPoint& p) {
    const int64_t qx = llround(p.x / kMatchTol);
    const int64_t qy = llround(p.y / kMatchTol);
    return qx * 2000003459LL + qy;
}

} // namespace

std::vector<PathPoint> sample_path(const WalkConfig& config, uint64_t trial) {
    validate_config(config);
    const std::vector<double> cdf = cumulative(config);
    const CounterRng rng(config.seed);
    std::vector<PathPoint> path;
    path.reserve(config.steps + 1);
    Isometry iso = identity_isometry();
    path.push_back({config.model.base_point, 0});
    for (int k = 0; k < config.steps; ++k) {
        const size_t i = pick(cdf, rng.uniform(trial, k));
        iso = compose(iso, config.model.generators[i].iso);
        path.push_back({apply(iso, config.model.base_point), k + 1});
    }
    return path;
}

std::pair<double, double> estimate_drift(const WalkConfig& config) {
    validate_config(config);
    if (config.steps < 1) throw std::invalid_argument("drift needs steps >= 1");
    const std::vector<double> cdf = cumulative(config);
    const CounterRng rng(config.seed);
    std::vector<double> per_trial(config.trials);
    for (int t = 0; t < config.trials; ++t) {
        Isometry iso = identity_isometry();
        for (int k = 0; k < config.steps; ++k)
            iso = compose(iso, config.model.generators[pick(cdf, rng.uniform(t, k))].iso);
        per_trial[t] = displacement(iso) / config.steps;
    }
    return mean_stderr(per_trial);
}

std::pair<double, double> estimate_entropy(const WalkConfig& config) {
    validate_config(config);
    if (config.steps < 1) throw std::invalid_argument("entropy needs steps >= 1");
    if (config.trials < 2)
        throw std::invalid_argument("entropy needs at least 2 trials");
    const std::vector<double> cdf = cumulative(config);
    const CounterRng rng(config.seed);
    std::vector<int64_t> keys(config.trials);
    std::unordered_map<int64_t, long long> counts;
    for (int t = 0; t < config.trials; ++t) {
        Isometry iso = identity_isometry();
        for (int k = 0; k < config.steps; ++k)
            iso = compose(iso, config.model.generators[pick(cdf, rng.uniform(t, k))].iso);
        keys[t] = endpoint_key(apply(iso, config.model.base_point));
        ++counts[keys[t]];
    }
    std::vector<double> per_trial(config.trials);
    for (int t = 0; t < config.trials; ++t)
        per_trial[t] = -std::log(static_cast<double>(counts[keys[t]]) /
                                 config.trials) /
                       config.steps;
    return mean_stderr(per_trial);
}

WalkStats simulate(const WalkConfig& config) {
    WalkStats stats;
    std::tie(stats.drift_hat, stats.drift_stderr) = estimate_drift(config);
    std::tie(stats.entropy_hat, stats.entropy_stderr) = estimate_entropy(config);
    stats.volume_hat = 1.0;
    stats.fi_gap = stats.drift_hat * stats.volume_hat - stats.entropy_hat;
    stats.samples_used = static_cast<long long>(config.trials) * config.steps;
    return stats;
}

FirstPassage first_passage(const WalkConfig& config, const Word& target,
                           int horizon) {
    validate_config(config);
    if (horizon < static_cast<int>(target.letters.size()))
        throw std::invalid_argument("horizon below the target's word length");
    const std::vector<double> cdf = cumulative(config);
    const CounterRng rng(config.seed);
    const DiskPoint q = apply(evaluate(config.model, target), config.model.base_point);

    long long hits = 0;
    for (int t = 0; t < config.trials; ++t) {
        Isometry iso = identity_isometry();
        DiskPoint p = config.model.base_point;
        for (int k = 0;; ++k) {
            const double dx = p.x - q.x, dy = p.y - q.y;
            if (dx * dx + dy * dy < kMatchTol * kMatchTol) {
                ++hits;
                break;
            }
            if (k >= horizon) break;
            iso = compose(iso, config.model.generators[pick(cdf, rng.uniform(t, k))].iso);
            p = apply(iso, config.model.base_point);
        }
    }

    FirstPassage fp;
    fp.F_hat = static_cast<double>(hits) / config.trials;
    fp.stderr_ = std::sqrt(fp.F_hat * (1.0 - fp.F_hat) / config.trials);
    if (hits == 0) {
        fp.zero_hits = true;
        fp.green_upper = std::numeric_limits<double>::infinity();
    } else {
        fp.green_upper = -std::log(fp.F_hat);
    }
    return fp;
}

std::vector<DivergenceRow> divergence_probe(const WalkConfig& config,
                                            const Word& g, int k_max,
                                            int horizon) {
    validate_config(config);
    const Isometry iso = evaluate(config.model, g);
    const double L = translation_length(iso);
    if (L <= 1e-9)
        throw std::invalid_argument("divergence probe needs a hyperbolic word");
    double cost = 0.0;
    for (const std::string& letter : g.letters)
        cost -= std::log(config.mu.weight(letter));

    std::vector<DivergenceRow> rows;
    Word power;
    for (int k = 0; k <= k_max; ++k) {
        DivergenceRow row;
        row.k = k;
        row.geo_distance = geo_distance(config.model, power);
        const FirstPassage fp = first_passage(config, power, horizon);
        row.green_upper = fp.green_upper;
        row.zero_hits = fp.zero_hits;
        row.gap_lower_bound = k * (L - cost);
        rows.push_back(row);
        power.letters.insert(power.letters.end(), g.letters.begin(),
                             g.letters.end());
    }
    return rows;
}

BoundarySample sample_boundary(const WalkConfig& config, int bins,
                               long long step_cap) {
    validate_config(config);
    if (config.stop_radius < 0.9 || config.stop_radius >= 1.0)
        throw std::invalid_argument("stop_radius must lie in [0.9, 1)");
    const int n = config.model.spec.n;
    if (bins <= 0) bins = 18 * n;
    if (bins % n != 0)
        throw std::invalid_argument("histogram bins must be divisible by n");

    const std::vector<double> cdf = cumulative(config);
    const CounterRng rng(config.seed);
    const double stop2 = config.stop_radius * config.stop_radius;
    const double two_pi = 2.0 * std::numbers::pi;

    BoundarySample sample;
    sample.trials = config.trials;
    sample.histogram.assign(bins, 0);
    for (int t = 0; t < config.trials; ++t) {
        Isometry iso = identity_isometry();
        DiskPoint p = config.model.base_point;
        bool converged = false;
        for (long long k = 0; k < step_cap; ++k) {
            iso = compose(iso, config.model.generators[pick(cdf, rng.uniform(t, k))].iso);
            p = apply(iso, config.model.base_point);
            if (p.norm2() > stop2) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            ++sample.non_converged;
            continue;
        }
        double angle = std::atan2(p.y, p.x);
        if (angle < 0.0) angle += two_pi;
        sample.angles.push_back(angle);
        int b = static_cast<int>(angle / two_pi * bins);
        if (b >= bins) b = bins - 1;
        ++sample.histogram[b];
    }
    if (2 * sample.non_converged > config.trials)
        throw std::runtime_error(
            "over half the trials failed to reach stop_radius; lower it");
    return sample;
}

bool rotation_symmetry_ok(const std::vector<long long>& histogram, int n) {
    const int bins = static_cast<int>(histogram.size());
    if (n <= 0 || bins % n != 0)
        throw std::invalid_argument("histogram bins must be divisible by n");
    const int shift = bins / n;
    for (int b = 0; b < bins; ++b) {
        const double c1 = static_cast<double>(histogram[b]);
        const double c2 = static_cast<double>(histogram[(b + shift) % bins]);
        const double sigma = std::sqrt(std::max(c1 + c2, 1.0));
        if (std::abs(c1 - c2) > 4.0 * sigma) return false;
    }
    return true;
}

std::string walk_stats_json(const WalkStats& stats) {
    nlohmann::ordered_json j;
    j["drift_hat"] = stats.drift_hat;
    j["drift_stderr"] = stats.drift_stderr;
    j["entropy_hat"] = stats.entropy_hat;
    j["entropy_stderr"] = stats.entropy_stderr;
    j["volume_hat"] = stats.volume_hat;
    j["fi_gap"] = stats.fi_gap;
    j["samples_used"] = stats.samples_used;
    j["entropy_downward_biased"] = stats.entropy_downward_biased;
    return j.dump(2);
}

std::string boundary_csv(const BoundarySample& sample) {
    std::ostringstream out;
    out.precision(12);
    out << "bin_center,count\n";
    const int bins = static_cast<int>(sample.histogram.size());
    const double two_pi = 2.0 * std::numbers::pi;
    for (int b = 0; b < bins; ++b)
        out << (b + 0.5) * two_pi / bins << ',' << sample.histogram[b] << '\n';
    return out.str();
}

std::string boundary_json(const BoundarySample& sample) {
    nlohmann::ordered_json j;
    j["trials"] = sample.trials;
    j["converged"] = sample.trials - sample.non_converged;
    j["non_converged"] = sample.non_converged;
    j["bins"] = sample.histogram.size();
    j["histogram"] = sample.histogram;
    return j.dump(2);
}

} // namespace hypwalk
