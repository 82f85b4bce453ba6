// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Heavier Monte Carlo settings live here rather than in unit tests.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "hypwalk/census.hpp"
#include "hypwalk/criterion.hpp"
#include "hypwalk/walk.hpp"

using namespace hypwalk;

namespace {

constexpr double pi = std::numbers::pi;
int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
                detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string pair_list(const std::vector<std::pair<int, int>>& ps) {
    std::string out = "{";
    for (size_t i = 0; i < ps.size(); ++i)
        out += (i ? "," : "") + ("(" + std::to_string(ps[i].first) + "," +
                                 std::to_string(ps[i].second) + ")");
    return out + "}";
}

void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const RegionTable even = sweep(SweepKind::ReflectionEven, 4, 50, 4, 50);
    const RegionTable odd = sweep(SweepKind::ReflectionOdd, 5, 49, 4, 50);
    const RegionTable fuch = sweep(SweepKind::Fuchsian, 4, 50, 3, 50);
    bool rejected44 = false;
    try {
        polygon_spec(4, 4);
    } catch (const std::invalid_argument&) {
        rejected44 = true;
    }
    const double elapsed = seconds_since(t0);
    const bool ok =
        even.exceptional == std::vector<std::pair<int, int>>{{4, 6}, {6, 4}} &&
        odd.exceptional == std::vector<std::pair<int, int>>{{5, 4}} &&
        fuch.exceptional == std::vector<std::pair<int, int>>{{4, 5}, {4, 6},
                                                             {4, 7}, {6, 4},
                                                             {8, 3}, {10, 3}} &&
        rejected44 && elapsed < 1.0;
    report(1, ok,
           "exceptional sets even=" + pair_list(even.exceptional) +
               " odd=" + pair_list(odd.exceptional) +
               " fuchsian=" + pair_list(fuch.exceptional) + ", (4,4) rejected=" +
               (rejected44 ? "yes" : "no") + ", " + std::to_string(elapsed) + "s");
}

void criterion2() {
    struct Probe {
        double got, want;
    };
    std::vector<Probe> probes = {
        {aux_functions(4, 7).f, 1.27416},   {aux_functions(6, 4).f, 1.41421},
        {aux_functions(8, 3).f, 1.30656},   {aux_functions(4, 8).f_l, 0.923879},
        {aux_functions(4, 6).f_l, 0.866},   {aux_functions(4, 4).f_l, 0.7071},
        {aux_functions(4, 3).f_l, 0.5},     {aux_functions(4, 4).f_r, 0.88388},
        {aux_functions(6, 4).f_r, 0.73737}, {aux_functions(8, 4).f_r, 0.63686},
        {aux_functions(14, 4).f_r, 0.4719}, {aux_functions(5, 10).g_L, 1.3016},
        {aux_functions(7, 5).g_L, 0.863073},{aux_functions(9, 4).g_L, 0.647005},
        {aux_functions(5, 10).g_R, 1.28115},{aux_functions(7, 5).g_R, 0.83579},
        {aux_functions(9, 4).g_R, 0.622426}};
    double worst = 0.0;
    for (const Probe& p : probes)
        worst = std::max(worst, std::abs(p.got - p.want));
    report(2, worst < 1e-3,
           "tabulated constants, worst deviation " + std::to_string(worst));
}

void criterion3() {
    double worst = 0.0;
    for (int n = 4; n <= 20; n += 2) {
        for (int m = 4; m <= 20; m += 2) {
            if (!is_hyperbolic_pair(n, m)) continue;
            const GroupModel g = build_group(Family::Reflection, n, m, 2);
            const double traced = translation_length(
                evaluate(g, Word{{"r1", "r" + std::to_string(n / 2 + 1)}}));
            const double closed =
                4.0 * std::acosh(std::cos(pi / m) / std::sin(pi / n));
            worst = std::max(worst, std::abs(traced - closed));
        }
    }
    for (int n = 5; n <= 19; n += 2) {
        for (int m = 4; m <= 20; m += 2) {
            if (!is_hyperbolic_pair(n, m)) continue;
            const GroupModel g = build_group(Family::Reflection, n, m, 2);
            const double traced = translation_length(
                evaluate(g, Word{{"r1", "r" + std::to_string((n + 1) / 2)}}));
            const double closed =
                2.0 * std::acosh(std::sin(pi / m) *
                                 std::cosh(vertex_path_length(n, m)));
            worst = std::max(worst, std::abs(traced - closed));
        }
    }
    report(3, worst < 1e-9,
           "trace vs closed-form translation lengths, worst deviation " +
               std::to_string(worst));
}

void criterion4() {
    bool ok = true;
    for (int n = 4; n <= 20 && ok; ++n) {
        for (int m = 4; m <= 20 && ok; m += 2) {
            if (!is_hyperbolic_pair(n, m)) continue;
            const GroupModel g = build_group(Family::Reflection, n, m, 2);
            for (int i = 0; i < n && ok; ++i) {
                const std::string ri = "r" + std::to_string(i + 1);
                const std::string rj = "r" + std::to_string((i + 1) % n + 1);
                if (!approx_identity(evaluate(g, Word{{ri, ri}}), 1e-9)) ok = false;
                Word braid;
                for (int k = 0; k < m / 2; ++k) {
                    braid.letters.push_back(ri);
                    braid.letters.push_back(rj);
                }
                if (!approx_identity(evaluate(g, braid), 1e-9)) ok = false;
            }
        }
    }
    for (int n = 4; n <= 20 && ok; n += 2) {
        for (int m = 3; m <= 20 && ok; ++m) {
            if (!is_hyperbolic_pair(n, m)) continue;
            const GroupModel f = build_group(Family::Fuchsian, n, m, 2);
            for (int i = 0; i < n && ok; ++i) {
                const std::string ti = "t" + std::to_string(i + 1);
                const std::string tj = "t" + std::to_string((i + n / 2) % n + 1);
                if (!approx_identity(evaluate(f, Word{{ti, tj}}), 1e-9)) ok = false;
            }
        }
    }
    report(4, ok, "relator and inverse suite over the (n,m) grid at 1e-9");
}

void criterion5() {
    const auto t0 = std::chrono::steady_clock::now();
    const GroupModel g = build_group(Family::Reflection, 4, 8);
    const BallCensus census = ball_census(g, 10.0, 0.25);
    const double elapsed = seconds_since(t0);
    const double A = 2.0 * g.spec.circumradius;
    bool sandwich = true;
    for (size_t j = 0; j < census.radius_grid.size(); ++j) {
        const double R = census.radius_grid[j];
        if (R < 2.0 * A) continue;
        const double lower =
            4.0 * pi * std::pow(std::sinh((R - A) / 2.0), 2) / g.spec.area;
        const double upper =
            4.0 * pi * std::pow(std::sinh((R + A) / 2.0), 2) / g.spec.area;
        const double count = static_cast<double>(census.counts[j]);
        if (count < lower || count > upper) sandwich = false;
    }
    const bool ok = census.slope_estimate >= 0.8 && census.slope_estimate <= 1.2 &&
                    sandwich && elapsed < 60.0;
    report(5, ok,
           "ball census slope " + std::to_string(census.slope_estimate) +
               ", sandwich " + (sandwich ? "holds" : "violated") + ", " +
               std::to_string(elapsed) + "s");
}

void criterion6() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (Family family : {Family::Reflection, Family::Fuchsian}) {
        WalkConfig config;
        config.model = build_group(family, 4, 8);
        config.mu = uniform_measure(config.model);
        config.steps = 50;
        config.trials = 10000;
        config.seed = 20240817;
        const WalkStats stats = simulate(config);
        const double slack = 3.0 * (stats.drift_stderr + stats.entropy_stderr);
        if (!(stats.entropy_hat <= stats.drift_hat * 1.0 + slack)) ok = false;
        detail += family_name(family) + " h=" + std::to_string(stats.entropy_hat) +
                  " l=" + std::to_string(stats.drift_hat) + "; ";
    }
    {
        WalkConfig config;
        config.model = build_group(Family::Reflection, 4, 8);
        config.mu = uniform_measure(config.model);
        config.trials = 10000;
        config.seed = 99;
        const FirstPassage fp = first_passage(config, Word{{"r1", "r3"}}, 200);
        if (!(fp.F_hat >= 1.0 / 16.0 - 3.0 * fp.stderr_)) ok = false;
        detail += "F_hat=" + std::to_string(fp.F_hat) + "; ";
    }
    {
        WalkConfig config;
        config.model = build_group(Family::Reflection, 4, 8);
        config.mu = uniform_measure(config.model);
        config.trials = 100000;
        config.seed = 7;
        const BoundarySample s = sample_boundary(config, 72);
        if (!rotation_symmetry_ok(s.histogram, 4)) ok = false;
        detail += "boundary symmetry " +
                  std::string(rotation_symmetry_ok(s.histogram, 4) ? "ok" : "bad");
    }
    const double elapsed = seconds_since(t0);
    report(6, ok && elapsed < 300.0,
           detail + ", " + std::to_string(elapsed) + "s");
}

void criterion7() {
    WalkConfig config;
    config.model = build_group(Family::Reflection, 4, 8);
    config.mu = uniform_measure(config.model);
    config.trials = 4000;
    config.seed = 5;
    const auto rows = divergence_probe(config, Word{{"r1", "r3"}}, 3, 200);
    const double per_k =
        4.0 * config.model.spec.inradius - 2.0 * std::log(4.0);
    bool ok = per_k > 0.0;
    double worst = 0.0;
    for (int k = 1; k <= 3; ++k) {
        worst = std::max(worst, std::abs(rows[k].gap_lower_bound - k * per_k));
        if (rows[k].gap_lower_bound <= rows[k - 1].gap_lower_bound) ok = false;
    }
    ok = ok && worst < 1e-9;
    report(7, ok,
           "divergence gap grows linearly, per-step gap " +
               std::to_string(per_k) + ", worst deviation " +
               std::to_string(worst));
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
