#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypwalk/census.hpp"
#include "hypwalk/criterion.hpp"
#include "hypwalk/walk.hpp"

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "hypwalk 1.0.0";

hypwalk::Family parse_family(const std::string& s) {
    if (s == "reflection") return hypwalk::Family::Reflection;
    if (s == "fuchsian") return hypwalk::Family::Fuchsian;
    throw CLI::ValidationError("--family must be 'reflection' or 'fuchsian'");
}

hypwalk::StepMeasure parse_measure(const std::string& spec,
                                   const hypwalk::GroupModel& model) {
    if (spec == "uniform") return hypwalk::uniform_measure(model);
    hypwalk::StepMeasure mu;
    std::stringstream ss(spec);
    std::string item;
    size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= model.generators.size())
            throw std::invalid_argument("more weights than generators");
        mu.weights[model.generators[i].label] = std::stod(item);
        ++i;
    }
    if (i != model.generators.size())
        throw std::invalid_argument("expected " +
                                    std::to_string(model.generators.size()) +
                                    " weights, got " + std::to_string(i));
    return mu;
}

ordered_json make_manifest(const std::string& command,
                           const ordered_json& parameters, uint64_t seed) {
    ordered_json m;
    m["command"] = command;
    m["parameters"] = parameters;
    m["tool_version"] = kVersion;
    m["seed"] = seed;
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    m["timestamp"] = buf;
    return m;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

void emit_manifest(const std::string& out_path, const ordered_json& manifest) {
    write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
}

struct CommonOpts {
    std::string family = "reflection";
    int n = 4;
    int m = 8;
    std::string mu = "uniform";
    std::string format = "text";
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_mu = true) {
    cmd->set_config("--config", "", "TOML-style key=value config file");
    cmd->add_option("--family", opts.family, "group family")
        ->check(CLI::IsMember({"reflection", "fuchsian"}));
    cmd->add_option("-n", opts.n, "polygon side count");
    cmd->add_option("-m", opts.m, "interior angle denominator (angle 2*pi/m)");
    if (with_mu)
        cmd->add_option("--mu", opts.mu, "'uniform' or comma-separated weights");
    cmd->add_option("--format", opts.format)
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--threads", opts.threads, "worker cap (advisory)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperbolic reflection/Fuchsian group walk toolkit"};
    app.set_config("--config", "", "TOML-style key=value config file");
    app.require_subcommand(1);

    CommonOpts opts;
    std::string word_spec, out_csv, out_svg, out_json;
    int steps = 50, trials = 10000;
    uint64_t seed = 0;
    double stop_radius = 1.0 - 1e-4, rmax = 10.0, census_step = 0.25;
    int nmin = 4, nmax = 50, mmin = 0, mmax = 50, horizon = 200, kmax = 3;
    std::string parity = "even";
    int bins = 0;

    CLI::App* check = app.add_subcommand("check", "evaluate the singularity criterion for one pair");
    add_common(check, opts);
    check->add_option("--word", word_spec, "criterion word, e.g. r1,r3");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "criterion region over an (n,m) grid");
    add_common(sweep_cmd, opts, false);
    sweep_cmd->add_option("--parity", parity, "reflection sweeps: even or odd n")
        ->check(CLI::IsMember({"even", "odd"}));
    sweep_cmd->add_option("--nmin", nmin);
    sweep_cmd->add_option("--nmax", nmax);
    sweep_cmd->add_option("--mmin", mmin, "defaults: 4 (reflection), 3 (fuchsian)");
    sweep_cmd->add_option("--mmax", mmax);
    sweep_cmd->add_option("--out-csv", out_csv);
    sweep_cmd->add_option("--out-svg", out_svg);

    CLI::App* sim = app.add_subcommand("simulate", "drift/entropy Monte Carlo estimates");
    add_common(sim, opts);
    sim->add_option("--steps", steps);
    sim->add_option("--trials", trials);
    sim->add_option("--seed", seed);
    sim->add_option("--out-json", out_json);

    CLI::App* ball = app.add_subcommand("ball", "ball census and volume-growth slope");
    add_common(ball, opts, false);
    ball->add_option("--rmax", rmax);
    ball->add_option("--step", census_step);
    ball->add_option("--out-csv", out_csv);

    CLI::App* boundary = app.add_subcommand("boundary", "sample the boundary hitting measure");
    add_common(boundary, opts);
    boundary->add_option("--trials", trials);
    boundary->add_option("--seed", seed);
    boundary->add_option("--stop-radius", stop_radius);
    boundary->add_option("--bins", bins, "histogram bins (multiple of n)");
    boundary->add_option("--out-csv", out_csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const bool json_out = opts.format == "json";
    try {
        if (check->parsed()) {
            const hypwalk::Family family = parse_family(opts.family);
            hypwalk::CriterionReport report;
            if (family == hypwalk::Family::Fuchsian) {
                const hypwalk::GroupModel model =
                    hypwalk::build_group(family, opts.n, opts.m);
                report = hypwalk::fuchsian_criterion(
                    opts.n, opts.m, parse_measure(opts.mu, model));
            } else {
                const hypwalk::GroupModel model =
                    hypwalk::build_group(family, opts.n, opts.m);
                hypwalk::Word w;
                if (!word_spec.empty()) {
                    w = hypwalk::parse_word(word_spec);
                } else if (opts.n % 2 == 0) {
                    w.letters = {"r1", "r" + std::to_string(opts.n / 2 + 1)};
                } else {
                    w.letters = {"r1", "r" + std::to_string((opts.n + 1) / 2)};
                }
                report = hypwalk::criterion_gap(model, parse_measure(opts.mu, model), w);
            }
            ordered_json j = ordered_json::parse(hypwalk::report_json(report));
            ordered_json params{{"family", opts.family}, {"n", opts.n},
                                {"m", opts.m},           {"mu", opts.mu},
                                {"word", word_spec}};
            j["manifest"] = make_manifest("check", params, 0);
            if (json_out)
                std::cout << j.dump(2) << "\n";
            else
                std::cout << "verdict " << (report.verdict ? "true" : "false")
                          << "  L=" << report.L << "  cost=" << report.weight_cost
                          << "  gap=" << report.gap
                          << (report.borderline ? "  (borderline)" : "") << "\n";
            return report.verdict ? 0 : 1;
        }

        if (sweep_cmd->parsed()) {
            const hypwalk::Family family = parse_family(opts.family);
            hypwalk::SweepKind kind;
            if (family == hypwalk::Family::Fuchsian) {
                kind = hypwalk::SweepKind::Fuchsian;
                if (mmin == 0) mmin = 3;
            } else {
                kind = parity == "even" ? hypwalk::SweepKind::ReflectionEven
                                        : hypwalk::SweepKind::ReflectionOdd;
                if (mmin == 0) mmin = 4;
            }
            const hypwalk::RegionTable table =
                hypwalk::sweep(kind, nmin, nmax, mmin, mmax);
            ordered_json params{{"family", opts.family}, {"parity", parity},
                                {"nmin", nmin},          {"nmax", nmax},
                                {"mmin", mmin},          {"mmax", mmax}};
            const ordered_json manifest = make_manifest("sweep", params, 0);
            if (!out_csv.empty()) {
                write_file(out_csv, hypwalk::region_csv(table));
                emit_manifest(out_csv, manifest);
            }
            if (!out_svg.empty()) {
                write_file(out_svg, hypwalk::region_svg(table));
                emit_manifest(out_svg, manifest);
            }
            ordered_json exc = ordered_json::array();
            for (auto [n, m] : table.exceptional) exc.push_back({n, m});
            if (json_out) {
                ordered_json j{{"pairs_evaluated", table.pairs.size()},
                               {"exceptional", exc}};
                j["manifest"] = manifest;
                std::cout << j.dump(2) << "\n";
            } else {
                if (table.pairs.empty())
                    std::cerr << "warning: empty valid range\n";
                std::cout << "exceptional {";
                for (size_t i = 0; i < table.exceptional.size(); ++i)
                    std::cout << (i ? "," : "") << "("
                              << table.exceptional[i].first << ","
                              << table.exceptional[i].second << ")";
                std::cout << "}\n";
            }
            return 0;
        }

        if (sim->parsed()) {
            if (steps < 1) {
                std::cerr << "error: --steps must be >= 1\n";
                return 2;
            }
            hypwalk::WalkConfig config;
            config.model = hypwalk::build_group(parse_family(opts.family), opts.n, opts.m);
            config.mu = parse_measure(opts.mu, config.model);
            config.steps = steps;
            config.trials = trials;
            config.seed = seed;
            const hypwalk::WalkStats stats = hypwalk::simulate(config);
            ordered_json j = ordered_json::parse(hypwalk::walk_stats_json(stats));
            ordered_json params{{"family", opts.family}, {"n", opts.n},
                                {"m", opts.m},           {"mu", opts.mu},
                                {"steps", steps},        {"trials", trials}};
            j["manifest"] = make_manifest("simulate", params, seed);
            const std::string payload = j.dump(2) + "\n";
            std::cout << payload;
            if (!out_json.empty()) {
                write_file(out_json, hypwalk::walk_stats_json(stats) + "\n");
                emit_manifest(out_json, j["manifest"]);
            }
            return 0;
        }

        if (ball->parsed()) {
            const hypwalk::GroupModel model =
                hypwalk::build_group(parse_family(opts.family), opts.n, opts.m);
            const hypwalk::BallCensus census =
                hypwalk::ball_census(model, rmax, census_step);
            ordered_json params{{"family", opts.family}, {"n", opts.n},
                                {"m", opts.m},           {"rmax", rmax},
                                {"step", census_step}};
            const ordered_json manifest = make_manifest("ball", params, 0);
            if (!out_csv.empty()) {
                write_file(out_csv, hypwalk::census_csv(census));
                emit_manifest(out_csv, manifest);
            }
            if (json_out) {
                ordered_json j{{"slope_estimate", census.slope_estimate},
                               {"radius_grid", census.radius_grid},
                               {"counts", census.counts}};
                j["manifest"] = manifest;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "slope_estimate " << census.slope_estimate << "\n";
                if (out_csv.empty()) std::cout << hypwalk::census_csv(census);
            }
            return 0;
        }

        if (boundary->parsed()) {
            hypwalk::WalkConfig config;
            config.model = hypwalk::build_group(parse_family(opts.family), opts.n, opts.m);
            config.mu = parse_measure(opts.mu, config.model);
            config.trials = trials;
            config.seed = seed;
            config.stop_radius = stop_radius;
            const hypwalk::BoundarySample sample =
                hypwalk::sample_boundary(config, bins);
            ordered_json params{{"family", opts.family}, {"n", opts.n},
                                {"m", opts.m},           {"mu", opts.mu},
                                {"trials", trials},
                                {"stop_radius", stop_radius}};
            const ordered_json manifest = make_manifest("boundary", params, seed);
            if (!out_csv.empty()) {
                write_file(out_csv, hypwalk::boundary_csv(sample));
                emit_manifest(out_csv, manifest);
            }
            if (json_out) {
                ordered_json j = ordered_json::parse(hypwalk::boundary_json(sample));
                j["manifest"] = manifest;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "converged " << (sample.trials - sample.non_converged)
                          << "/" << sample.trials << "\n";
                if (out_csv.empty()) std::cout << hypwalk::boundary_csv(sample);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
