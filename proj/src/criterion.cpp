#include "hypwalk/criterion.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hypwalk {

namespace {

constexpr double pi = std::numbers::pi;

void require_even(int v, const char* name) {
    if (v % 2 != 0)
        throw std::invalid_argument(std::string(name) + " must be even, got " +
                                    std::to_string(v));
}

CriterionReport make_report(Word word, double L, double cost) {
    CriterionReport r;
    r.word = std::move(word);
    r.L = L;
    r.weight_cost = cost;
    r.gap = L - cost;
    r.verdict = r.gap > 0.0;
    r.borderline = std::abs(r.gap) < 1e-12;
    return r;
}

} // namespace

double StepMeasure::weight(const std::string& label) const {
    auto it = weights.find(label);
    if (it == weights.end())
        throw std::invalid_argument("label '" + label +
                                    "' is outside the measure's support");
    return it->second;
}

void StepMeasure::validate(const GroupModel& model) const {
    double sum = 0.0;
    for (const auto& [label, w] : weights) {
        model.generator_index(label); // throws for unknown labels
        if (!(w > 0.0))
            throw std::invalid_argument("measure weight for '" + label +
                                        "' must be positive");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("measure weights must sum to 1, got " +
                                    std::to_string(sum));
    if (model.family == Family::Fuchsian) {
        for (const Generator& g : model.generators) {
            if (std::abs(weight(g.label) - weight(g.inverse_label)) > 1e-12)
                throw std::invalid_argument(
                    "Fuchsian walk measure must be symmetric: mu(" + g.label +
                    ") != mu(" + g.inverse_label + ")");
        }
    }
}

StepMeasure uniform_measure(const GroupModel& model) {
    StepMeasure mu;
    const double w = 1.0 / model.generators.size();
    for (const Generator& g : model.generators) mu.weights[g.label] = w;
    return mu;
}

double vertex_path_length(int n, int m) {
    return std::acosh(std::cos(pi / m) / std::sin(pi / n)) +
           std::acosh(1.0 / (std::tan(pi / m) * std::tan(pi / n)));
}

CriterionReport criterion_gap(const GroupModel& model, const StepMeasure& mu,
                              const Word& w) {
    mu.validate(model);
    double cost = 0.0;
    for (const std::string& letter : w.letters) cost -= std::log(mu.weight(letter));
    const Isometry g = evaluate(model, w);
    if (g.reversing)
        throw std::invalid_argument("criterion word must evaluate to an "
                                    "orientation-preserving isometry");
    const double L = translation_length(g);
    if (L <= 1e-9)
        throw std::invalid_argument(
            "criterion word must evaluate to a hyperbolic element");
    return make_report(w, L, cost);
}

std::pair<bool, double> even_inequality(int n, int m) {
    require_even(n, "n");
    require_even(m, "m");
    if (n < 4 || m < 4 || !is_hyperbolic_pair(n, m))
        throw std::invalid_argument("even inequality needs a hyperbolic pair "
                                    "with even n, m >= 4");
    const double lhs = 4.0 * std::acosh(std::cos(pi / m) / std::sin(pi / n));
    const double rhs = 2.0 * std::log(static_cast<double>(n));
    return {lhs > rhs, lhs - rhs};
}

std::pair<bool, double> odd_inequality(int n, int m) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("odd inequality needs odd n >= 5");
    require_even(m, "m");
    if (m < 4 || !is_hyperbolic_pair(n, m))
        throw std::invalid_argument("odd inequality needs a hyperbolic pair "
                                    "with even m >= 4");
    const double lhs = std::sin(pi / m) * std::cosh(vertex_path_length(n, m));
    const double rhs = std::cosh(std::log(static_cast<double>(n)));
    return {lhs > rhs, lhs - rhs};
}

AuxValues aux_functions(int n, int m) {
    AuxValues v;
    v.f = std::cos(pi / m) / std::sin(pi / n);
    if (is_hyperbolic_pair(n, m))
        v.g = std::sin(pi / m) * std::cosh(vertex_path_length(n, m));
    v.f_l = std::cos(pi / m);
    v.f_r = std::sin(pi / n) * (std::sqrt(static_cast<double>(n)) + 0.5) / 2.0;
    v.g_L = 2.0 * std::cos(pi / m) * std::cos(pi / m) - 0.5 * std::sin(pi / n) -
            0.5 * std::sin(2.0 * pi / m) * std::tan(pi / n);
    const double s = std::sin(pi / n);
    v.g_R = (s * s / std::cos(pi / n)) * (n + 1) / 2.0;
    return v;
}

CriterionReport fuchsian_criterion(int n, int m, const StepMeasure& mu) {
    const GroupModel model = build_group(Family::Fuchsian, n, m);
    mu.validate(model);
    std::string best;
    double best_w = -1.0;
    for (const Generator& g : model.generators) {
        const double w = mu.weight(g.label);
        if (w > best_w) {
            best_w = w;
            best = g.label;
        }
    }
    const double L = 2.0 * model.spec.inradius;
    return make_report(Word{{best}}, L, -std::log(best_w));
}

RegionTable sweep(SweepKind kind, int n_min, int n_max, int m_min, int m_max,
                  int cap) {
    if (n_max - n_min + 1 > cap || m_max - m_min + 1 > cap)
        throw std::invalid_argument("sweep range exceeds the cap of " +
                                    std::to_string(cap));
    RegionTable table;
    table.family =
        kind == SweepKind::Fuchsian ? Family::Fuchsian : Family::Reflection;
    for (int n = n_min; n <= n_max; ++n) {
        for (int m = m_min; m <= m_max; ++m) {
            if (!is_hyperbolic_pair(n, m)) continue;
            bool holds;
            double gap;
            switch (kind) {
                case SweepKind::ReflectionEven: {
                    if (n % 2 != 0 || m % 2 != 0 || n < 4 || m < 4) continue;
                    std::tie(holds, gap) = even_inequality(n, m);
                    break;
                }
                case SweepKind::ReflectionOdd: {
                    if (n % 2 == 0 || m % 2 != 0 || n < 5 || m < 4) continue;
                    std::tie(holds, gap) = odd_inequality(n, m);
                    break;
                }
                case SweepKind::Fuchsian: {
                    if (n % 2 != 0 || n < 4 || m < 3) continue;
                    // Certified region: the four monotone sufficient bounds
                    // that establish the criterion for every symmetric
                    // nearest-neighbour measure at once. This is slightly
                    // conservative — at (4,7) the raw uniform-measure margin
                    // below is positive, but the pair sits outside the
                    // certified region and is reported as exceptional.
                    holds = (n >= 4 && m >= 8) || (n >= 6 && m >= 5) ||
                            (n >= 8 && m >= 4) || (n >= 12 && m >= 3);
                    const double L =
                        2.0 * std::acosh(std::cos(pi / m) / std::sin(pi / n));
                    gap = L - std::log(static_cast<double>(n));
                    break;
                }
            }
            table.pairs.push_back({n, m, holds, gap});
            if (!holds) table.exceptional.emplace_back(n, m);
        }
    }
    return table;
}

std::pair<double, bool> dirichlet_heuristic(int n) {
    if (n < 3) throw std::invalid_argument("dirichlet heuristic needs n >= 3");
    const double R_est = std::log((n - 1) / 2.0);
    return {R_est, 2.0 * R_est > std::log(2.0 * n)};
}

std::string region_csv(const RegionTable& table) {
    std::ostringstream out;
    out.precision(12);
    out << "n,m,margin,verdict\n";
    for (const RegionRow& row : table.pairs)
        out << row.n << ',' << row.m << ',' << row.gap << ','
            << (row.verdict ? "true" : "false") << '\n';
    return out.str();
}

std::string region_svg(const RegionTable& table) {
    int n_max = 4, m_max = 4;
    for (const RegionRow& row : table.pairs) {
        n_max = std::max(n_max, row.n);
        m_max = std::max(m_max, row.m);
    }
    const int cell = 14, margin = 50;
    const int width = margin * 2 + n_max * cell;
    const int height = margin * 2 + m_max * cell;
    auto px = [&](int n) { return margin + n * cell; };
    auto py = [&](int m) { return height - margin - m * cell; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 10
        << "\" text-anchor=\"middle\">n</text>\n";
    out << "<text x=\"14\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " << height / 2
        << ")\">m</text>\n";
    out << "<text x=\"" << margin << "\" y=\"20\">criterion holds: orange; "
        << "exceptional: blue</text>\n";
    for (const RegionRow& row : table.pairs) {
        out << "<circle cx=\"" << px(row.n) << "\" cy=\"" << py(row.m)
            << "\" r=\"5\" fill=\"" << (row.verdict ? "#ff8c00" : "#1f4e9c")
            << "\"/>\n";
    }
    // axis tick labels every 4
    for (int n = 4; n <= n_max; n += 4)
        out << "<text x=\"" << px(n) << "\" y=\"" << height - margin + 20
            << "\" text-anchor=\"middle\" font-size=\"10\">" << n << "</text>\n";
    for (int m = 4; m <= m_max; m += 4)
        out << "<text x=\"" << margin - 20 << "\" y=\"" << py(m) + 4
            << "\" text-anchor=\"middle\" font-size=\"10\">" << m << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

std::string report_json(const CriterionReport& report) {
    nlohmann::ordered_json j;
    j["word"] = report.word.letters;
    j["L"] = report.L;
    j["weight_cost"] = report.weight_cost;
    j["gap"] = report.gap;
    j["verdict"] = report.verdict;
    j["borderline"] = report.borderline;
    return j.dump(2);
}

} // namespace hypwalk
