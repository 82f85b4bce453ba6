#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypwalk/group.hpp"

namespace hypwalk {

/// Probability measure on the generator labels of a nearest-neighbour walk.
struct StepMeasure {
    std::map<std::string, double> weights;

    double weight(const std::string& label) const;
    /// Checks positivity and normalization; for Fuchsian models additionally
    /// the symmetry mu(t_i) = mu(t_{i+n/2}).
    void validate(const GroupModel& model) const;
};

StepMeasure uniform_measure(const GroupModel& model);

/// Verdict of the length-vs-weight criterion for one word: gap =
/// translation length minus -sum log mu(letter); gap > 0 certifies a
/// singular hitting measure via the walk's Green-metric comparison.
struct CriterionReport {
    Word word;
    double L = 0.0;           // translation length of the word's product
    double weight_cost = 0.0; // -sum log mu(s_i)
    double gap = 0.0;         // L - weight_cost
    bool verdict = false;     // gap > 0
    bool borderline = false;  // |gap| within 1e-12 of zero
};

struct RegionRow {
    int n = 0;
    int m = 0;
    bool verdict = false;
    double gap = 0.0;
};

struct RegionTable {
    Family family = Family::Reflection;
    std::vector<RegionRow> pairs;
    std::vector<std::pair<int, int>> exceptional; // verdict-false hyperbolic pairs
};

struct AuxValues {
    double f = 0.0;   // cos(pi/m)/sin(pi/n)
    double g = 0.0;   // sin(pi/m) cosh(a_{n,m})
    double f_l = 0.0; // cos(pi/m)
    double f_r = 0.0; // sin(pi/n) (sqrt(n)+1/2)/2
    double g_L = 0.0;
    double g_R = 0.0;
};

/// Distance from the polygon center to a side plus center to a vertex,
/// the quantity entering the odd-case translation length.
double vertex_path_length(int n, int m); // a_{n,m}

CriterionReport criterion_gap(const GroupModel& model, const StepMeasure& mu,
                              const Word& w);

/// 4 arccosh(cos(pi/m)/sin(pi/n)) > 2 log n, for even n, m >= 4.
/// Returns (holds, margin = LHS - RHS).
std::pair<bool, double> even_inequality(int n, int m);

/// sin(pi/m) cosh(a_{n,m}) > cosh(log n), for odd n >= 5 and even m >= 4.
/// Returns (holds, margin = LHS - RHS).
std::pair<bool, double> odd_inequality(int n, int m);

AuxValues aux_functions(int n, int m);

/// Best single-translation criterion for F_{n,m}: picks i maximizing
/// mu(t_i); L = 2 h_{n,m}, cost = -log mu(t_i).
CriterionReport fuchsian_criterion(int n, int m, const StepMeasure& mu);

enum class SweepKind { ReflectionEven, ReflectionOdd, Fuchsian };

/// Sweeps the matching closed-form inequality over the (n,m) grid.
/// Non-hyperbolic or wrong-parity pairs are skipped.
RegionTable sweep(SweepKind kind, int n_min, int n_max, int m_min, int m_max,
                  int cap = 50);

/// Dirichlet-diameter heuristic for a generic 2n-sided domain:
/// R_est = log((n-1)/2); passes iff 2 R_est > log(2n).
std::pair<double, bool> dirichlet_heuristic(int n);

std::string region_csv(const RegionTable& table);
std::string region_svg(const RegionTable& table);
std::string report_json(const CriterionReport& report);

} // namespace hypwalk
