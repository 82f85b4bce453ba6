#include "hypwalk/group.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hypwalk {

namespace {

constexpr double kIdTol = 1e-9;

// DFS over reduced words; returns the length of the first word found that
// fixes the base point without being the group identity, or 0 if none exists
// up to the requested depth.
int stabilizer_dfs(const GroupModel& model, const Isometry& prefix, int last,
                   int remaining, int length) {
    if (remaining == 0) return 0;
    const int n = static_cast<int>(model.generators.size());
    for (int i = 0; i < n; ++i) {
        if (last >= 0 &&
            model.generators[last].inverse_label == model.generators[i].label)
            continue; // immediate backtrack, not reduced
        const Isometry g = compose(prefix, model.generators[i].iso);
        const DiskPoint img = apply(g, model.base_point);
        if (dist(img, model.base_point) < kIdTol && !approx_identity(g, 1e-7))
            return length;
        if (const int hit = stabilizer_dfs(model, g, i, remaining - 1, length + 1))
            return hit;
    }
    return 0;
}

int check_stabilizer(const GroupModel& model, int depth) {
    return stabilizer_dfs(model, identity_isometry(), -1, depth, 1);
}

} // namespace

int GroupModel::generator_index(const std::string& label) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i].label == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown generator label '" + label + "'");
}

GroupModel build_group(Family family, int n, int m, int stabilizer_check_depth) {
    if (family == Family::Reflection) {
        if (m < 4 || m % 2 != 0)
            throw std::invalid_argument(
                "reflection group requires even m >= 4, got m=" + std::to_string(m));
        if (n < 3)
            throw std::invalid_argument("reflection group requires n >= 3");
    } else {
        if (n < 4 || n % 2 != 0)
            throw std::invalid_argument(
                "Fuchsian group requires even n >= 4, got n=" + std::to_string(n));
        if (m < 3)
            throw std::invalid_argument("Fuchsian group requires m >= 3");
    }

    GroupModel model;
    model.family = family;
    model.spec = polygon_spec(n, m);
    model.base_point = DiskPoint{0.0, 0.0};

    const std::vector<Isometry> refl = side_reflections(model.spec);
    const double half_pi = std::numbers::pi / 2.0;
    for (int i = 0; i < n; ++i) {
        Generator g;
        if (family == Family::Reflection) {
            g.label = "r" + std::to_string(i + 1);
            g.iso = refl[i];
            g.inverse_label = g.label;
        } else {
            // t_i translates the center along direction side_angles[i] by
            // 2*inradius: reflect in the central diameter orthogonal to the
            // axis, then in side i.
            g.label = "t" + std::to_string(i + 1);
            g.iso = compose(refl[i],
                            diameter_reflection(model.spec.side_angles[i] + half_pi));
            g.inverse_label = "t" + std::to_string((i + n / 2) % n + 1);
        }
        model.generators.push_back(std::move(g));
    }

    if (stabilizer_check_depth > 0) {
        if (const int hit = check_stabilizer(model, stabilizer_check_depth)) {
            // Some Fuchsian pairs carry a genuine elliptic element rotating
            // about the base point, e.g. t1 t3 t5 t1 in F_{6,4}; the model is
            // still valid for walks and criteria, just not for the census.
            if (family == Family::Fuchsian)
                model.trivial_stabilizer = false;
            else
                throw std::runtime_error(
                    "base point has a nontrivial stabilizer at word length " +
                    std::to_string(hit));
        }
    }
    return model;
}

Isometry evaluate(const GroupModel& model, const Word& w) {
    Isometry g = identity_isometry();
    for (const std::string& label : w.letters)
        g = compose(g, model.generators[model.generator_index(label)].iso);
    return g;
}

double geo_distance(const GroupModel& model, const Word& w) {
    // base_point is always the disk origin, so the matrix-based displacement
    // applies; it stays accurate for long words whose image points collapse
    // onto the unit circle.
    return displacement(evaluate(model, w));
}

Word parse_word(const std::string& s) {
    Word w;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) w.letters.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) w.letters.push_back(cur);
    return w;
}

std::string family_name(Family family) {
    return family == Family::Reflection ? "reflection" : "fuchsian";
}

} // namespace hypwalk
