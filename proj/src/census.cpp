#include "hypwalk/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hypwalk {

namespace {

constexpr double kCell = 1e-7;      // quantization grid for orbit points
constexpr double kSamePoint = 1e-6; // below this, two reps are the same element

int64_t cell_key(int64_t qx, int64_t qy) {
    return qx * 2000003459LL + qy; // mixes into one 64-bit key
}

double matrix_distance(const Isometry& g, const Isometry& h) {
    auto diff = [&](double s) {
        return std::max({std::abs(g.a - s * h.a), std::abs(g.b - s * h.b),
                         std::abs(g.c - s * h.c), std::abs(g.d - s * h.d)});
    };
    return std::min(diff(1.0), diff(-1.0));
}

struct Node {
    Isometry iso;
    DiskPoint orbit;
    double distance;
};

} // namespace

BallCensus ball_census(const GroupModel& model, double R_max, double step,
                       double cap) {
    if (R_max > cap)
        throw std::runtime_error("ball census budget exceeded: R_max " +
                                 std::to_string(R_max) + " > cap " +
                                 std::to_string(cap));
    if (step <= 0.0) throw std::invalid_argument("census step must be positive");
    if (!model.trivial_stabilizer)
        throw std::invalid_argument(
            "ball census requires a base point with trivial stabilizer; this "
            "model has a short elliptic word fixing it");

    // Elements within R_max can require intermediate elements slightly
    // further out; every tile on a connecting chain touches the geodesic, so
    // its center stays within R_max + 2*circumradius.
    const double expand_limit = R_max + 2.0 * model.spec.circumradius;

    std::vector<Node> nodes;
    std::unordered_map<int64_t, std::vector<size_t>> cells;

    auto find_or_insert = [&](const Isometry& iso, const DiskPoint& p,
                              double d) -> bool {
        const int64_t qx = llround(p.x / kCell);
        const int64_t qy = llround(p.y / kCell);
        for (int64_t dx = -1; dx <= 1; ++dx) {
            for (int64_t dy = -1; dy <= 1; ++dy) {
                auto it = cells.find(cell_key(qx + dx, qy + dy));
                if (it == cells.end()) continue;
                for (size_t idx : it->second) {
                    const Node& other = nodes[idx];
                    const double ex = other.orbit.x - p.x;
                    const double ey = other.orbit.y - p.y;
                    if (ex * ex + ey * ey < kSamePoint * kSamePoint) {
                        if (other.iso.reversing == iso.reversing &&
                            matrix_distance(other.iso, iso) > 1e-5)
                            throw std::runtime_error(
                                "orbit-point quantization collision between "
                                "distinct group elements");
                        return false; // already known
                    }
                }
            }
        }
        cells[cell_key(qx, qy)].push_back(nodes.size());
        nodes.push_back({iso, p, d});
        return true;
    };

    find_or_insert(identity_isometry(), model.base_point, 0.0);
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        const size_t cur = queue.front();
        queue.pop_front();
        if (nodes[cur].distance > expand_limit) continue;
        for (const Generator& gen : model.generators) {
            const Isometry next = compose(nodes[cur].iso, gen.iso);
            const DiskPoint p = apply(next, model.base_point);
            const double d = dist(model.base_point, p);
            if (d > expand_limit) continue;
            if (find_or_insert(next, p, d)) queue.push_back(nodes.size() - 1);
        }
    }

    std::vector<double> distances;
    distances.reserve(nodes.size());
    for (const Node& node : nodes)
        if (node.distance <= R_max) distances.push_back(node.distance);
    std::sort(distances.begin(), distances.end());

    BallCensus census;
    for (double r = 0.0; r <= R_max + 1e-12; r += step)
        census.radius_grid.push_back(r);
    if (census.radius_grid.back() < R_max - 1e-12)
        census.radius_grid.push_back(R_max); // grid always reaches R_max itself
    for (double r : census.radius_grid) {
        const auto upper = std::upper_bound(distances.begin(), distances.end(),
                                            r + 1e-12);
        census.counts.push_back(upper - distances.begin());
    }

    // least-squares slope of log(count) vs R over the top half of the grid
    const size_t lo = census.radius_grid.size() / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t k = 0;
    for (size_t j = lo; j < census.radius_grid.size(); ++j) {
        const double x = census.radius_grid[j];
        const double y = std::log(static_cast<double>(census.counts[j]));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++k;
    }
    if (k >= 2 && k * sxx - sx * sx > 0)
        census.slope_estimate = (k * sxy - sx * sy) / (k * sxx - sx * sx);

    return census;
}

std::string census_csv(const BallCensus& census) {
    std::ostringstream out;
    out.precision(12);
    out << "R,count,log_count\n";
    for (size_t j = 0; j < census.radius_grid.size(); ++j)
        out << census.radius_grid[j] << ',' << census.counts[j] << ','
            << std::log(static_cast<double>(census.counts[j])) << '\n';
    return out.str();
}

} // namespace hypwalk
