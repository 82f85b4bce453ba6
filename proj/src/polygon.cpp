#include "hypwalk/polygon.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hypwalk {

bool is_hyperbolic_pair(int n, int m) {
    return n >= 3 && m >= 3 && m * (n - 2) > 2 * n;
}

PolygonSpec polygon_spec(int n, int m) {
    if (n < 3 || m < 3)
        throw std::invalid_argument("polygon requires n >= 3 and m >= 3, got n=" +
                                    std::to_string(n) + " m=" + std::to_string(m));
    if (m * (n - 2) <= 2 * n)
        throw std::invalid_argument(
            "(" + std::to_string(n) + "," + std::to_string(m) +
            ") is not hyperbolic: requires m(n-2) > 2n, got " +
            std::to_string(m * (n - 2)) + " <= " + std::to_string(2 * n));

    const double pi = std::numbers::pi;
    PolygonSpec spec;
    spec.n = n;
    spec.m = m;
    spec.inradius = std::acosh(std::cos(pi / m) / std::sin(pi / n));
    spec.circumradius =
        std::acosh(1.0 / (std::tan(pi / m) * std::tan(pi / n)));
    spec.area = (n - 2) * pi - n * (2.0 * pi / m);
    spec.side_angles.reserve(n);
    for (int i = 0; i < n; ++i) spec.side_angles.push_back(2.0 * pi * i / n);
    return spec;
}

std::vector<Isometry> side_reflections(const PolygonSpec& spec) {
    std::vector<Isometry> out;
    out.reserve(spec.side_angles.size());
    for (double phi : spec.side_angles)
        out.push_back(line_reflection(phi, spec.inradius));
    return out;
}

} // namespace hypwalk
