#pragma once

#include <vector>

#include "hypwalk/disk.hpp"

namespace hypwalk {

/// Metric data of the regular hyperbolic n-gon with interior angles 2*pi/m,
/// centered at the disk origin. Side i faces direction side_angles[i].
struct PolygonSpec {
    int n = 0;
    int m = 0;
    double inradius = 0.0;     // center-to-side distance h_{n,m}
    double circumradius = 0.0; // center-to-vertex distance
    double area = 0.0;
    std::vector<double> side_angles;
};

/// True iff the (n,m) polygon exists in the hyperbolic plane: m(n-2) > 2n.
bool is_hyperbolic_pair(int n, int m);

/// Builds the polygon data. Throws std::invalid_argument for n < 3, m < 3, or
/// a Euclidean/spherical pair, naming the violated inequality.
PolygonSpec polygon_spec(int n, int m);

/// Reflections across the n side geodesics; entry i fixes the geodesic at
/// distance inradius from the origin, orthogonal to direction side_angles[i].
std::vector<Isometry> side_reflections(const PolygonSpec& spec);

} // namespace hypwalk
