#pragma once

#include <stdexcept>
#include <string>

namespace hypwalk {

/// Point in the open unit disk (Poincaré model), Euclidean coordinates.
struct DiskPoint {
    double x = 0.0;
    double y = 0.0;

    double norm2() const { return x * x + y * y; }
};

/// Isometry of the hyperbolic plane, stored as a real 2x2 matrix acting on
/// the upper half-plane (disk points are moved through the Cayley map).
/// `reversing` marks orientation-reversing elements; such an element acts by
/// w -> -conj(w) first, then the Moebius map of the matrix.
struct Isometry {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
    bool reversing = false;
    // Log of the true determinant, propagated through products. The stored
    // entries are rescaled to avoid overflow in long products, and a*d - b*c
    // loses all accuracy to cancellation once the entries are large, so this
    // carries the determinant where the entries cannot.
    double log_det = 0.0;

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
};

Isometry identity_isometry();

/// Rotation about the disk origin by angle theta (counterclockwise).
Isometry rotation(double theta);

/// Hyperbolic translation of length L along the positive x-axis of the disk.
Isometry translation_x(double L);

/// Reflection across the diameter of the disk at angle phi.
Isometry diameter_reflection(double phi);

/// Reflection across the geodesic that crosses the ray at direction phi
/// orthogonally at hyperbolic distance h from the origin.
Isometry line_reflection(double phi, double h);

/// Composition: apply(compose(g, h), p) == apply(g, apply(h, p)).
Isometry compose(const Isometry& g, const Isometry& h);

Isometry inverse(const Isometry& g);

/// Rescale so |det| = 1. Throws std::invalid_argument on a degenerate or
/// non-finite matrix.
Isometry normalized(const Isometry& g);

DiskPoint apply(const Isometry& g, const DiskPoint& p);

/// Hyperbolic distance between two interior points.
/// Throws std::domain_error if a point is on or outside the unit circle.
double dist(const DiskPoint& p, const DiskPoint& q);

/// d(0, g.0), computed from the matrix and its tracked determinant. Unlike
/// dist(origin, apply(g, origin)), this stays accurate for long products,
/// whose image points collapse onto the unit circle in double precision.
double displacement(const Isometry& g);

/// Translation length of an orientation-preserving isometry: 2 arccosh(|tr|/2)
/// for hyperbolic elements, 0 for elliptic and parabolic ones.
/// Throws std::invalid_argument for reversing isometries.
double translation_length(const Isometry& g);

bool approx_identity(const Isometry& g, double tol);

} // namespace hypwalk
