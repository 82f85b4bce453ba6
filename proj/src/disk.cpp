#include "hypwalk/disk.hpp"

#include <cmath>
#include <complex>

namespace hypwalk {

namespace {

using cplx = std::complex<double>;

bool finite(const Isometry& g) {
    return std::isfinite(g.a) && std::isfinite(g.b) && std::isfinite(g.c) &&
           std::isfinite(g.d);
}

// Conjugation by the orientation reversal w -> -conj(w):
// sigma * phi_M * sigma = phi_{star(M)}.
Isometry star(const Isometry& g) {
    return {g.a, -g.b, -g.c, g.d, g.reversing, g.log_det};
}

cplx to_half_plane(const DiskPoint& p) {
    const cplx z(p.x, p.y);
    return cplx(0, 1) * (1.0 + z) / (1.0 - z);
}

DiskPoint to_disk(cplx w) {
    const cplx z = (w - cplx(0, 1)) / (w + cplx(0, 1));
    return {z.real(), z.imag()};
}

} // namespace

Isometry identity_isometry() { return {}; }

Isometry rotation(double theta) {
    const double t = theta / 2.0;
    return {std::cos(t), std::sin(t), -std::sin(t), std::cos(t), false};
}

Isometry translation_x(double L) {
    return {std::exp(L / 2.0), 0.0, 0.0, std::exp(-L / 2.0), false};
}

Isometry diameter_reflection(double phi) {
    // rotate to the axis, conjugate (z -> conj z in the disk), rotate back
    const Isometry conj_x{1.0, 0.0, 0.0, 1.0, true};
    return compose(rotation(phi), compose(conj_x, rotation(-phi)));
}

Isometry line_reflection(double phi, double h) {
    const Isometry mirror = diameter_reflection(3.14159265358979323846 / 2.0);
    Isometry g = compose(translation_x(h), compose(mirror, translation_x(-h)));
    return compose(rotation(phi), compose(g, rotation(-phi)));
}

Isometry compose(const Isometry& g, const Isometry& h) {
    const Isometry m = g.reversing ? star(h) : h;
    Isometry r{g.a * m.a + g.b * m.c, g.a * m.b + g.b * m.d,
               g.c * m.a + g.d * m.c, g.c * m.b + g.d * m.d,
               g.reversing != h.reversing, g.log_det + h.log_det};
    if (!finite(r)) throw std::invalid_argument("isometry has non-finite entries");
    // The action is projective, so large entries only need rescaling to guard
    // against overflow. Dividing by sqrt(det) after every product would poison
    // long products: det is a difference of huge near-equal terms and loses
    // all relative accuracy once the entries grow. Power-of-two scaling keeps
    // the division exact.
    const double scale =
        std::max({std::abs(r.a), std::abs(r.b), std::abs(r.c), std::abs(r.d)});
    if (scale > 1e8) {
        const double s = std::exp2(std::ceil(std::log2(scale)));
        r.a /= s;
        r.b /= s;
        r.c /= s;
        r.d /= s;
        r.log_det -= 2.0 * std::log(s);
    }
    return r;
}

Isometry inverse(const Isometry& g) {
    // adjugate; differs from the true inverse by the (projectively irrelevant)
    // factor det(g)
    Isometry inv{g.d, -g.b, -g.c, g.a, g.reversing, g.log_det};
    if (g.reversing) inv = star(inv);
    if (!finite(inv)) throw std::invalid_argument("isometry has non-finite entries");
    return inv;
}

Isometry normalized(const Isometry& g) {
    if (!finite(g)) throw std::invalid_argument("isometry has non-finite entries");
    const double det = g.det();
    if (!(det > 0.0))
        throw std::invalid_argument("isometry matrix must have positive determinant");
    const double s = std::sqrt(det);
    return {g.a / s, g.b / s, g.c / s, g.d / s, g.reversing};
}

DiskPoint apply(const Isometry& g, const DiskPoint& p) {
    if (!finite(g)) throw std::invalid_argument("isometry has non-finite entries");
    if (p.norm2() >= 1.0) throw std::domain_error("point outside the unit disk");
    cplx w = to_half_plane(p);
    if (g.reversing) w = -std::conj(w);
    const cplx w2 = (g.a * w + g.b) / (g.c * w + g.d);
    return to_disk(w2);
}

double dist(const DiskPoint& p, const DiskPoint& q) {
    const double pp = p.norm2();
    const double qq = q.norm2();
    if (pp >= 1.0 || qq >= 1.0)
        throw std::domain_error("distance requires interior points");
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    const double arg = 1.0 + 2.0 * (dx * dx + dy * dy) / ((1.0 - pp) * (1.0 - qq));
    return std::acosh(std::max(1.0, arg));
}

double displacement(const Isometry& g) {
    if (!finite(g)) throw std::invalid_argument("isometry has non-finite entries");
    // In the half-plane model the disk origin is i, fixed by the orientation
    // reversal, and cosh d(i, M.i) = (a^2 + b^2 + c^2 + d^2) / (2 det M).
    const double s2 = g.a * g.a + g.b * g.b + g.c * g.c + g.d * g.d;
    const double log_arg = std::log(s2 / 2.0) - g.log_det;
    if (log_arg < 30.0) return std::acosh(std::max(1.0, std::exp(log_arg)));
    return std::log(2.0) + log_arg; // acosh(x) = log(2x) + O(x^-2)
}

double translation_length(const Isometry& g) {
    if (g.reversing)
        throw std::invalid_argument(
            "translation length is defined for orientation-preserving isometries");
    const Isometry n = normalized(g);
    const double t = std::abs(n.trace());
    if (t <= 2.0) return 0.0;
    return 2.0 * std::acosh(t / 2.0);
}

bool approx_identity(const Isometry& g, double tol) {
    if (g.reversing) return false;
    const Isometry n = normalized(g);
    // matrices act projectively; +-I are both the identity
    const double s = n.a < 0.0 ? -1.0 : 1.0;
    return std::abs(s * n.a - 1.0) < tol && std::abs(s * n.b) < tol &&
           std::abs(s * n.c) < tol && std::abs(s * n.d - 1.0) < tol;
}

} // namespace hypwalk
