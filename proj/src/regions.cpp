#include "prodrange/regions.hpp"

#include <cmath>

#include "prodrange/errors.hpp"
#include "prodrange/numrange.hpp"

namespace prodrange {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double EllipseDisk::support(double theta) const {
    const double phi = theta - axis_angle;
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double radial =
        std::sqrt(semi_major * semi_major * c * c + semi_minor * semi_minor * s * s);
    return std::cos(theta) * center.real() + std::sin(theta) * center.imag() + radial;
}

cplx EllipseDisk::support_point(double theta) const {
    const double phi = theta - axis_angle;
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double a2c = semi_major * semi_major * c;
    const double b2s = semi_minor * semi_minor * s;
    const double denom = std::sqrt(a2c * c + b2s * s);
    double u = 0.0, v = 0.0;  // boundary point in the ellipse frame
    if (denom > 0.0) {
        u = a2c / denom;
        v = b2s / denom;
    }
    const cplx rot(std::cos(axis_angle), std::sin(axis_angle));
    return center + rot * cplx(u, v);
}

EllipseDisk ellipse_E(double lambda) {
    if (lambda < -1e-9 || lambda > 1.0 + 1e-9)
        throw OutOfRange("ellipse_E: lambda = " + std::to_string(lambda));
    const double l = std::min(1.0, std::max(0.0, lambda));
    EllipseDisk e;
    e.center = cplx(l / 2.0, 0.0);
    e.semi_major = std::sqrt(l) / 2.0;
    e.semi_minor = std::sqrt(l * (1.0 - l)) / 2.0;
    e.axis_angle = 0.0;
    e.focus1 = cplx(0.0, 0.0);
    e.focus2 = cplx(l, 0.0);
    return e;
}

ComplexMatrix two_point_block(cplx a1, cplx a2, cplx b1, cplx b2, double c) {
    const double s = std::sqrt(1.0 - c * c);
    ComplexMatrix left(2, {a1 * c * c + a2 * s * s, (a1 - a2) * c * s,
                           (a1 - a2) * c * s, a1 * s * s + a2 * c * c});
    ComplexMatrix right(2, {b1, 0.0, 0.0, b2});
    return left * right;
}

EllipseDisk ellipse_general(cplx a1, cplx a2, cplx b1, cplx b2, double c) {
    if (std::abs(a1 - a2) == 0.0 || std::abs(b1 - b2) == 0.0)
        throw DegenerateParameters("ellipse_general: a1=a2 or b1=b2");
    if (!(c > 0.0 && c < 1.0))
        throw OutOfRange("ellipse_general: c must be in (0,1)");
    const double s = std::sqrt(1.0 - c * c);
    const ComplexMatrix C = two_point_block(a1, a2, b1, b2, c);
    EllipseDisk e = ellipse_from_2x2(C);

    // closed-form cross-check of the minor-axis length
    const cplx gamma = (a1 * b1 + a2 * b2) * (c * c) + (a1 * b2 + a2 * b1) * (s * s);
    const cplx gamma_hat =
        ((a1 * b1 - a2 * b2) * (c * c) + (a2 * b1 - a1 * b2) * (s * s)) / 2.0;
    const double cs2 = c * c * s * s;
    const cplx d = (a1 - a2) * (a1 - a2) * b1 * b2 * cs2;
    const double minor2 = 2.0 * std::norm(gamma_hat) +
                          (std::norm(b1) + std::norm(b2)) * std::norm(a1 - a2) * cs2 -
                          2.0 * std::abs(gamma_hat * gamma_hat + d);
    const double scale = std::max(1.0, C.frobenius_norm());
    // squared lengths: near-degenerate ellipses lose half the digits under the
    // square root, so the raw lengths cannot be compared at 1e-9
    const double minor2_swept = 4.0 * e.semi_minor * e.semi_minor;
    if (std::abs(std::max(0.0, minor2) - minor2_swept) > 1e-9 * scale * scale)
        throw Error("ellipse_general: minor-axis cross-check failed");
    if (std::abs(gamma - C.trace()) > 1e-9 * scale)
        throw Error("ellipse_general: trace cross-check failed");
    return e;
}

ConvexRegion hull_region(const std::vector<Generator>& primitives, int m) {
    if (primitives.empty()) throw EmptyInput("hull_region: no primitives");
    if (m < 8) throw GridTooCoarse("hull_region: m < 8");
    ConvexRegion r;
    r.grid_size = m;
    r.generators = primitives;
    r.samples.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        const double theta = kTwoPi * k / m;
        double best = -1e300;
        cplx best_pt = 0.0;
        for (const Generator& g : primitives) {
            if (const EllipseDisk* e = std::get_if<EllipseDisk>(&g.primitive)) {
                const double h = e->support(theta);
                if (h > best) {
                    best = h;
                    best_pt = e->support_point(theta);
                }
            } else {
                const cplx p = std::get<cplx>(g.primitive);
                const double h = std::cos(theta) * p.real() + std::sin(theta) * p.imag();
                if (h > best) {
                    best = h;
                    best_pt = p;
                }
            }
        }
        r.samples.push_back({theta, best, best_pt});
    }
    return r;
}

namespace {

VerifyReport compare(const ConvexRegion& lhs, const ConvexRegion& rhs, double tol,
                     bool keep_samples, bool two_sided, const char* what) {
    if (lhs.grid_size != rhs.grid_size || lhs.grid_size == 0)
        throw GridMismatch(std::string(what) + ": regions on different grids");
    VerifyReport rep;
    rep.name = what;
    rep.grid_size = lhs.grid_size;
    rep.tolerance = tol;
    rep.max_gap = 0.0;
    rep.worst_theta = 0.0;
    for (int k = 0; k < lhs.grid_size; ++k) {
        const double ho = lhs.support_at(k);
        const double hi = rhs.support_at(k);
        const double diff = ho - hi;
        const double gap = two_sided ? std::abs(diff) : std::max(0.0, -diff);
        if (keep_samples) rep.samples.push_back({lhs.theta_at(k), ho, hi, diff});
        if (gap > rep.max_gap) {
            rep.max_gap = gap;
            rep.worst_theta = lhs.theta_at(k);
        }
    }
    rep.pass = rep.max_gap <= tol;
    return rep;
}

}  // namespace

VerifyReport region_contains(const ConvexRegion& outer, const ConvexRegion& inner, double tol,
                             bool keep_samples) {
    return compare(outer, inner, tol, keep_samples, /*two_sided=*/false, "region_contains");
}

VerifyReport region_equal(const ConvexRegion& lhs, const ConvexRegion& rhs, double tol,
                          bool keep_samples) {
    return compare(lhs, rhs, tol, keep_samples, /*two_sided=*/true, "region_equal");
}

}  // namespace prodrange
