#ifndef PRODRANGE_REGIONS_HPP
#define PRODRANGE_REGIONS_HPP

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "prodrange/matrix.hpp"
#include "prodrange/report.hpp"

namespace prodrange {

/// One support-function sample of a convex set: h(theta) together with a
/// boundary point attaining it, Re(e^{-i theta} * boundary_point) = value.
struct SupportSample {
    double theta;
    double value;
    cplx boundary_point;
};

/// A (possibly degenerate) elliptical disk. The support function
///   s(theta) = Re(e^{-i theta} center)
///            + sqrt(a^2 cos^2(theta-phi) + b^2 sin^2(theta-phi))
/// is the single geometric contract every consumer relies on.
struct EllipseDisk {
    cplx center;
    double semi_major = 0.0;
    double semi_minor = 0.0;
    double axis_angle = 0.0;
    cplx focus1;
    cplx focus2;

    double support(double theta) const;
    /// Boundary point attaining support(theta).
    cplx support_point(double theta) const;
};

struct Generator {
    std::string label;
    std::variant<EllipseDisk, cplx> primitive;
};

/// A convex set represented by support samples on the uniform angle grid
/// theta_k = 2 pi k / grid_size, plus the primitives it was built from.
struct ConvexRegion {
    int grid_size = 0;
    std::vector<SupportSample> samples;
    std::vector<Generator> generators;

    double support_at(int k) const { return samples[static_cast<size_t>(k)].value; }
    double theta_at(int k) const { return samples[static_cast<size_t>(k)].theta; }
};

/// The elliptical disk with foci 0 and lambda: center lambda/2,
/// semi-major sqrt(lambda)/2, semi-minor sqrt(lambda(1-lambda))/2.
/// Requires lambda in [0,1] (up to 1e-9).
EllipseDisk ellipse_E(double lambda);

/// The elliptical disk W(C) for the explicit 2x2 product
///   C = [[a1 c^2 + a2 s^2, (a1-a2) c s], [(a1-a2) c s, a1 s^2 + a2 c^2]] diag(b1, b2),
/// cross-checked against the closed-form minor-axis length.
EllipseDisk ellipse_general(cplx a1, cplx a2, cplx b1, cplx b2, double c);

/// Builds the 2x2 matrix C above (exposed for tests and region generators).
ComplexMatrix two_point_block(cplx a1, cplx a2, cplx b1, cplx b2, double c);

/// Convex hull of ellipse disks and points, sampled on an m-angle grid:
/// h(theta) = max over primitives of their support.
ConvexRegion hull_region(const std::vector<Generator>& primitives, int m);

/// Support-dominance containment check: inner is inside outer iff
/// h_outer - h_inner >= -tol at every grid angle.
VerifyReport region_contains(const ConvexRegion& outer, const ConvexRegion& inner, double tol,
                             bool keep_samples = true);

/// Max over the grid of |h_lhs - h_rhs|; pass iff <= tol.
VerifyReport region_equal(const ConvexRegion& lhs, const ConvexRegion& rhs, double tol,
                          bool keep_samples = true);

}  // namespace prodrange

#endif
