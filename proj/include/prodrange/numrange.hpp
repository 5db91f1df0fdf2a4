#ifndef PRODRANGE_NUMRANGE_HPP
#define PRODRANGE_NUMRANGE_HPP

#include "prodrange/matrix.hpp"
#include "prodrange/regions.hpp"

namespace prodrange {

/// Support of W(A) in direction theta:
///   value = lambda_max((e^{-i theta} A + e^{i theta} A*) / 2),
/// boundary_point = x* A x for a top unit eigenvector x.
SupportSample support(const ComplexMatrix& a, double theta);

/// W(A) discretized on m uniformly spaced angles (m >= 8).
ConvexRegion range_polygon(const ComplexMatrix& a, int m);

/// Elliptical range theorem for 2x2 matrices: W(C) is the ellipse with the
/// eigenvalues of C as foci and minor-axis length
/// sqrt(tr(C*C) - |l1|^2 - |l2|^2).
EllipseDisk ellipse_from_2x2(const ComplexMatrix& c);

/// Eigenvalues of a 2x2 matrix via the quadratic formula on trace/det.
std::pair<cplx, cplx> eig_2x2(const ComplexMatrix& c);

}  // namespace prodrange

#endif
