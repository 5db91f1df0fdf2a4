#ifndef PRODRANGE_ESSHERM_HPP
#define PRODRANGE_ESSHERM_HPP

#include <utility>

#include "prodrange/matrix.hpp"
#include "prodrange/regions.hpp"
#include "prodrange/report.hpp"

namespace prodrange {

/// A matrix whose numerical range is the segment [a2, a1] in C, written as
/// A = a2 I + (a1 - a2) A1 for a positive contraction A1. The rotation t
/// makes e^{it}(A - (tr A / n) I) Hermitian.
struct EssHermForm {
    cplx a1;
    cplx a2;
    ComplexMatrix A1;
    double t = 0.0;
};

/// Decides whether A is essentially Hermitian (normal with collinear
/// eigenvalues) and returns its segment form. Throws NotEssHerm with the
/// failing reason (non-normal, eigenvalues not collinear, scalar).
EssHermForm detect_essentially_hermitian(const ComplexMatrix& a, double tol = 1e-8);

/// W(AB) for non-scalar normal A, B with two-point spectra {a1,a2}, {b1,b2}:
/// hull of the generic-block ellipses E(a1,a2,b1,b2;c_j) plus the scalar-block
/// products S subset of {a1b1, a1b2, a2b1, a2b2}.
ConvexRegion two_point_product_region(const ComplexMatrix& a, const ComplexMatrix& b, int m,
                                      double tol = 1e-8);

/// Same region computed from known data: projections P, Q realizing
/// A = (a1-a2)P + a2 I and B = (b1-b2)Q + b2 I.
ConvexRegion two_point_region_from_projections(const ComplexMatrix& p, const ComplexMatrix& q,
                                               cplx a1, cplx a2, cplx b1, cplx b2, int m);

/// The 3n-dilation containment region for essentially Hermitian A, B, plus
/// the containment report of W(AB) against it (tolerance tol).
std::pair<ConvexRegion, VerifyReport> essherm_dilation_region(const ComplexMatrix& a,
                                                              const ComplexMatrix& b, int m,
                                                              double tol = 1e-6);

/// The paired eigenvalue lambda_hat with lambda * lambda_hat = a1 a2 b1 b2
/// (zero when the product is zero).
cplx lambda_pairing(cplx lambda, cplx a1, cplx a2, cplx b1, cplx b2);

}  // namespace prodrange

#endif
