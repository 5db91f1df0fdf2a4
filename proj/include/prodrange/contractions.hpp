#ifndef PRODRANGE_CONTRACTIONS_HPP
#define PRODRANGE_CONTRACTIONS_HPP

#include "prodrange/matrix.hpp"
#include "prodrange/regions.hpp"
#include "prodrange/report.hpp"

namespace prodrange {

/// The 3n projection dilation of a pair of positive contractions:
/// Ahat and Bhat are orthogonal projections and the top-left n block of
/// T = Ahat * Bhat equals AB, with sigma(T) = sigma(AB) union {0}.
struct DilationTriple {
    ComplexMatrix Ahat;
    ComplexMatrix Bhat;
    ComplexMatrix T;
};

/// Projection dilation of one positive contraction in the A slot layout
/// [[A, sqrt(A-A^2), 0], [sqrt(A-A^2), I-A, 0], [0, 0, 0]].
ComplexMatrix dilate_projection_a(const ComplexMatrix& a);

/// Same in the B slot layout [[B, 0, sqrt(B-B^2)], [0, 0, 0], [sqrt(B-B^2), 0, I-B]].
ComplexMatrix dilate_projection_b(const ComplexMatrix& b);

DilationTriple dilate_pair(const ComplexMatrix& a, const ComplexMatrix& b, double tol = 1e-8);

/// conv of E(lambda) over lambda in sigma(AB) for non-scalar positive
/// contractions A, B — the containment region of W(AB).
ConvexRegion containment_region(const ComplexMatrix& a, const ComplexMatrix& b, int m,
                                double tol = 1e-8);

/// Numeric equality verdict: max over the grid of
/// |h_{W(AB)}(theta) - h_region(theta)| <= tol.
VerifyReport equality_check(const ComplexMatrix& a, const ComplexMatrix& b, int m, double tol);

/// Eigenvalue checks for the strip bounds -I/8 <= (AB+BA)/2 <= I and
/// -I/4 <= (AB-BA)/(2i) <= I/4, plus the four axis support values of W(AB).
VerifyReport strip_bounds_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                double slack = 1e-9);

}  // namespace prodrange

#endif
