#ifndef PRODRANGE_EIG_HPP
#define PRODRANGE_EIG_HPP

#include <vector>

#include "prodrange/matrix.hpp"

namespace prodrange {

/// Full spectral decomposition of a Hermitian matrix. Eigenvalues sorted
/// descending; column k of `eigenvectors` pairs with eigenvalues[k].
struct HermEigResult {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    std::vector<cplx> eigenvector(int k) const;
};

/// Cyclic Jacobi diagonalization of a complex Hermitian matrix.
/// Throws NotHermitian if ||H - H*|| > tol, NoConvergence if the sweep
/// budget (30*n^2) is exhausted before the off-diagonal Frobenius mass
/// drops below 1e-12*||H||.
HermEigResult herm_eig(const ComplexMatrix& h, double tol = 1e-10);

/// Hermitian PSD square root. Eigenvalue dust in [-1e-8, 0) is clipped to 0;
/// anything more negative throws NotPSD.
ComplexMatrix sqrt_psd(const ComplexMatrix& a);

/// sigma(AB) for positive contractions A, B, computed through the Hermitian
/// similarity sigma(AB) = sigma(sqrt(A) B sqrt(A)). Sorted descending.
std::vector<double> spectrum_of_product_pos(const ComplexMatrix& a, const ComplexMatrix& b,
                                            double tol = 1e-8);

/// How far the spectrum of a Hermitian matrix sticks out of [0,1]
/// (0 when it is a positive contraction up to rounding).
double positive_contraction_violation(const ComplexMatrix& m);

}  // namespace prodrange

#endif
