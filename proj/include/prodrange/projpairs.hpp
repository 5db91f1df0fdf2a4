#ifndef PRODRANGE_PROJPAIRS_HPP
#define PRODRANGE_PROJPAIRS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "prodrange/matrix.hpp"
#include "prodrange/regions.hpp"

namespace prodrange {

/// Canonical form of a pair of orthogonal projections: multiplicities of the
/// four scalar blocks plus the cosines c_j in (0,1) of the generic 2x2 blocks.
/// Dimension is p + q + r + s + 2*len(angles).
struct ProjPairCanonicalForm {
    int p = 0;  // P = Q = 1 blocks
    int q = 0;  // P = 1, Q = 0
    int r = 0;  // P = 0, Q = 1
    int s = 0;  // P = Q = 0
    std::vector<double> angles;

    int dim() const { return p + q + r + s + 2 * static_cast<int>(angles.size()); }
};

/// Builds the projection pair realizing a canonical form. With conjugate_seed
/// nonzero the pair is conjugated by a pseudo-random unitary to produce a
/// non-canonical instance of the same pair.
std::pair<ComplexMatrix, ComplexMatrix> build_pair(const ProjPairCanonicalForm& form,
                                                   std::uint64_t conjugate_seed = 0);

/// Recovers the canonical form of a projection pair from the spectrum of QPQ.
/// Requires both inputs to be non-scalar projections.
ProjPairCanonicalForm decompose_pair(const ComplexMatrix& p, const ComplexMatrix& q,
                                     double tol = 1e-8);

/// sigma(PQ) as the set of distinct hull generators: {1 if p>0, c_j^2..., 0 if
/// any zero block exists}.
std::vector<double> product_spectrum(const ProjPairCanonicalForm& form);

/// W(PQ) = conv of the elliptical disks E(lambda), lambda in sigma(PQ).
ConvexRegion wpq_region(const ComplexMatrix& p, const ComplexMatrix& q, int m);

}  // namespace prodrange

#endif
