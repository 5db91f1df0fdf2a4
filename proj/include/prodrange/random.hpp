#ifndef PRODRANGE_RANDOM_HPP
#define PRODRANGE_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "prodrange/matrix.hpp"

namespace prodrange {

/// Deterministic random source. Gaussians come from an explicit Box-Muller
/// transform so streams are reproducible across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform();                 // [0, 1)
    double uniform(double lo, double hi);
    double gaussian();                // standard normal
    cplx complex_gaussian();          // independent N(0,1) real and imaginary parts
    int uniform_int(int lo, int hi);  // inclusive range

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

std::vector<cplx> random_unit_vector(int n, Rng& rng);

/// Haar-ish unitary from Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(int n, Rng& rng);

/// U diag(u_k) U* with u_k uniform in [0,1]: a positive contraction by
/// construction, up to rounding.
ComplexMatrix random_positive_contraction(int n, Rng& rng);

ComplexMatrix random_hermitian(int n, Rng& rng);

ComplexMatrix random_complex_matrix(int n, Rng& rng);

}  // namespace prodrange

#endif
