#include "prodrange/random.hpp"

#include <cmath>

namespace prodrange {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double Rng::uniform() {
    // 53-bit mantissa from the top bits of the 64-bit state
    return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0);
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
}

cplx Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

int Rng::uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform() * (hi - lo + 1));
}

std::vector<cplx> random_unit_vector(int n, Rng& rng) {
    std::vector<cplx> x(static_cast<size_t>(n));
    double norm2 = 0.0;
    for (auto& z : x) {
        z = rng.complex_gaussian();
        norm2 += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : x) z *= inv;
    return x;
}

ComplexMatrix random_complex_matrix(int n, Rng& rng) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.complex_gaussian();
    return m;
}

ComplexMatrix random_unitary(int n, Rng& rng) {
    // modified Gram-Schmidt on a Gaussian matrix
    ComplexMatrix g = random_complex_matrix(n, rng);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            cplx proj = 0.0;
            for (int i = 0; i < n; ++i) proj += std::conj(g(i, k)) * g(i, j);
            for (int i = 0; i < n; ++i) g(i, j) -= proj * g(i, k);
        }
        double norm2 = 0.0;
        for (int i = 0; i < n; ++i) norm2 += std::norm(g(i, j));
        const double inv = 1.0 / std::sqrt(norm2);
        for (int i = 0; i < n; ++i) g(i, j) *= inv;
    }
    return g;
}

ComplexMatrix random_positive_contraction(int n, Rng& rng) {
    ComplexMatrix u = random_unitary(n, rng);
    std::vector<double> d(static_cast<size_t>(n));
    for (auto& x : d) x = rng.uniform();
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (int k = 0; k < n; ++k) acc += u(i, k) * d[static_cast<size_t>(k)] * std::conj(u(j, k));
            m(i, j) = acc;
        }
    // exact Hermitian symmetrization kills rounding skew
    return hermitian_part(m);
}

ComplexMatrix random_hermitian(int n, Rng& rng) {
    return hermitian_part(random_complex_matrix(n, rng));
}

}  // namespace prodrange
