#include "prodrange/numrange.hpp"

#include <cmath>

#include "prodrange/eig.hpp"
#include "prodrange/errors.hpp"

namespace prodrange {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

SupportSample support(const ComplexMatrix& a, double theta) {
    const cplx phase(std::cos(theta), -std::sin(theta));  // e^{-i theta}
    ComplexMatrix rotated = a;
    rotated *= phase;
    HermEigResult e = herm_eig(hermitian_part(rotated));
    std::vector<cplx> x = e.eigenvector(0);
    SupportSample s;
    s.theta = theta;
    s.value = e.eigenvalues.front();
    s.boundary_point = quadratic_form(a, x);
    return s;
}

ConvexRegion range_polygon(const ComplexMatrix& a, int m) {
    if (m < 8) throw GridTooCoarse("range_polygon: m < 8");
    ConvexRegion r;
    r.grid_size = m;
    r.samples.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) r.samples.push_back(support(a, kTwoPi * k / m));
    return r;
}

std::pair<cplx, cplx> eig_2x2(const ComplexMatrix& c) {
    const cplx tr = c(0, 0) + c(1, 1);
    const cplx det = c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0);
    const cplx disc = std::sqrt(tr * tr - 4.0 * det);
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

EllipseDisk ellipse_from_2x2(const ComplexMatrix& c) {
    if (c.dim() != 2) throw Error("ellipse_from_2x2: matrix is not 2x2");
    auto [l1, l2] = eig_2x2(c);
    const double tr_cc = c.frobenius_norm() * c.frobenius_norm();
    const double minor2 = tr_cc - std::norm(l1) - std::norm(l2);
    EllipseDisk e;
    e.center = (l1 + l2) / 2.0;
    e.focus1 = l1;
    e.focus2 = l2;
    e.semi_minor = std::sqrt(std::max(0.0, minor2)) / 2.0;
    const double focal = std::abs(l1 - l2) / 2.0;
    e.semi_major = std::sqrt(e.semi_minor * e.semi_minor + focal * focal);
    e.axis_angle = (focal > 0.0) ? std::arg(l1 - l2) : 0.0;
    return e;
}

}  // namespace prodrange
