#include "prodrange/contractions.hpp"

#include <algorithm>
#include <cmath>

#include "prodrange/eig.hpp"
#include "prodrange/errors.hpp"
#include "prodrange/numrange.hpp"

namespace prodrange {

namespace {

void require_positive_contraction(const ComplexMatrix& m, const char* which, double tol) {
    if (!m.is_positive_contraction(tol))
        throw NotPositiveContraction(std::string("argument ") + which +
                                     " is not a positive contraction");
}

void require_non_scalar(const ComplexMatrix& m, const char* which, double tol) {
    if (m.is_scalar(tol)) throw ScalarInput(std::string("argument ") + which + " is scalar");
}

// sqrt(A - A^2) computed in the eigenbasis of A, so the root commutes with A
// to working precision even when A is close to a projection
ComplexMatrix sqrt_defect(const ComplexMatrix& a) {
    HermEigResult e = herm_eig(a);
    const int n = a.dim();
    std::vector<double> r(e.eigenvalues.size());
    for (size_t k = 0; k < r.size(); ++k) {
        const double lam = e.eigenvalues[k];
        r[k] = std::sqrt(std::max(0.0, lam * (1.0 - lam)));
    }
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += e.eigenvectors(i, k) * r[static_cast<size_t>(k)] *
                       std::conj(e.eigenvectors(j, k));
            out(i, j) = acc;
        }
    return hermitian_part(out);
}

}  // namespace

ComplexMatrix dilate_projection_a(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix root = sqrt_defect(a);
    ComplexMatrix d(3 * n);
    d.set_block(0, 0, a);
    d.set_block(0, n, root);
    d.set_block(n, 0, root);
    d.set_block(n, n, ComplexMatrix::identity(n) - a);
    return d;
}

ComplexMatrix dilate_projection_b(const ComplexMatrix& b) {
    const int n = b.dim();
    ComplexMatrix root = sqrt_defect(b);
    ComplexMatrix d(3 * n);
    d.set_block(0, 0, b);
    d.set_block(0, 2 * n, root);
    d.set_block(2 * n, 0, root);
    d.set_block(2 * n, 2 * n, ComplexMatrix::identity(n) - b);
    return d;
}

DilationTriple dilate_pair(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    require_positive_contraction(a, "A", tol);
    require_positive_contraction(b, "B", tol);

    DilationTriple t;
    t.Ahat = dilate_projection_a(a);
    t.Bhat = dilate_projection_b(b);
    t.T = t.Ahat * t.Bhat;

    // internal consistency: sigma(Ahat Bhat) = sigma(AB) union {0}
    std::vector<double> big = spectrum_of_product_pos(t.Ahat, t.Bhat, 1e-6);
    std::vector<double> small = spectrum_of_product_pos(a, b, tol);
    small.resize(big.size(), 0.0);
    std::sort(big.begin(), big.end());
    std::sort(small.begin(), small.end());
    for (size_t i = 0; i < big.size(); ++i)
        if (std::abs(big[i] - small[i]) > 1e-8)
            throw Error("dilate_pair: spectrum consistency check failed");
    return t;
}

ConvexRegion containment_region(const ComplexMatrix& a, const ComplexMatrix& b, int m,
                                double tol) {
    require_positive_contraction(a, "A", tol);
    require_positive_contraction(b, "B", tol);
    require_non_scalar(a, "A", tol);
    require_non_scalar(b, "B", tol);

    std::vector<double> lams = spectrum_of_product_pos(a, b, tol);
    std::vector<Generator> gens;
    for (double lam : lams) {
        if (lam < -1e-8 || lam > 1.0 + 1e-8)
            throw SpectrumOutOfRange("containment_region: eigenvalue " + std::to_string(lam));
        const double clipped = std::min(1.0, std::max(0.0, lam));
        bool dup = false;
        for (const Generator& g : gens)
            if (std::abs(std::get<EllipseDisk>(g.primitive).focus2.real() - clipped) <= 1e-9)
                dup = true;
        if (dup) continue;
        Generator g;
        g.label = "E(" + std::to_string(clipped) + ")";
        g.primitive = ellipse_E(clipped);
        gens.push_back(std::move(g));
    }
    return hull_region(gens, m);
}

VerifyReport equality_check(const ComplexMatrix& a, const ComplexMatrix& b, int m, double tol) {
    ConvexRegion region = containment_region(a, b, m);
    ConvexRegion sweep = range_polygon(a * b, m);
    VerifyReport rep = region_equal(sweep, region, tol);
    rep.name = "equality_check";
    // sufficient-condition probe: a pair of projections must come out equal
    if (a.is_projection() && b.is_projection() && !rep.pass)
        throw Error("equality_check: projection pair failed the equality verdict");
    return rep;
}

VerifyReport strip_bounds_check(const ComplexMatrix& a, const ComplexMatrix& b, double slack) {
    require_positive_contraction(a, "A", 1e-8);
    require_positive_contraction(b, "B", 1e-8);

    const ComplexMatrix ab = a * b;
    const ComplexMatrix ba = b * a;
    ComplexMatrix real_part = ab + ba;
    real_part *= 0.5;
    ComplexMatrix imag_part = ab - ba;
    imag_part *= cplx(0.0, -0.5);  // (AB - BA)/(2i)

    const std::vector<double> re_eigs = herm_eig(real_part).eigenvalues;
    const std::vector<double> im_eigs = herm_eig(imag_part).eigenvalues;

    VerifyReport rep;
    rep.name = "strip_bounds";
    rep.tolerance = slack;
    rep.grid_size = 4;
    double worst = 0.0;
    auto track = [&](double violation, double theta) {
        if (violation > worst) {
            worst = violation;
            rep.worst_theta = theta;
        }
    };
    track(std::max(-1.0 / 8.0 - re_eigs.back(), re_eigs.front() - 1.0), 0.0);
    track(std::max(-1.0 / 4.0 - im_eigs.back(), im_eigs.front() - 1.0 / 4.0), 1.5707963267948966);

    // axis support values of W(AB) against the strip
    const double h0 = support(ab, 0.0).value;
    const double h90 = support(ab, 1.5707963267948966).value;
    const double h180 = support(ab, 3.141592653589793).value;
    const double h270 = support(ab, 4.71238898038469).value;
    track(h0 - 1.0, 0.0);
    track(h90 - 1.0 / 4.0, 1.5707963267948966);
    track(h180 - 1.0 / 8.0, 3.141592653589793);
    track(h270 - 1.0 / 4.0, 4.71238898038469);

    rep.max_gap = std::max(0.0, worst);
    rep.pass = rep.max_gap <= slack;
    rep.samples = {{0.0, h0, 1.0, h0 - 1.0},
                   {1.5707963267948966, h90, 0.25, h90 - 0.25},
                   {3.141592653589793, h180, 0.125, h180 - 0.125},
                   {4.71238898038469, h270, 0.25, h270 - 0.25}};
    return rep;
}

}  // namespace prodrange
