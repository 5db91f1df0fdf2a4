#include "prodrange/essherm.hpp"

#include <algorithm>
#include <cmath>

#include "prodrange/contractions.hpp"
#include "prodrange/eig.hpp"
#include "prodrange/errors.hpp"
#include "prodrange/numrange.hpp"
#include "prodrange/projpairs.hpp"

namespace prodrange {

EssHermForm detect_essentially_hermitian(const ComplexMatrix& a, double tol) {
    const int n = a.dim();
    if (n < 2) throw NotEssHerm("scalar: dimension < 2");
    const double scale = std::max(1.0, a.frobenius_norm());
    if (a.is_scalar(tol * scale)) throw NotEssHerm("scalar");
    if (!a.is_normal(tol)) throw NotEssHerm("non-normal");

    const cplx mu = a.trace() / static_cast<double>(n);
    ComplexMatrix b0 = a;
    for (int i = 0; i < n; ++i) b0(i, i) -= mu;
    const double b0_norm = b0.frobenius_norm();

    // essentially Hermitian <=> B0* is a unimodular multiple of B0;
    // the multiple is read off as conj(tr(B0^2)) / ||B0||^2
    cplx tr_b0_sq = (b0 * b0).trace();
    const cplx c = std::conj(tr_b0_sq) / (b0_norm * b0_norm);
    if (std::abs(std::abs(c) - 1.0) > 1e-6)
        throw NotEssHerm("eigenvalues not collinear");
    const double t = std::arg(c) / 2.0;

    ComplexMatrix h = b0;
    h *= cplx(std::cos(t), std::sin(t));
    if ((h - h.adjoint()).frobenius_norm() > tol * scale)
        throw NotEssHerm("eigenvalues not collinear");

    HermEigResult e = herm_eig(hermitian_part(h));
    const double h_max = e.eigenvalues.front();
    const double h_min = e.eigenvalues.back();
    const double spread = h_max - h_min;
    if (spread <= tol * scale) throw NotEssHerm("scalar");

    const cplx back(std::cos(t), -std::sin(t));  // e^{-it}
    EssHermForm form;
    form.t = t;
    form.a1 = mu + back * h_max;
    form.a2 = mu + back * h_min;
    ComplexMatrix a1m = hermitian_part(h);
    for (int i = 0; i < n; ++i) a1m(i, i) -= h_min;
    a1m *= 1.0 / spread;
    form.A1 = a1m;
    return form;
}

namespace {

struct TwoPointData {
    cplx a1;
    cplx a2;
    ComplexMatrix proj;  // A = (a1 - a2) proj + a2 I
};

// Exact 1-D 2-means on the Hermitian eigenvalues behind the segment form;
// accepted when the clusters are separated by at least 10*tol.
TwoPointData split_two_point(const ComplexMatrix& a, double tol) {
    EssHermForm f = detect_essentially_hermitian(a, tol);
    const int n = a.dim();
    std::vector<double> vals = herm_eig(f.A1).eigenvalues;  // descending, in [0,1]
    std::sort(vals.begin(), vals.end());

    double best_sse = 1e300;
    int best_split = 1;  // vals[0..split) lower cluster
    for (int split = 1; split < n; ++split) {
        double m1 = 0.0, m2 = 0.0;
        for (int i = 0; i < split; ++i) m1 += vals[static_cast<size_t>(i)];
        for (int i = split; i < n; ++i) m2 += vals[static_cast<size_t>(i)];
        m1 /= split;
        m2 /= (n - split);
        double sse = 0.0;
        for (int i = 0; i < split; ++i) sse += (vals[static_cast<size_t>(i)] - m1) * (vals[static_cast<size_t>(i)] - m1);
        for (int i = split; i < n; ++i) sse += (vals[static_cast<size_t>(i)] - m2) * (vals[static_cast<size_t>(i)] - m2);
        if (sse < best_sse) {
            best_sse = sse;
            best_split = split;
        }
    }
    double lo_mean = 0.0, hi_mean = 0.0, lo_spread = 0.0, hi_spread = 0.0;
    for (int i = 0; i < best_split; ++i) lo_mean += vals[static_cast<size_t>(i)];
    for (int i = best_split; i < n; ++i) hi_mean += vals[static_cast<size_t>(i)];
    lo_mean /= best_split;
    hi_mean /= (n - best_split);
    for (int i = 0; i < best_split; ++i)
        lo_spread = std::max(lo_spread, std::abs(vals[static_cast<size_t>(i)] - lo_mean));
    for (int i = best_split; i < n; ++i)
        hi_spread = std::max(hi_spread, std::abs(vals[static_cast<size_t>(i)] - hi_mean));
    const double gap = vals[static_cast<size_t>(best_split)] - vals[static_cast<size_t>(best_split - 1)];
    if (gap < 10.0 * tol || lo_spread > 10.0 * tol || hi_spread > 10.0 * tol)
        throw NotTwoPoint("spectrum does not form two clusters");

    // endpoints re-anchored at the cluster means
    TwoPointData d;
    d.a1 = f.a2 + (f.a1 - f.a2) * hi_mean;
    d.a2 = f.a2 + (f.a1 - f.a2) * lo_mean;
    ComplexMatrix p = f.A1;
    for (int i = 0; i < a.dim(); ++i) p(i, i) -= lo_mean;
    p *= 1.0 / (hi_mean - lo_mean);
    d.proj = p;
    return d;
}

}  // namespace

ConvexRegion two_point_region_from_projections(const ComplexMatrix& p, const ComplexMatrix& q,
                                               cplx a1, cplx a2, cplx b1, cplx b2, int m) {
    ProjPairCanonicalForm form = decompose_pair(p, q);
    std::vector<Generator> gens;
    for (double c : form.angles) {
        Generator g;
        g.label = "E(a1,a2,b1,b2;c=" + std::to_string(c) + ")";
        g.primitive = ellipse_general(a1, a2, b1, b2, c);
        gens.push_back(std::move(g));
    }
    auto add_point = [&](int mult, cplx z, const char* lbl) {
        if (mult <= 0) return;
        Generator g;
        g.label = lbl;
        g.primitive = z;
        gens.push_back(std::move(g));
    };
    add_point(form.p, a1 * b1, "a1*b1");
    add_point(form.q, a1 * b2, "a1*b2");
    add_point(form.r, a2 * b1, "a2*b1");
    add_point(form.s, a2 * b2, "a2*b2");
    return hull_region(gens, m);
}

ConvexRegion two_point_product_region(const ComplexMatrix& a, const ComplexMatrix& b, int m,
                                      double tol) {
    if (a.is_scalar(tol) || b.is_scalar(tol))
        throw ScalarInput("two_point_product_region: scalar input");
    TwoPointData da = split_two_point(a, tol);
    TwoPointData db = split_two_point(b, tol);
    return two_point_region_from_projections(da.proj, db.proj, da.a1, da.a2, db.a1, db.a2, m);
}

std::pair<ConvexRegion, VerifyReport> essherm_dilation_region(const ComplexMatrix& a,
                                                              const ComplexMatrix& b, int m,
                                                              double tol) {
    EssHermForm fa = detect_essentially_hermitian(a);
    EssHermForm fb = detect_essentially_hermitian(b);
    ComplexMatrix p = dilate_projection_a(fa.A1);
    ComplexMatrix q = dilate_projection_b(fb.A1);
    ConvexRegion region =
        two_point_region_from_projections(p, q, fa.a1, fa.a2, fb.a1, fb.a2, m);
    VerifyReport rep = region_contains(region, range_polygon(a * b, m), tol);
    rep.name = "essherm_dilation";
    return {region, rep};
}

cplx lambda_pairing(cplx lambda, cplx a1, cplx a2, cplx b1, cplx b2) {
    const cplx prod = a1 * a2 * b1 * b2;
    if (std::abs(prod) == 0.0) return 0.0;
    if (std::abs(lambda) == 0.0)
        throw DivisionByZero("lambda_pairing: lambda = 0 with nonzero a1 a2 b1 b2");
    return prod / lambda;
}

}  // namespace prodrange
