#include "prodrange/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "prodrange/errors.hpp"

namespace prodrange {

std::vector<cplx> HermEigResult::eigenvector(int k) const {
    int n = eigenvectors.dim();
    std::vector<cplx> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = eigenvectors(i, k);
    return v;
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    int n = a.dim();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p,q). Applies A <- U*AU in place
// and accumulates V <- VU.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const double apq_abs = std::abs(a(p, q));
    if (apq_abs == 0.0) return;
    const cplx alpha = a(p, q) / apq_abs;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * apq_abs);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = a.dim();
    const cplx salpha = s * alpha;
    const cplx salpha_c = s * std::conj(alpha);

    // columns: A <- A U with U = I except U(p,p)=c, U(p,q)=s*alpha,
    // U(q,p)=-s*conj(alpha), U(q,q)=c
    for (int k = 0; k < n; ++k) {
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = c * akp - salpha_c * akq;
        a(k, q) = salpha * akp + c * akq;
    }
    // rows: A <- U* A
    for (int k = 0; k < n; ++k) {
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = c * apk - salpha * aqk;
        a(q, k) = salpha_c * apk + c * aqk;
    }
    // exact structure of the rotated pivot block
    a(p, p) = cplx(app - t * apq_abs, 0.0);
    a(q, q) = cplx(aqq + t * apq_abs, 0.0);
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (int k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = c * vkp - salpha_c * vkq;
        v(k, q) = salpha * vkp + c * vkq;
    }
}

}  // namespace

HermEigResult herm_eig(const ComplexMatrix& h, double tol) {
    const int n = h.dim();
    if (n < 1) throw Error("herm_eig: empty matrix");
    const double herm_defect = (h - h.adjoint()).frobenius_norm();
    if (herm_defect > tol * std::max(1.0, h.frobenius_norm()))
        throw NotHermitian("herm_eig: ||H - H*|| = " + std::to_string(herm_defect));

    ComplexMatrix a = hermitian_part(h);
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double norm_h = a.frobenius_norm();
    const double target = 1e-12 * norm_h;

    const long max_sweeps = 30L * n * n;
    long sweep = 0;
    while (offdiag_norm(a) > target) {
        if (++sweep > max_sweeps)
            throw NoConvergence("herm_eig: sweep budget exhausted");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    HermEigResult res;
    res.eigenvalues.resize(static_cast<size_t>(n));
    res.eigenvectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        res.eigenvalues[static_cast<size_t>(k)] = a(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]).real();
        for (int i = 0; i < n; ++i) res.eigenvectors(i, k) = v(i, order[static_cast<size_t>(k)]);
    }
    return res;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& a) {
    HermEigResult e = herm_eig(a);
    const double lam_min = e.eigenvalues.back();
    if (lam_min < -1e-8)
        throw NotPSD("sqrt_psd: min eigenvalue " + std::to_string(lam_min));
    const int n = a.dim();
    ComplexMatrix s(n);
    std::vector<double> r(e.eigenvalues.size());
    for (size_t k = 0; k < r.size(); ++k) r[k] = std::sqrt(std::max(0.0, e.eigenvalues[k]));
    // S = V diag(r) V*
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += e.eigenvectors(i, k) * r[static_cast<size_t>(k)] * std::conj(e.eigenvectors(j, k));
            s(i, j) = acc;
        }
    return s;
}

std::vector<double> spectrum_of_product_pos(const ComplexMatrix& a, const ComplexMatrix& b,
                                            double tol) {
    if (!a.is_positive_contraction(tol))
        throw NotPositiveContraction("spectrum_of_product_pos: first argument");
    if (!b.is_positive_contraction(tol))
        throw NotPositiveContraction("spectrum_of_product_pos: second argument");
    ComplexMatrix ra = sqrt_psd(a);
    return herm_eig(ra * b * ra).eigenvalues;
}

double positive_contraction_violation(const ComplexMatrix& m) {
    HermEigResult e = herm_eig(hermitian_part(m));
    const double lo = e.eigenvalues.back();
    const double hi = e.eigenvalues.front();
    return std::max({0.0, -lo, hi - 1.0});
}

}  // namespace prodrange
