#include "prodrange/projpairs.hpp"

#include <cmath>

#include "prodrange/eig.hpp"
#include "prodrange/errors.hpp"
#include "prodrange/random.hpp"

namespace prodrange {

namespace {
// eigenvalues of QPQ within this distance of 0 or 1 belong to scalar blocks
constexpr double kClusterDelta = 1e-7;
}  // namespace

std::pair<ComplexMatrix, ComplexMatrix> build_pair(const ProjPairCanonicalForm& form,
                                                   std::uint64_t conjugate_seed) {
    if (form.p < 0 || form.q < 0 || form.r < 0 || form.s < 0 || form.dim() < 1)
        throw InvalidForm("build_pair: negative multiplicity or empty form");
    for (double c : form.angles)
        if (!(c > 1e-8 && c < 1.0 - 1e-8))
            throw InvalidForm("build_pair: cosine outside (0,1)");

    const int n = form.dim();
    ComplexMatrix p(n), q(n);
    int off = 0;
    for (int i = 0; i < form.p; ++i, ++off) {
        p(off, off) = 1.0;
        q(off, off) = 1.0;
    }
    for (int i = 0; i < form.q; ++i, ++off) p(off, off) = 1.0;
    for (int i = 0; i < form.r; ++i, ++off) q(off, off) = 1.0;
    off += form.s;
    for (double c : form.angles) {
        const double s = std::sqrt(1.0 - c * c);
        p(off, off) = c * c;
        p(off, off + 1) = c * s;
        p(off + 1, off) = c * s;
        p(off + 1, off + 1) = s * s;
        q(off, off) = 1.0;
        off += 2;
    }

    if (conjugate_seed != 0) {
        Rng rng(conjugate_seed);
        ComplexMatrix u = random_unitary(n, rng);
        ComplexMatrix uh = u.adjoint();
        p = uh * p * u;
        q = uh * q * u;
        p = hermitian_part(p);
        q = hermitian_part(q);
    }
    return {p, q};
}

ProjPairCanonicalForm decompose_pair(const ComplexMatrix& p, const ComplexMatrix& q, double tol) {
    const int n = p.dim();
    if (!p.is_projection(tol)) throw NotProjection("decompose_pair: P is not a projection");
    if (!q.is_projection(tol)) throw NotProjection("decompose_pair: Q is not a projection");
    if (p.is_scalar(tol) || q.is_scalar(tol))
        throw ScalarInput("decompose_pair: scalar projection (0 or I)");

    HermEigResult e = herm_eig(hermitian_part(q * p * q));
    ProjPairCanonicalForm form;
    for (double lam : e.eigenvalues) {
        if (lam >= 1.0 - kClusterDelta)
            ++form.p;
        else if (lam > kClusterDelta)
            form.angles.push_back(std::sqrt(lam));
    }
    const int k = static_cast<int>(form.angles.size());
    const int rank_p = static_cast<int>(std::lround(p.trace().real()));
    const int rank_q = static_cast<int>(std::lround(q.trace().real()));
    form.q = rank_p - form.p - k;
    form.r = rank_q - form.p - k;
    form.s = n - form.p - form.q - form.r - 2 * k;
    if (form.q < 0 || form.r < 0 || form.s < 0)
        throw Error("decompose_pair: inconsistent multiplicities");
    return form;
}

std::vector<double> product_spectrum(const ProjPairCanonicalForm& form) {
    std::vector<double> lams;
    if (form.p > 0) lams.push_back(1.0);
    for (double c : form.angles) lams.push_back(c * c);
    if (form.q + form.r + form.s > 0) lams.push_back(0.0);
    return lams;
}

ConvexRegion wpq_region(const ComplexMatrix& p, const ComplexMatrix& q, int m) {
    ProjPairCanonicalForm form = decompose_pair(p, q);
    std::vector<Generator> gens;
    for (double lam : product_spectrum(form)) {
        Generator g;
        g.label = "E(" + std::to_string(lam) + ")";
        g.primitive = ellipse_E(lam);
        gens.push_back(std::move(g));
    }
    return hull_region(gens, m);
}

}  // namespace prodrange
