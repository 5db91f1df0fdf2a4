#include <cmath>
#include <vector>

#include "doctest.h"
#include "prodrange/eig.hpp"
#include "prodrange/errors.hpp"
#include "prodrange/matrix.hpp"
#include "prodrange/random.hpp"
#include "test_helpers.hpp"

using namespace prodrange;
using testutil::multiset_close;

TEST_SUITE("matkernel") {

TEST_CASE("herm_eig sorts a diagonal matrix descending") {
    HermEigResult r = herm_eig(ComplexMatrix::diag(std::vector<double>{3.0, 1.0, 2.0}));
    REQUIRE(r.eigenvalues.size() == 3);
    CHECK(r.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-12));
    // eigenvectors are a permuted identity up to phase
    for (int k = 0; k < 3; ++k) {
        std::vector<cplx> v = r.eigenvector(k);
        int big = 0;
        for (int i = 1; i < 3; ++i)
            if (std::abs(v[static_cast<size_t>(i)]) > std::abs(v[static_cast<size_t>(big)])) big = i;
        CHECK(std::abs(v[static_cast<size_t>(big)]) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("herm_eig on the classic symmetric 2x2") {
    HermEigResult r = herm_eig(ComplexMatrix(2, {2.0, 1.0, 1.0, 2.0}));
    CHECK(r.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("herm_eig residual and unitarity on random Hermitian input") {
    Rng rng(42);
    for (int rep = 0; rep < 5; ++rep) {
        ComplexMatrix h = random_hermitian(8, rng);
        HermEigResult r = herm_eig(h);
        const double scale = std::max(1.0, h.frobenius_norm());
        CHECK(testutil::residual_norm(h, r.eigenvalues, r.eigenvectors) <= 1e-10 * scale);
        CHECK(testutil::unitarity_defect(r.eigenvectors) <= 1e-10);
    }
}

TEST_CASE("herm_eig rejects a non-Hermitian matrix") {
    CHECK_THROWS_AS(herm_eig(ComplexMatrix(2, {0.0, 1.0, 0.0, 0.0})), NotHermitian);
}

TEST_CASE("herm_eig trace and conjugation invariants") {
    Rng rng(7);
    ComplexMatrix h = random_hermitian(6, rng);
    HermEigResult r = herm_eig(h);
    double sum = 0.0;
    for (double v : r.eigenvalues) sum += v;
    CHECK(std::abs(sum - h.trace().real()) <= 1e-9);

    ComplexMatrix u = random_unitary(6, rng);
    HermEigResult rc = herm_eig(u * h * u.adjoint());
    CHECK(multiset_close(r.eigenvalues, rc.eigenvalues, 1e-9));
}

TEST_CASE("sqrt_psd on fixed inputs") {
    ComplexMatrix s1 = sqrt_psd(ComplexMatrix::identity(3));
    CHECK((s1 - ComplexMatrix::identity(3)).frobenius_norm() <= 1e-12);

    ComplexMatrix s2 = sqrt_psd(ComplexMatrix::diag(std::vector<double>{4.0, 0.25}));
    CHECK(std::abs(s2(0, 0) - 2.0) <= 1e-12);
    CHECK(std::abs(s2(1, 1) - 0.5) <= 1e-12);
}

TEST_CASE("sqrt_psd squares back to the input") {
    Rng rng(11);
    ComplexMatrix x = random_complex_matrix(6, rng);
    ComplexMatrix a = x.adjoint() * x;
    ComplexMatrix s = sqrt_psd(a);
    CHECK((s * s - a).frobenius_norm() <= 1e-9 * std::max(1.0, a.frobenius_norm()));
    CHECK((s - s.adjoint()).frobenius_norm() <= 1e-10);
}

TEST_CASE("sqrt_psd fixes projections and rejects indefinite input") {
    ComplexMatrix p(2, {0.64, 0.48, 0.48, 0.36});
    // the zero eigenvalue costs half the digits under the square root
    CHECK((sqrt_psd(p) - p).frobenius_norm() <= 1e-6);
    CHECK_THROWS_AS(sqrt_psd(ComplexMatrix::diag(std::vector<double>{1.0, -1.0})), NotPSD);
}

TEST_CASE("spectrum_of_product_pos on the commuting diagonal pair") {
    ComplexMatrix a = ComplexMatrix::diag(std::vector<double>{1.0, 0.5});
    std::vector<double> lams = spectrum_of_product_pos(a, a);
    CHECK(multiset_close(lams, {1.0, 0.25}, 1e-12));

    std::vector<double> ones = spectrum_of_product_pos(ComplexMatrix::identity(4),
                                                       ComplexMatrix::identity(4));
    CHECK(multiset_close(ones, {1.0, 1.0, 1.0, 1.0}, 1e-12));
}

TEST_CASE("spectrum_of_product_pos is order-independent") {
    Rng rng(19);
    ComplexMatrix a = random_positive_contraction(6, rng);
    ComplexMatrix b = random_positive_contraction(6, rng);
    CHECK(multiset_close(spectrum_of_product_pos(a, b), spectrum_of_product_pos(b, a), 1e-9));
}

TEST_CASE("spectrum_of_product_pos rejects a non-contraction") {
    ComplexMatrix bad = ComplexMatrix::diag(std::vector<double>{2.0, 0.0});
    CHECK_THROWS_AS(spectrum_of_product_pos(bad, ComplexMatrix::identity(2)),
                    NotPositiveContraction);
}

TEST_CASE("structural predicates") {
    ComplexMatrix p(2, {0.64, 0.48, 0.48, 0.36});
    CHECK(p.is_projection());
    CHECK(p.is_positive_contraction());
    CHECK(!p.is_scalar());
    CHECK(ComplexMatrix::identity(3).is_scalar());
    CHECK(!ComplexMatrix(2, {0.0, 1.0, 0.0, 0.0}).is_normal());
    CHECK(ComplexMatrix::diag(std::vector<cplx>{{1.0, 0.0}, {0.0, 1.0}}).is_normal());
}

}  // TEST_SUITE
