#include <cmath>
#include <vector>

#include "doctest.h"
#include "prodrange/contractions.hpp"
#include "prodrange/errors.hpp"
#include "prodrange/numrange.hpp"
#include "prodrange/random.hpp"
#include "prodrange/regions.hpp"
#include "test_helpers.hpp"

using namespace prodrange;

namespace {
const double kPi = 3.141592653589793;

Generator gen_of(EllipseDisk e, const char* label) {
    Generator g;
    g.label = label;
    g.primitive = e;
    return g;
}

Generator gen_of(cplx p, const char* label) {
    Generator g;
    g.label = label;
    g.primitive = p;
    return g;
}
}  // namespace

TEST_SUITE("regions") {

TEST_CASE("ellipse_E endpoint formulas") {
    EllipseDisk zero = ellipse_E(0.0);
    CHECK(zero.semi_major == 0.0);
    CHECK(zero.semi_minor == 0.0);
    CHECK(std::abs(zero.center) == 0.0);

    EllipseDisk one = ellipse_E(1.0);
    CHECK(one.center.real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(one.semi_major == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(one.semi_minor == 0.0);

    EllipseDisk half = ellipse_E(0.5);
    CHECK(half.center.real() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(half.semi_major == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-15));
    CHECK(half.semi_minor == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(std::abs(half.focus1) <= 1e-15);
    CHECK(half.focus2.real() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("ellipse_E rejects lambda outside [0,1]") {
    CHECK_THROWS_AS(ellipse_E(-0.1), OutOfRange);
    CHECK_THROWS_AS(ellipse_E(1.1), OutOfRange);
}

TEST_CASE("ellipse_E foci consistency") {
    for (double lam : {0.1, 0.25, 0.5, 0.64, 0.9}) {
        EllipseDisk e = ellipse_E(lam);
        CHECK(std::abs(e.semi_major * e.semi_major -
                       (e.semi_minor * e.semi_minor + (lam / 2) * (lam / 2))) <= 1e-12);
    }
}

TEST_CASE("ellipse_general reduces to ellipse_E in the projection case") {
    EllipseDisk g = ellipse_general(1.0, 0.0, 1.0, 0.0, 0.8);
    EllipseDisk ref = ellipse_E(0.64);
    CHECK(std::abs(g.center - ref.center) <= 1e-12);
    CHECK(g.semi_major == doctest::Approx(ref.semi_major).epsilon(1e-12));
    CHECK(g.semi_minor == doctest::Approx(ref.semi_minor).epsilon(1e-12));
}

TEST_CASE("ellipse_general on a pair of reflections degenerates to the segment [-i, i]") {
    EllipseDisk g = ellipse_general(1.0, -1.0, 1.0, -1.0, std::sqrt(0.5));
    CHECK(std::abs(g.focus1 + g.focus2) <= 1e-12);       // gamma = 0
    CHECK(std::abs(g.focus1 * g.focus2 - cplx(1.0, 0.0)) <= 1e-12);
    CHECK(g.semi_minor <= 1e-7);  // sqrt of a cancelled O(eps) quantity
    CHECK(std::abs(std::abs(g.focus1) - 1.0) <= 1e-12);  // foci are +-i
    CHECK(std::abs(g.focus1.real()) <= 1e-12);
}

TEST_CASE("ellipse_general agrees with ellipse_from_2x2 on random parameters") {
    Rng rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        const cplx a1 = rng.complex_gaussian(), a2 = rng.complex_gaussian();
        const cplx b1 = rng.complex_gaussian(), b2 = rng.complex_gaussian();
        if (std::abs(a1 - a2) < 1e-3 || std::abs(b1 - b2) < 1e-3) continue;
        EllipseDisk g = ellipse_general(a1, a2, b1, b2, 0.3);
        EllipseDisk ref = ellipse_from_2x2(two_point_block(a1, a2, b1, b2, 0.3));
        CHECK(std::abs(g.center - ref.center) <= 1e-10);
        CHECK(std::abs(g.semi_minor - ref.semi_minor) <= 1e-10);
        CHECK(std::abs(g.semi_major - ref.semi_major) <= 1e-10);
    }
}

TEST_CASE("ellipse_general rejects degenerate endpoint pairs") {
    CHECK_THROWS_AS(ellipse_general(1.0, 1.0, 1.0, 0.0, 0.5), DegenerateParameters);
    CHECK_THROWS_AS(ellipse_general(1.0, 0.0, cplx(2, 1), cplx(2, 1), 0.5),
                    DegenerateParameters);
}

TEST_CASE("hull of E(1) and E(1/4) has upward support sqrt(3)/8") {
    ConvexRegion r = hull_region({gen_of(ellipse_E(1.0), "E(1)"),
                                  gen_of(ellipse_E(0.25), "E(1/4)")}, 720);
    CHECK(r.support_at(180) == doctest::Approx(std::sqrt(3.0) / 8.0).epsilon(1e-12));
    CHECK(r.support_at(0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hull of a single point is that point") {
    ConvexRegion r = hull_region({gen_of(cplx(0.0, 0.0), "origin")}, 64);
    for (const SupportSample& s : r.samples) CHECK(std::abs(s.value) <= 1e-15);
}

TEST_CASE("hull of the four unit points is the diamond") {
    ConvexRegion r = hull_region({gen_of(cplx(1, 0), "1"), gen_of(cplx(0, 1), "i"),
                                  gen_of(cplx(-1, 0), "-1"), gen_of(cplx(0, -1), "-i")}, 360);
    for (const SupportSample& s : r.samples) {
        double expect = -1e300;
        for (int k = 0; k < 4; ++k) expect = std::max(expect, std::cos(s.theta - k * kPi / 2));
        CHECK(s.value == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("hull_region rejects empty input and is monotone") {
    CHECK_THROWS_AS(hull_region({}, 720), EmptyInput);
    ConvexRegion small = hull_region({gen_of(ellipse_E(0.25), "E(1/4)")}, 360);
    ConvexRegion big = hull_region({gen_of(ellipse_E(0.25), "E(1/4)"),
                                    gen_of(ellipse_E(1.0), "E(1)")}, 360);
    for (int k = 0; k < 360; ++k) CHECK(big.support_at(k) >= small.support_at(k) - 1e-15);
}

TEST_CASE("region_contains verdicts on the diagonal fixture") {
    ComplexMatrix d = ComplexMatrix::diag(std::vector<double>{1.0, 0.5});
    ConvexRegion inner = range_polygon(d * d, 720);
    ConvexRegion outer = containment_region(d, d, 720);

    CHECK(region_contains(outer, outer, 1e-12).pass);
    CHECK(region_contains(outer, outer, 1e-12).max_gap == 0.0);

    VerifyReport ok = region_contains(outer, inner, 1e-9);
    CHECK(ok.pass);

    VerifyReport reverse = region_contains(inner, outer, 1e-9);
    CHECK(!reverse.pass);
    // worst direction is theta = pi: hull reaches -1/8 while W(AB) stops at 1/4
    CHECK(reverse.max_gap == doctest::Approx(0.375).epsilon(1e-9));
    CHECK(std::abs(reverse.worst_theta - kPi) <= 1e-9);
}

TEST_CASE("region_contains flags a gross violation") {
    ConvexRegion outer = hull_region({gen_of(ellipse_E(1.0), "E(1)")}, 360);
    ConvexRegion shifted = hull_region({gen_of(ellipse_E(1.0), "E(1)"),
                                        gen_of(cplx(3.0, 0.0), "far")}, 360);
    VerifyReport rep = region_contains(outer, shifted, 1e-6);
    CHECK(!rep.pass);
    CHECK(rep.max_gap == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("region comparisons demand matching grids") {
    ConvexRegion a = hull_region({gen_of(ellipse_E(0.5), "E(1/2)")}, 360);
    ConvexRegion b = hull_region({gen_of(ellipse_E(0.5), "E(1/2)")}, 720);
    CHECK_THROWS_AS(region_contains(a, b, 1e-9), GridMismatch);
    CHECK_THROWS_AS(region_equal(a, b, 1e-9), GridMismatch);
}

TEST_CASE("recorded boundary points respect the sampled support function") {
    ConvexRegion r = hull_region({gen_of(ellipse_E(0.7), "E(0.7)"),
                                  gen_of(cplx(0.1, 0.2), "pt")}, 240);
    for (const SupportSample& s : r.samples)
        for (const SupportSample& t : r.samples)
            CHECK(std::cos(t.theta) * s.boundary_point.real() +
                      std::sin(t.theta) * s.boundary_point.imag() <=
                  t.value + 1e-8);
}

}  // TEST_SUITE
