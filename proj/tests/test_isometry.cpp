#include <catch2/catch_amalgamated.hpp>

#include "adsfn/isometry.hpp"
#include "test_helpers.hpp"

using namespace adsfn;
using adsfn::testing::Rng;

namespace {

Isometry diag_pair(double lam, double mu) {
    return {Mat2::diag(std::exp(lam / 2), std::exp(-lam / 2)),
            Mat2::diag(std::exp(mu / 2), std::exp(-mu / 2))};
}

Mat2 shear(double b) { return {1, b, 0, 1}; }

} // namespace

TEST_CASE("classification") {
    CHECK(classify(diag_pair(1.0, 0.5)) == IsometryClass::Loxodromic);
    CHECK(classify({Mat2::diag(std::exp(0.5), std::exp(-0.5)), shear(1.0)}) ==
          IsometryClass::SemiLoxodromicPlus);
    CHECK(classify({shear(1.0), Mat2::diag(std::exp(0.5), std::exp(-0.5))}) ==
          IsometryClass::SemiLoxodromicMinus);
    CHECK(classify({shear(0.7), shear(-0.2)}) == IsometryClass::Parabolic);
    Mat2 rot{std::cos(0.4), -std::sin(0.4), std::sin(0.4), std::cos(0.4)};
    CHECK(classify({rot, shear(1.0)}) == IsometryClass::Other);
    CHECK(classify(Isometry::identity()) == IsometryClass::Other);
}

TEST_CASE("b_length normal forms") {
    double lam = 1.7, mu = 0.6;
    SplitComplex l = b_length(diag_pair(lam, mu));
    CHECK(l.re == Catch::Approx((lam + mu) / 2));
    CHECK(l.im == Catch::Approx((lam - mu) / 2));

    SplitComplex ls = b_length({Mat2::diag(std::exp(lam / 2), std::exp(-lam / 2)), shear(1.0)});
    CHECK(ls.re == Catch::Approx(lam / 2));
    CHECK(ls.im == Catch::Approx(lam / 2));

    SplitComplex lp = b_length({shear(0.7), shear(-1.2)});
    CHECK(lp.re == 0.0);
    CHECK(lp.im == 0.0);

    CHECK_THROWS_AS(b_length(Isometry::identity()), NotAdmissible);
}

TEST_CASE("b_length conjugation invariance and trace route") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        Isometry A = testing::random_loxodromic(rng);
        Isometry C = testing::random_isometry(rng);
        SplitComplex l1 = b_length(A);
        SplitComplex l2 = b_length(C * A * C.inverse());
        CHECK(std::abs(l1.re - l2.re) <= 1e-9 * (1 + std::abs(l1.re)));
        CHECK(std::abs(l1.im - l2.im) <= 1e-9 * (1 + std::abs(l1.im)));

        // second route: arccosh_B on the B-valued half trace
        SplitComplex ht = idempotent_join(std::abs(A.plus.trace()) / 2,
                                          std::abs(A.minus.trace()) / 2);
        SplitComplex l3 = 2.0 * arccosh_B(ht);
        CHECK(std::abs(l1.re - l3.re) <= 1e-12 * (1 + std::abs(l1.re)));
        CHECK(std::abs(l1.im - l3.im) <= 1e-12 * (1 + std::abs(l1.im)));
    }
}

TEST_CASE("fixed points of normal forms") {
    FixedPoints f = fixed_points(diag_pair(1.2, 0.8));
    CHECK(boundary_equal(f.attracting, point_at_infinity()));
    CHECK(boundary_equal(f.repelling, from_B({0, 0})));
    REQUIRE(f.auxiliary.size() == 2);
    // [e+, e-] = ([1:0], [0:1])
    CHECK(projectively_equal(f.auxiliary[0].plus, ProjectivePoint(1, 0)));
    CHECK(projectively_equal(f.auxiliary[0].minus, ProjectivePoint(0, 1)));
    CHECK(projectively_equal(f.auxiliary[1].plus, ProjectivePoint(0, 1)));
    CHECK(projectively_equal(f.auxiliary[1].minus, ProjectivePoint(1, 0)));

    // semi-loxodromic B+: fixed points [1,0] and [e-, e+]
    FixedPoints g = fixed_points({Mat2::diag(std::exp(0.6), std::exp(-0.6)), shear(1.0)});
    CHECK(boundary_equal(g.attracting, point_at_infinity()));
    CHECK(projectively_equal(g.repelling.plus, ProjectivePoint(0, 1)));
    CHECK(projectively_equal(g.repelling.minus, ProjectivePoint(1, 0)));
    CHECK(g.auxiliary.empty());

    // parabolic normal form: unique fixed point [1,0]
    FixedPoints h = fixed_points({shear(0.5), shear(0.5)});
    CHECK(boundary_equal(h.attracting, point_at_infinity()));
    CHECK(boundary_equal(h.repelling, point_at_infinity()));
}

TEST_CASE("fixed points are fixed and attract") {
    Rng rng(31337);
    for (int i = 0; i < 200; ++i) {
        Isometry A = testing::random_loxodromic(rng);
        FixedPoints f = fixed_points(A);
        CHECK(boundary_equal(act(A, f.attracting), f.attracting, 1e-9));
        CHECK(boundary_equal(act(A, f.repelling), f.repelling, 1e-9));
        // power iteration from a generic point; needs both factors to
        // contract at a useful rate
        SplitComplex l = b_length(A);
        auto [lam, mu] = idempotent_split(l);
        if (std::min(lam, mu) < 0.05) continue;
        BoundaryPoint p = from_B({0.123, 0.071});
        if (!spacelike_position(p, f.repelling, 1e-3)) continue;
        for (int k = 0; k < 800; ++k) p = act(A, p);
        CHECK(boundary_equal(p, f.attracting, 1e-6));
    }
}

TEST_CASE("group action composition") {
    Rng rng(8);
    for (int i = 0; i < 500; ++i) {
        Isometry A = testing::random_isometry(rng);
        Isometry B = testing::random_isometry(rng);
        BoundaryPoint p = from_B(testing::random_B(rng));
        BoundaryPoint q1 = act(A * B, p);
        BoundaryPoint q2 = act(A, act(B, p));
        CHECK(projective_distance(q1.plus, q2.plus) <= 1e-10);
        CHECK(projective_distance(q1.minus, q2.minus) <= 1e-10);
    }
}

TEST_CASE("translation_rotation") {
    double lam = 2.0, mu = 0.5;
    auto [tr, rot] = translation_rotation(diag_pair(lam, mu));
    CHECK(tr == Catch::Approx((lam + mu) / 2));
    CHECK(rot == Catch::Approx((lam - mu) / 2));

    Rng rng(3);
    Isometry C = testing::random_isometry(rng);
    auto [tr2, rot2] = translation_rotation(C * diag_pair(lam, mu) * C.inverse());
    CHECK(tr2 == Catch::Approx(tr));
    CHECK(rot2 == Catch::Approx(rot));

    auto [tr3, rot3] = translation_rotation(diag_pair(1.1, 1.1));
    CHECK(tr3 == Catch::Approx(1.1));
    CHECK(rot3 == Catch::Approx(0.0).margin(1e-12));

    CHECK_THROWS_AS(translation_rotation({shear(1.0), shear(1.0)}), NotLoxodromic);
}

TEST_CASE("centralizer element") {
    Isometry z0 = centralizer_element({0, 0});
    CHECK(projectively_equal(z0, Isometry::identity()));

    SplitComplex tw{0.7, 0.25};
    auto [lam, mu] = idempotent_split(tw);
    Isometry Z = centralizer_element(tw);
    // commutes with diagonal pairs
    Isometry D = diag_pair(1.3, 0.4);
    CHECK(projectively_equal(Z * D, D * Z));
    // Z [1,1] = [e^lam e+ + e^mu e-, 1]
    BoundaryPoint one = from_B({1, 0});
    BoundaryPoint im = act(Z, one);
    CHECK(projectively_equal(im.plus, ProjectivePoint(std::exp(lam), 1)));
    CHECK(projectively_equal(im.minus, ProjectivePoint(std::exp(mu), 1)));
    // twist readback through the cross ratio
    SplitComplex cr = cross_ratio(point_at_infinity(), from_B({-1, 0}),
                                  from_B({0, 0}), im);
    SplitComplex back = log_B(cr);
    CHECK(back.re == Catch::Approx(tw.re));
    CHECK(back.im == Catch::Approx(tw.im));
}

TEST_CASE("mobius_through three point transitivity") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        std::uniform_real_distribution<double> d(-3.0, 3.0);
        double a = d(rng), b = d(rng), c = d(rng);
        if (std::abs(a - b) < 0.1 || std::abs(b - c) < 0.1 || std::abs(a - c) < 0.1)
            continue;
        ProjectivePoint p1(a, 1), p2(b, 1), p3(c, 1);
        ProjectivePoint inf(1, 0), zero(0, 1), m1(-1, 1);
        Mat2 M = mobius_through(p1, p2, p3, inf, zero, m1);
        CHECK(projective_distance(M.apply(p1), inf) <= 1e-9);
        CHECK(projective_distance(M.apply(p2), zero) <= 1e-9);
        CHECK(projective_distance(M.apply(p3), m1) <= 1e-9);
    }
}
