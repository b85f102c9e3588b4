#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "poncelet/conics.hpp"
#include "poncelet/errors.hpp"
#include "poncelet/families.hpp"
#include "poncelet/invariants.hpp"

using namespace poncelet;

namespace {

constexpr double kPi = std::numbers::pi;
const double kRatios[] = {1.1, 1.5, 2.0, 3.0};

double product_of_cosines(const Polygon& p) {
    double prod = 1.0;
    for (double c : internal_cosines(p)) prod *= c;
    return prod;
}

}  // namespace

TEST(Targets, CosineSum) {
    EXPECT_NEAR(cosine_sum_target(1, 1), 1.5, 1e-15);
    EXPECT_NEAR(cosine_sum_target(2, 1), 13.0 / 9, 1e-15);
    EXPECT_NEAR(cosine_sum_target(3, 1), 11.0 / 8, 1e-15);
    EXPECT_DOUBLE_EQ(cosine_sum_target(1, 3), cosine_sum_target(3, 1));
    // Second printed form, in terms of the incircle radius.
    const double a = 2.0;
    const double r = 2.0 / 3;
    EXPECT_NEAR(cosine_sum_target(2, 1), 1 + 2 * r * (a - r) / (a * a), 1e-15);
}

TEST(Targets, CosineProduct) {
    EXPECT_NEAR(cosine_product_target(1, 1), 0.125, 1e-15);
    EXPECT_NEAR(cosine_product_target(2, 1), 1.0 / 9, 1e-15);
    EXPECT_NEAR(0.25 * r_over_R_confocal(std::sqrt(0.4) * 2, 1), 1.0 / 9, 1e-14);
}

TEST(Extremes, ClosedForms) {
    auto in = cosine_extremes(2, 1, ExtremesKind::IncircleFamily);
    EXPECT_NEAR(in.c_min, 1.0 / 9, 1e-15);
    EXPECT_NEAR(in.c_max, 7.0 / 9, 1e-15);
    auto cc = cosine_extremes(2, 1, ExtremesKind::CircumcircleFamily);
    EXPECT_NEAR(cc.c_min, 1.0 / 3, 1e-15);
    EXPECT_NEAR(cc.c_max, 2.0 / 3, 1e-15);
    for (auto kind : {ExtremesKind::IncircleFamily, ExtremesKind::CircumcircleFamily}) {
        auto e = cosine_extremes(1, 1, kind);
        EXPECT_NEAR(e.c_min, 0.5, 1e-15);
        EXPECT_NEAR(e.c_max, 0.5, 1e-15);
        auto swapped = cosine_extremes(1, 2, kind);
        auto direct = cosine_extremes(2, 1, kind);
        EXPECT_DOUBLE_EQ(swapped.c_min, direct.c_min);
        EXPECT_DOUBLE_EQ(swapped.c_max, direct.c_max);
    }
}

TEST(Sweep, IncircleExample) {
    const auto rep = sweep({FamilyKind::Incircle, 2, 1}, 1000);
    EXPECT_EQ(rep.quantity, "cosine_sum");
    EXPECT_EQ(rep.samples, 1000);
    EXPECT_NEAR(rep.mean, 13.0 / 9, 1e-10);
    EXPECT_LT(rep.max_abs_deviation, 1e-10);
    ASSERT_TRUE(rep.closed_form_target);
    EXPECT_NEAR(*rep.closed_form_target, 13.0 / 9, 1e-15);
    EXPECT_TRUE(rep.passed);
}

TEST(Sweep, SquareBilliardSumsToZero) {
    const auto caustic = solve_confocal_caustic(2, 1, 4, 1);
    const FamilySpec spec{FamilyKind::BilliardN, caustic.a(), caustic.b(), 4, 1};
    const auto rep = sweep(spec, 1000);
    EXPECT_NEAR(rep.mean, 0.0, 1e-10);
    EXPECT_LT(rep.max_abs_deviation, 1e-10);
    EXPECT_TRUE(rep.passed);
}

TEST(Sweep, OrthicRadiiConstant) {
    const FamilySpec spec{FamilyKind::Circumcircle, 2, 1};
    const auto big = sweep(spec, Quantity::OrthicCircumradius, 1000);
    EXPECT_LT(big.max_abs_deviation, 1e-9);
    EXPECT_NEAR(big.mean, 1.5, 1e-9);
    const auto small = sweep(spec, Quantity::OrthicInradius, 1000);
    EXPECT_LT(small.max_abs_deviation, 1e-9);
    EXPECT_NEAR(small.mean, 2.0 / 3, 1e-9);
}

TEST(Sweep, StarPolygonHasNoTarget) {
    const FamilySpec spec{FamilyKind::BilliardN, 0.5, 0.3, 5, 2};
    const auto rep = sweep(spec, 200);
    EXPECT_FALSE(rep.closed_form_target);
    EXPECT_LT(rep.max_abs_deviation, 1e-9);
    EXPECT_TRUE(rep.passed);
}

TEST(Sweep, Errors) {
    EXPECT_THROW(sweep({FamilyKind::Incircle, 2, 1}, 7), DomainError);
    EXPECT_THROW(sweep({FamilyKind::Incircle, 2, 1}, 100, 0.0), DomainError);
    EXPECT_THROW(sweep({FamilyKind::Incircle, -2, 1}, 100), DomainError);
}

TEST(Sweep, FailsAgainstTightToleranceWhenNotConserved) {
    const auto rep = sweep({FamilyKind::Incircle, 2, 1}, Quantity::Perimeter, 200);
    EXPECT_GT(rep.max_abs_deviation, 1e-3);
    EXPECT_FALSE(rep.passed);
}

TEST(Properties, AffinePairsShareInvariants) {
    for (double ratio : kRatios) {
        const auto in = sweep({FamilyKind::Incircle, ratio, 1}, 1000);
        const auto cf = sweep({FamilyKind::Confocal, ratio, 1}, 1000);
        EXPECT_NEAR(in.mean, cf.mean, 1e-10) << ratio;
        const auto cc = sweep({FamilyKind::Circumcircle, ratio, 1}, 1000);
        const auto ex = sweep({FamilyKind::Excentral, ratio, 1}, 1000);
        EXPECT_NEAR(cc.mean, ex.mean, 1e-10) << ratio;
        EXPECT_NEAR(cc.mean, cosine_product_target(ratio, 1), 1e-10);
        EXPECT_TRUE(in.passed && cf.passed && cc.passed && ex.passed);
    }
}

TEST(Properties, PerimeterConserved) {
    for (double ratio : kRatios) {
        const auto cf = sweep({FamilyKind::Confocal, ratio, 1}, Quantity::Perimeter, 1000);
        EXPECT_LT(cf.max_abs_deviation, 1e-9 * cf.mean) << ratio;
    }
    const auto bn = sweep({FamilyKind::BilliardN, 0.5, 0.4, 7, 3}, Quantity::Perimeter, 500);
    EXPECT_LT(bn.max_abs_deviation, 1e-9 * bn.mean);
}

TEST(Properties, FeuerbachIdentity) {
    for (double ratio : kRatios) {
        for (double phi = 0.0; phi < 2 * kPi; phi += 0.05) {
            const auto tri = circumcircle_triangle(ratio, 1, phi);
            const auto orthic = triangle_radii(orthic_of(tri));
            EXPECT_NEAR(product_of_cosines(tri), orthic.inradius / (4 * orthic.circumradius), 1e-10);
        }
    }
}

TEST(Properties, ExcentralProductIsParentRatio) {
    for (double ratio : kRatios) {
        const double a = ratio;
        const double b = 1.0;
        const Ellipse table(excentral_scale(a, b) * a, b);
        for (double phi = 0.03; phi < 2 * kPi; phi += 0.11) {
            const auto ex = excentral_family_triangle(a, b, phi);
            // The orthic triangle of an excentral triangle is its reference triangle.
            const auto parent = orthic_of(ex);
            for (const auto& p : parent.vertices()) EXPECT_NEAR(table.level(p), 0.0, 1e-12);
            const auto radii = triangle_radii(parent);
            EXPECT_NEAR(product_of_cosines(ex), radii.inradius / (4 * radii.circumradius), 1e-10);
            EXPECT_NEAR(radii.inradius / radii.circumradius, r_over_R_confocal(table.a(), table.b()), 1e-10);
        }
    }
}

TEST(Properties, SweptExtremesMatchClosedForms) {
    for (double ratio : kRatios) {
        const auto in_closed = cosine_extremes(ratio, 1, ExtremesKind::IncircleFamily);
        const auto in_swept = swept_cosine_extremes({FamilyKind::Incircle, ratio, 1});
        EXPECT_NEAR(in_swept.c_min, in_closed.c_min, 1e-8) << ratio;
        EXPECT_NEAR(in_swept.c_max, in_closed.c_max, 1e-8) << ratio;
        const auto cc_closed = cosine_extremes(ratio, 1, ExtremesKind::CircumcircleFamily);
        const auto cc_swept = swept_cosine_extremes({FamilyKind::Circumcircle, ratio, 1});
        EXPECT_NEAR(cc_swept.c_min, cc_closed.c_min, 1e-8) << ratio;
        EXPECT_NEAR(cc_swept.c_max, cc_closed.c_max, 1e-8) << ratio;
    }
}

TEST(SweepAll, ReportsEveryApplicableQuantity) {
    const auto reports = sweep_all({FamilyKind::Circumcircle, 2, 1}, 256);
    ASSERT_EQ(reports.size(), 3u);
    EXPECT_EQ(reports[0].quantity, "cosine_product");
    EXPECT_EQ(reports[1].quantity, "orthic_inradius");
    EXPECT_EQ(reports[2].quantity, "orthic_circumradius");
    for (const auto& r : reports) EXPECT_TRUE(r.passed) << r.quantity;
}
