#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "poncelet/conics.hpp"
#include "poncelet/errors.hpp"

using namespace poncelet;

namespace {

// Log-uniform grid over [1/5, 5].
std::vector<double> log_grid(int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(std::exp(std::log(0.2) + (std::log(5.0) - std::log(0.2)) * i / (n - 1)));
    }
    return out;
}

}  // namespace

TEST(Ellipse, RejectsNonPositiveAxes) {
    EXPECT_THROW(Ellipse(0.0, 1.0), DomainError);
    EXPECT_THROW(Ellipse(1.0, -2.0), DomainError);
    EXPECT_NO_THROW(Ellipse(1.0, 3.0));
    EXPECT_LT(Ellipse(1.0, 3.0).c_sq(), 0.0);
}

TEST(ConicPair, CausticMustBeInside) {
    EXPECT_THROW(ConicPair(Ellipse(2, 1), Ellipse(2, 0.5)), DomainError);
    EXPECT_THROW(ConicPair(Ellipse(2, 1), Ellipse(1, 1.5)), DomainError);
    EXPECT_NO_THROW(ConicPair(Ellipse(2, 1), Ellipse(1, 0.5)));
}

TEST(CayleyResidual, Examples) {
    EXPECT_NEAR(cayley_residual({Ellipse(2, 1), Ellipse(2.0 / 3, 2.0 / 3)}), 0.0, 1e-15);
    EXPECT_NEAR(cayley_residual({Ellipse(1, 1), Ellipse(0.5, 0.5)}), 0.0, 1e-15);
    EXPECT_NEAR(cayley_residual({Ellipse(2, 1), Ellipse(0.5, 0.5)}), -0.25, 1e-15);
}

TEST(CayleyResidual, InvariantUnderDiagonalScaling) {
    const ConicPair pair(Ellipse(2.3, 1.1), Ellipse(0.9, 0.5));
    const double base = cayley_residual(pair);
    for (double sx : {0.3, 1.0, 2.7}) {
        for (double sy : {0.5, 4.0}) {
            const ConicPair scaled(pair.outer().scaled(sx, sy), pair.caustic().scaled(sx, sy));
            EXPECT_NEAR(cayley_residual(scaled), base, 1e-14);
        }
    }
}

TEST(DerivedRadii, Examples) {
    auto r = derived_radii(2, 1);
    EXPECT_NEAR(r.inradius, 2.0 / 3, 1e-15);
    EXPECT_NEAR(r.circumradius, 3.0, 1e-15);
    EXPECT_NEAR(r.incircle_family_circumradius, 1.5, 1e-15);
    r = derived_radii(1, 1);
    EXPECT_NEAR(r.inradius, 0.5, 1e-15);
    EXPECT_NEAR(r.circumradius, 2.0, 1e-15);
    r = derived_radii(3, 1);
    EXPECT_NEAR(r.inradius, 0.75, 1e-15);
    EXPECT_NEAR(r.circumradius, 4.0, 1e-15);
}

TEST(ConfocalScale, Examples) {
    EXPECT_NEAR(confocal_scale(2, 1), std::sqrt(5.0 / 32), 1e-15);
    EXPECT_NEAR(confocal_scale(2, 1), 0.3952847, 1e-7);
    EXPECT_EQ(confocal_scale(1, 1), 1.0);
    EXPECT_NEAR(confocal_scale(1, 2), std::sqrt(32.0 / 5), 1e-14);
    EXPECT_NEAR(confocal_scale(1, 2), 2.5298221, 1e-7);
    // (s 2/3)^2 - (2/3)^2 == (2s)^2 - 1 == -0.375
    const double s = confocal_scale(2, 1);
    EXPECT_NEAR(s * s * 4.0 / 9 - 4.0 / 9, -0.375, 1e-15);
    EXPECT_NEAR(4.0 * s * s - 1.0, -0.375, 1e-15);
}

TEST(ConfocalScale, ProducesConfocalPairOnGrid) {
    for (double a : log_grid(13)) {
        for (double b : log_grid(13)) {
            const double s = confocal_scale(a, b);
            const double r = derived_radii(a, b).inradius;
            const double lhs = (s * r) * (s * r) - r * r;
            const double rhs = (s * a) * (s * a) - b * b;
            EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::max(a * a, b * b)) << a << "," << b;
            EXPECT_NEAR(s * confocal_scale(b, a), 1.0, 1e-14);
        }
    }
}

TEST(ExcentralScale, Examples) {
    EXPECT_NEAR(excentral_scale(2, 1), std::sqrt(0.4), 1e-15);
    EXPECT_EQ(excentral_scale(1, 1), 1.0);
    EXPECT_NEAR(excentral_scale(1, 2), std::sqrt(2.5), 1e-15);
    EXPECT_NEAR(excentral_scale(2, 1) * excentral_scale(1, 2), 1.0, 1e-15);
    // b_e = (alpha^2 + delta) / beta = (1.6 + 1.4) / 1 = 3
    const double alpha = excentral_scale(2, 1) * 2;
    EXPECT_NEAR(alpha * alpha, 1.6, 1e-15);
    EXPECT_NEAR(confocal_delta(alpha, 1.0), 1.4, 1e-15);
    EXPECT_NEAR(excentral_locus_axes(alpha, 1.0).b(), 3.0, 1e-15);
}

TEST(ROverRConfocal, Examples) {
    EXPECT_NEAR(r_over_R_confocal(std::sqrt(0.625), 1.0), 4.0 / 9, 1e-14);
    EXPECT_NEAR(r_over_R_confocal(2, 1), 2 * (std::sqrt(13.0) - 1) * (4 - std::sqrt(13.0)) / 9, 1e-15);
    EXPECT_NEAR(r_over_R_confocal(2, 1), 0.22839, 1e-5);
    EXPECT_EQ(r_over_R_confocal(1, 1), 0.5);
    EXPECT_EQ(r_over_R_confocal(3.7, 3.7), 0.5);
}

TEST(ROverRConfocal, SymmetricAndMatchesIncircleRatio) {
    for (double a : log_grid(9)) {
        for (double b : log_grid(9)) {
            if (a == b) continue;
            EXPECT_NEAR(r_over_R_confocal(a, b), r_over_R_confocal(b, a), 1e-14);
            const double alpha = confocal_scale(a, b) * a;
            EXPECT_NEAR(r_over_R_confocal(alpha, b), 2 * a * b / ((a + b) * (a + b)), 1e-12) << a << "," << b;
        }
    }
}

TEST(ExcentralLocusAxes, Examples) {
    auto e = excentral_locus_axes(2, 1);
    EXPECT_NEAR(e.a(), (1 + std::sqrt(13.0)) / 2, 1e-15);
    EXPECT_NEAR(e.a(), 2.302776, 1e-6);
    EXPECT_NEAR(e.b(), 4 + std::sqrt(13.0), 1e-14);
    e = excentral_locus_axes(1, 1);
    EXPECT_NEAR(e.a(), 2.0, 1e-15);
    EXPECT_NEAR(e.b(), 2.0, 1e-15);
    e = excentral_locus_axes(std::sqrt(0.4) * 2, 1);
    EXPECT_NEAR(e.a(), 2.4 / std::sqrt(1.6), 1e-15);
    EXPECT_NEAR(e.a(), 1.897367, 1e-6);
    EXPECT_NEAR(e.b(), 3.0, 1e-15);
}

TEST(InverseScalings, RoundTrip) {
    for (double a : log_grid(7)) {
        for (double b : log_grid(7)) {
            const double alpha_e = excentral_scale(a, b) * a;
            const auto caustic = circumcircle_caustic_for_confocal(alpha_e, b);
            EXPECT_NEAR(caustic.a(), a, 1e-12 * a);
            EXPECT_EQ(caustic.b(), b);
            const double alpha_c = confocal_scale(a, b) * a;
            const auto outer = incircle_outer_for_confocal(alpha_c, b);
            EXPECT_NEAR(outer.a(), a, 1e-12 * a);
        }
    }
}
