#include "covtest/mp_law.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "covtest/errors.hpp"
#include "covtest/quadrature.hpp"
#include "covtest/rng.hpp"

namespace covtest {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(MPIndex, RejectsNonPositiveRatio) {
    EXPECT_THROW(MPIndex(0.0), DomainError);
    EXPECT_THROW(MPIndex(-0.5), DomainError);
    EXPECT_THROW(MPIndex(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(MPIndex, SupportEdges) {
    const MPIndex idx(0.25);
    EXPECT_DOUBLE_EQ(idx.support_lower(), 0.25);
    EXPECT_DOUBLE_EQ(idx.support_upper(), 2.25);
}

TEST(MpDensity, InteriorValueAndOutside) {
    // At q = 1/4 and x = 1 + q the square root evaluates to 1, leaving
    // 1 / (2 pi x q) = 1 / (0.625 pi).
    const MPIndex idx(0.25);
    EXPECT_NEAR(mp_density(1.25, idx), 1.0 / (0.625 * kPi), 1e-15);
    EXPECT_DOUBLE_EQ(mp_density(0.2, idx), 0.0);
    EXPECT_DOUBLE_EQ(mp_density(2.3, idx), 0.0);
    EXPECT_DOUBLE_EQ(mp_density(idx.support_lower(), idx), 0.0);
}

TEST(MpPointMass, AppearsOnlyAboveOne) {
    EXPECT_DOUBLE_EQ(mp_point_mass(MPIndex(0.5)), 0.0);
    EXPECT_DOUBLE_EQ(mp_point_mass(MPIndex(2.0)), 0.5);
}

TEST(MpIntegralG, ClosedFormIsTheRatioItself) {
    EXPECT_DOUBLE_EQ(mp_integral_g(MPIndex(0.5)), 0.5);
    EXPECT_DOUBLE_EQ(mp_integral_g(MPIndex(2.0)), 2.0);
}

TEST(MpIntegralG, ThrowsOnTheUnityRidge) {
    EXPECT_THROW(mp_integral_g(MPIndex(1.0)), RatioAtUnityError);
    EXPECT_THROW(mp_integral_g(MPIndex(1.0 + 5e-9)), RatioAtUnityError);
    EXPECT_NO_THROW(mp_integral_g(MPIndex(1.0 + 5e-8)));
}

TEST(MpIntegralNumeric, NormalizationAndFirstMoment) {
    for (double q : {0.25, 0.5, 2.0}) {
        const MPIndex idx(q);
        EXPECT_NEAR(mp_integral_numeric([](double) { return 1.0; }, idx), 1.0,
                    1e-8)
            << "q = " << q;
        EXPECT_NEAR(mp_integral_numeric([](double x) { return x; }, idx), 1.0,
                    1e-8)
            << "q = " << q;
    }
}

TEST(MpIntegralNumeric, QuadraticDeviationMatchesClosedForm) {
    const auto g = [](double x) { return (x - 1.0) * (x - 1.0); };
    EXPECT_NEAR(mp_integral_numeric(g, MPIndex(0.5)), 0.5, 1e-8);

    Rng rng(4242);
    for (int k = 0; k < 50; ++k) {
        double q = 4.0 * rng.uniform();
        if (std::abs(q - 1.0) < 0.02 || q < 0.01)
            q += 0.05; // keep clear of the excluded ridge and of zero
        EXPECT_NEAR(mp_integral_numeric(g, MPIndex(q)), q, 1e-7)
            << "q = " << q;
    }
}

TEST(MpIntegralNumeric, ContinuousAcrossTheRidge) {
    // The numeric route has no exclusion at q = 1; values just below and just
    // above must agree to first order.
    const auto g = [](double x) { return (x - 1.0) * (x - 1.0); };
    const double below = mp_integral_numeric(g, MPIndex(1.0 - 1e-4));
    const double above = mp_integral_numeric(g, MPIndex(1.0 + 1e-4));
    // The integral equals q on both sides, so the straddle differs by exactly
    // 2e-4 plus quadrature noise; each side must track its own closed form.
    EXPECT_NEAR(below, 1.0 - 1e-4, 1e-7);
    EXPECT_NEAR(above, 1.0 + 1e-4, 1e-7);
    EXPECT_NEAR(below, above, 2.5e-4);
}

TEST(HelperIntegralCos, ClosedFormValue) {
    EXPECT_NEAR(helper_integral_cos(-1.25), -8.0 * kPi / 3.0, 1e-12);
}

TEST(HelperIntegralCos, DomainGuard) {
    EXPECT_THROW(helper_integral_cos(-1.0), DomainError);
    EXPECT_THROW(helper_integral_cos(0.0), DomainError);
    EXPECT_THROW(helper_integral_cos(1.0), DomainError);
    EXPECT_THROW(helper_integral_cos(2.0), DomainError);
}

TEST(HelperIntegralCos, MatchesDirectQuadrature) {
    Rng rng(515);
    for (int k = 0; k < 20; ++k) {
        const double d0 = -1.05 - 8.95 * rng.uniform();
        const double direct = adaptive_simpson(
            [d0](double t) { return 1.0 / (std::cos(t) + d0); }, 0.0, 2.0 * kPi,
            1e-10);
        EXPECT_NEAR(helper_integral_cos(d0), direct, 1e-8) << "d0 = " << d0;
    }
}

TEST(AdaptiveSimpson, PolynomialAndConvergenceGuard) {
    // Simpson integrates cubics exactly; x^3 over [0, 2] is 4.
    EXPECT_NEAR(adaptive_simpson([](double x) { return x * x * x; }, 0.0, 2.0),
                4.0, 1e-12);
    // A genuinely divergent integrand must raise rather than return garbage.
    EXPECT_THROW(adaptive_simpson([](double x) { return 1.0 / x; }, 0.0, 1.0,
                                  1e-12),
                 QuadratureError);
}

} // namespace
} // namespace covtest
