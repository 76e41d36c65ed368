#include "covtest/core_stats.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "covtest/errors.hpp"
#include "covtest/rng.hpp"
#include "test_util.hpp"

namespace covtest {
namespace {

using testing::gaussian_data;
using testing::grid_data;
using testing::random_spd;

TEST(SampleMean, SmallExample) {
    Eigen::MatrixXd x(2, 2);
    x << 1.0, 3.0,
         2.0, 6.0;
    const Eigen::VectorXd mu = sample_mean(DataMatrix(x));
    EXPECT_DOUBLE_EQ(mu(0), 2.0);
    EXPECT_DOUBLE_EQ(mu(1), 4.0);
}

TEST(SampleCov, TwoObservationsBothDivisors) {
    // With two observations and d = x1 - x2, the centered matrix is
    // (d/2, -d/2), so the biased estimate is d d^T / 4 and the unbiased one
    // d d^T / 2.
    Eigen::MatrixXd x(2, 2);
    x << 1.0, 3.0,
         2.0, 6.0;
    const DataMatrix data(x);

    const CovMatrix biased = sample_cov(data, CovDivisor::BiasedN);
    EXPECT_DOUBLE_EQ(biased.values()(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(biased.values()(0, 1), 2.0);
    EXPECT_DOUBLE_EQ(biased.values()(1, 0), 2.0);
    EXPECT_DOUBLE_EQ(biased.values()(1, 1), 4.0);

    const CovMatrix unbiased = sample_cov(data, CovDivisor::UnbiasedNMinus1);
    EXPECT_DOUBLE_EQ(unbiased.values()(0, 0), 2.0);
    EXPECT_DOUBLE_EQ(unbiased.values()(0, 1), 4.0);
    EXPECT_DOUBLE_EQ(unbiased.values()(1, 0), 4.0);
    EXPECT_DOUBLE_EQ(unbiased.values()(1, 1), 8.0);
}

TEST(SampleCov, DivisorRelation) {
    const DataMatrix data = grid_data(4, 7, 101);
    const Eigen::MatrixXd biased = sample_cov(data, CovDivisor::BiasedN).values();
    const Eigen::MatrixXd unbiased =
        sample_cov(data, CovDivisor::UnbiasedNMinus1).values();
    const Eigen::MatrixXd rescaled = biased * (7.0 / 6.0);
    const double scale = unbiased.cwiseAbs().maxCoeff();
    EXPECT_LT((rescaled - unbiased).cwiseAbs().maxCoeff(), 1e-14 * scale);
}

TEST(SampleCov, LocationInvarianceIsExact) {
    // n = 16 observations on the 1/8 grid: the sample mean and the shift are
    // both exact in double precision, so the covariance matrices must agree
    // bit for bit.
    const DataMatrix data = grid_data(5, 16, 202);
    const double shift = 2.625;
    const DataMatrix shifted((data.values().array() + shift).matrix());

    for (auto divisor : {CovDivisor::BiasedN, CovDivisor::UnbiasedNMinus1}) {
        const Eigen::MatrixXd a = sample_cov(data, divisor).values();
        const Eigen::MatrixXd b = sample_cov(shifted, divisor).values();
        EXPECT_TRUE((a.array() == b.array()).all());
    }
}

TEST(SampleCov, ResultIsExactlySymmetric) {
    const DataMatrix data = gaussian_data(6, 11, 303);
    const Eigen::MatrixXd cov = sample_cov(data, CovDivisor::BiasedN).values();
    EXPECT_TRUE((cov.array() == cov.transpose().array()).all());
}

TEST(TraceSqDev, KnownValues) {
    EXPECT_DOUBLE_EQ(trace_sq_dev(Eigen::MatrixXd::Identity(4, 4)), 0.0);
    EXPECT_DOUBLE_EQ(trace_sq_dev(2.0 * Eigen::MatrixXd::Identity(3, 3)), 3.0);
    Eigen::MatrixXd one(1, 1);
    one << 4.0;
    EXPECT_DOUBLE_EQ(trace_sq_dev(one), 9.0);
}

TEST(TraceSqDev, MatchesEigenvalueForm) {
    Eigen::MatrixXd raw = grid_data(5, 5, 404).values();
    const Eigen::MatrixXd s = 0.5 * (raw + raw.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
    ASSERT_EQ(es.info(), Eigen::Success);
    const double via_eigen = (es.eigenvalues().array() - 1.0).square().sum();
    EXPECT_NEAR(trace_sq_dev(s), via_eigen, 1e-9);
}

TEST(TraceSqDev, NonSymmetricInput) {
    Eigen::MatrixXd s = grid_data(4, 4, 505).values();
    const Eigen::MatrixXd dev =
        (s - Eigen::MatrixXd::Identity(4, 4)) *
        (s - Eigen::MatrixXd::Identity(4, 4));
    EXPECT_NEAR(trace_sq_dev(s), dev.trace(), 1e-12 * std::abs(dev.trace()) + 1e-12);
}

TEST(TraceSqDev, RejectsNonSquare) {
    EXPECT_THROW(trace_sq_dev(Eigen::MatrixXd::Zero(2, 3)), DomainError);
}

TEST(EstimateBeta, GaussianEntriesNearZero) {
    const DataMatrix data = gaussian_data(50, 5000, 606);
    const double beta = estimate_beta(data, NullSpec::identity());
    EXPECT_NEAR(beta, 0.0, 0.1);
}

TEST(EstimateBeta, StandardizedGammaNearThreeHalves) {
    // Entries gamma with shape 4 and scale 1/2: mean 2, variance 1, fourth
    // central moment 4.5, so the estimator targets 1.5.
    Rng rng(707);
    Eigen::MatrixXd x(50, 5000);
    for (int j = 0; j < x.cols(); ++j)
        for (int i = 0; i < x.rows(); ++i)
            x(i, j) = rng.gamma(4.0, 0.5);
    const double beta = estimate_beta(DataMatrix(std::move(x)), NullSpec::identity());
    EXPECT_NEAR(beta, 1.5, 0.15);
}

TEST(EstimateBeta, TwoPointEntriesExactlyMinusTwo) {
    // Rows of +-1 with exact zero mean: centered entries are +-1, fourth
    // powers all 1, so the estimate is 1 - 3 = -2 with no rounding at all.
    Eigen::MatrixXd x(2, 4);
    x << 1.0, -1.0,  1.0, -1.0,
        -1.0,  1.0,  1.0, -1.0;
    EXPECT_EQ(estimate_beta(DataMatrix(x), NullSpec::identity()), -2.0);
}

TEST(EstimateBeta, SphericityScaleInvariantBitwise) {
    // Scaling the data by a power of two scales gamma_hat by its square
    // exactly, so the whitened entries and the estimate are bit-identical.
    const DataMatrix data = grid_data(6, 16, 808);
    const DataMatrix scaled(data.values() * 4.0);
    const double a = estimate_beta(data, NullSpec::sphericity());
    const double b = estimate_beta(scaled, NullSpec::sphericity());
    EXPECT_EQ(a, b);
}

TEST(EstimateBeta, GeneralNullWhitensCorrelatedGaussians) {
    const Eigen::MatrixXd sigma0 = random_spd(20, 909);
    const Eigen::MatrixXd l = Eigen::LLT<Eigen::MatrixXd>(sigma0).matrixL();
    Rng rng(910);
    Eigen::MatrixXd z(20, 4000);
    for (int j = 0; j < z.cols(); ++j)
        for (int i = 0; i < z.rows(); ++i)
            z(i, j) = rng.normal();
    const DataMatrix data(l * z);
    const double beta = estimate_beta(data, NullSpec::general(CovMatrix(sigma0)));
    EXPECT_NEAR(beta, 0.0, 0.1);
}

TEST(DataMatrix, RejectsSingleObservation) {
    EXPECT_THROW((void)DataMatrix(Eigen::MatrixXd::Zero(3, 1)), DomainError);
}

TEST(DataMatrix, RejectsNonFinite) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(2, 3);
    x(1, 2) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW((void)DataMatrix(x), DomainError);
}

TEST(CovMatrix, RejectsAsymmetric) {
    Eigen::MatrixXd a(2, 2);
    a << 1.0, 0.5,
         0.1, 1.0;
    EXPECT_THROW((void)CovMatrix(a), DomainError);
}

TEST(CovMatrix, SymmetrizesWithinTolerance) {
    Eigen::MatrixXd a(2, 2);
    a << 1.0, 1.0 + 5e-13,
         1.0, 1.0;
    const CovMatrix cov(a);
    EXPECT_EQ(cov.values()(0, 1), cov.values()(1, 0));
}

TEST(NullSpec, GeneralRequiresPositiveDefinite) {
    Eigen::MatrixXd a(2, 2);
    a << 1.0, 2.0,
         2.0, 1.0; // eigenvalues 3 and -1
    EXPECT_THROW((void)NullSpec::general(CovMatrix(a)), DomainError);
    EXPECT_THROW((void)NullSpec::identity().sigma0(), ConfigError);
}

} // namespace
} // namespace covtest
