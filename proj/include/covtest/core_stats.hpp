#pragma once

#include <Eigen/Dense>

#include "covtest/data_matrix.hpp"
#include "covtest/null_spec.hpp"

namespace covtest {

/// Columnwise sample mean of the observations.
Eigen::VectorXd sample_mean(const DataMatrix& data);

enum class CovDivisor {
    BiasedN,         ///< divide centered cross products by n
    UnbiasedNMinus1  ///< divide by n - 1
};

/**
 * @brief Sample covariance of the observations around their sample mean,
 *        computed by two-pass centering followed by a symmetric rank update.
 *
 * The result is exactly symmetric. It is invariant under a common shift of
 * every observation.
 */
CovMatrix sample_cov(const DataMatrix& data, CovDivisor divisor);

/**
 * @brief tr[(S - I)^2] = tr(S^2) - 2 tr(S) + p, evaluated without forming
 *        S - I and without any eigendecomposition. Accepts any square S;
 *        tr(S^2) is accumulated as sum_ij S_ij S_ji.
 */
double trace_sq_dev(const Eigen::MatrixXd& s);

/**
 * @brief Moment estimate of the fourth-cumulant parameter: observations are
 *        centered, whitened against the null covariance, and pooled;
 *        the estimate is mean(y^4) - 3.
 *
 * Whitening uses the inverse symmetric square root of the null covariance
 * (identity null: no-op; sphericity null: division by the square root of
 * gamma_hat = tr(S_n)/p with the n-1 divisor).
 *
 * @throws DomainError if the general null covariance is not positive definite.
 */
double estimate_beta(const DataMatrix& data, const NullSpec& null);

} // namespace covtest
