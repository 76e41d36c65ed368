#pragma once

#include <Eigen/Dense>

#include "covtest/errors.hpp"

namespace covtest {

/**
 * @brief A p x n block of observations: each column is one observation of a
 *        p-dimensional vector.
 *
 * Invariants enforced at construction: p >= 1, n >= 2 (sample covariance
 * needs at least two observations), and every entry finite.
 */
class DataMatrix {
public:
    explicit DataMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {
        if (values_.rows() < 1)
            throw DomainError("DataMatrix: dimension p must be >= 1");
        if (values_.cols() < 2)
            throw DomainError("DataMatrix: need n >= 2 observations");
        if (!values_.allFinite())
            throw DomainError("DataMatrix: entries must be finite");
    }

    [[nodiscard]] Eigen::Index p() const { return values_.rows(); }
    [[nodiscard]] Eigen::Index n() const { return values_.cols(); }
    [[nodiscard]] const Eigen::MatrixXd& values() const { return values_; }

private:
    Eigen::MatrixXd values_;
};

/**
 * @brief A p x p covariance-like matrix, symmetric within 1e-12 relative
 *        tolerance. The stored matrix is symmetrized so downstream solvers
 *        can rely on exact symmetry.
 *
 * Positive definiteness is *not* part of this type's contract; it is checked
 * where required (e.g. when a matrix is used as a null covariance).
 */
class CovMatrix {
public:
    explicit CovMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {
        if (values_.rows() != values_.cols() || values_.rows() < 1)
            throw DomainError("CovMatrix: matrix must be square and non-empty");
        if (!values_.allFinite())
            throw DomainError("CovMatrix: entries must be finite");
        const double scale = std::max(1.0, values_.cwiseAbs().maxCoeff());
        const double asym = (values_ - values_.transpose()).cwiseAbs().maxCoeff();
        if (asym > 1e-12 * scale)
            throw DomainError("CovMatrix: matrix is not symmetric");
        values_ = ((values_ + values_.transpose()) * 0.5).eval();
    }

    [[nodiscard]] Eigen::Index p() const { return values_.rows(); }
    [[nodiscard]] const Eigen::MatrixXd& values() const { return values_; }

private:
    Eigen::MatrixXd values_;
};

} // namespace covtest
