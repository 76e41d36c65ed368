#pragma once

#include <optional>
#include <utility>

#include "covtest/data_matrix.hpp"

namespace covtest {

/// Which covariance structure the null hypothesis pins down.
enum class NullKind {
    Identity,   ///< Sigma = I
    Sphericity, ///< Sigma = gamma I with gamma > 0 unknown
    General     ///< Sigma = Sigma0 for a user-supplied positive definite Sigma0
};

/**
 * @brief Null hypothesis specification. For NullKind::General the matrix must
 *        be positive definite (verified by Cholesky at construction).
 */
class NullSpec {
public:
    static NullSpec identity() { return NullSpec(NullKind::Identity, std::nullopt); }
    static NullSpec sphericity() { return NullSpec(NullKind::Sphericity, std::nullopt); }
    static NullSpec general(CovMatrix sigma0);

    [[nodiscard]] NullKind kind() const { return kind_; }

    /// Defined only for NullKind::General.
    [[nodiscard]] const CovMatrix& sigma0() const;

private:
    NullSpec(NullKind kind, std::optional<CovMatrix> sigma0)
        : kind_(kind), sigma0_(std::move(sigma0)) {}

    NullKind kind_;
    std::optional<CovMatrix> sigma0_;
};

} // namespace covtest
