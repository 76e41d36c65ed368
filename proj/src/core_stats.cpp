#include "covtest/core_stats.hpp"

#include <cmath>

#include "covtest/errors.hpp"

namespace covtest {

NullSpec NullSpec::general(CovMatrix sigma0) {
    Eigen::LLT<Eigen::MatrixXd> llt(sigma0.values());
    if (llt.info() != Eigen::Success)
        throw DomainError("NullSpec: null covariance must be positive definite");
    return NullSpec(NullKind::General, std::move(sigma0));
}

const CovMatrix& NullSpec::sigma0() const {
    if (!sigma0_)
        throw ConfigError("NullSpec: no explicit matrix for this null kind");
    return *sigma0_;
}

Eigen::VectorXd sample_mean(const DataMatrix& data) {
    return data.values().rowwise().mean();
}

CovMatrix sample_cov(const DataMatrix& data, CovDivisor divisor) {
    const auto p = data.p();
    const auto n = data.n();
    const Eigen::VectorXd mu = sample_mean(data);
    const Eigen::MatrixXd centered = data.values().colwise() - mu;
    const double div =
        divisor == CovDivisor::BiasedN ? static_cast<double>(n)
                                       : static_cast<double>(n - 1);
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(p, p);
    cov.selfadjointView<Eigen::Lower>().rankUpdate(centered, 1.0 / div);
    cov = cov.selfadjointView<Eigen::Lower>();
    return CovMatrix(std::move(cov));
}

double trace_sq_dev(const Eigen::MatrixXd& s) {
    if (s.rows() != s.cols())
        throw DomainError("trace_sq_dev: matrix must be square");
    const double tr_s2 = s.cwiseProduct(s.transpose()).sum();
    const double tr_s = s.trace();
    return tr_s2 - 2.0 * tr_s + static_cast<double>(s.rows());
}

namespace {

// Inverse symmetric square root via eigendecomposition; requires all
// eigenvalues strictly positive.
Eigen::MatrixXd inverse_sqrt(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success)
        throw DomainError("inverse_sqrt: eigendecomposition failed");
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw DomainError("inverse_sqrt: matrix is not positive definite");
    return es.eigenvectors() *
           es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
           es.eigenvectors().transpose();
}

} // namespace

double estimate_beta(const DataMatrix& data, const NullSpec& null) {
    const auto p = data.p();
    const auto n = data.n();
    const Eigen::VectorXd mu = sample_mean(data);
    Eigen::MatrixXd y = data.values().colwise() - mu;

    switch (null.kind()) {
    case NullKind::Identity:
        break;
    case NullKind::Sphericity: {
        const double gamma =
            sample_cov(data, CovDivisor::UnbiasedNMinus1).values().trace() /
            static_cast<double>(p);
        if (!(gamma > 0.0))
            throw DomainError("estimate_beta: scale estimate must be positive");
        y /= std::sqrt(gamma);
        break;
    }
    case NullKind::General:
        y = inverse_sqrt(null.sigma0().values()) * y;
        break;
    }

    const double fourth = y.array().square().square().sum() /
                          static_cast<double>(n) / static_cast<double>(p);
    return fourth - 3.0;
}

} // namespace covtest
