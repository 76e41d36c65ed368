#pragma once

#include <stdexcept>
#include <string>

namespace covtest {

/// Input lies outside the mathematical domain of an operation
/// (non-positive-definite null covariance, pole on an integration contour, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The dimension ratio q_n = p/(n-1) is too close to 1, where the corrected
/// statistic's centering term is undefined.
class RatioAtUnityError : public DomainError {
public:
    explicit RatioAtUnityError(const std::string& what) : DomainError(what) {}
};

/// A quadrature rule failed to converge within its refinement budget.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration (bad parameter combination, colliding contours, ...).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// File reading or parsing failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace covtest
