#include "covtest/mp_law.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "covtest/errors.hpp"
#include "covtest/quadrature.hpp"

namespace covtest {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kRatioUnityBand = 1e-8;
} // namespace

MPIndex::MPIndex(double q) : q_(q) {
    if (!(q > 0.0) || !std::isfinite(q))
        throw DomainError("MPIndex: ratio q must be finite and > 0");
}

double MPIndex::support_lower() const {
    const double s = 1.0 - std::sqrt(q_);
    return s * s;
}

double MPIndex::support_upper() const {
    const double s = 1.0 + std::sqrt(q_);
    return s * s;
}

double mp_density(double x, MPIndex index) {
    const double a = index.support_lower();
    const double b = index.support_upper();
    if (!(x > a) || !(x < b))
        return 0.0;
    return std::sqrt((b - x) * (x - a)) / (2.0 * kPi * x * index.q());
}

double mp_point_mass(MPIndex index) {
    return std::max(0.0, 1.0 - 1.0 / index.q());
}

double mp_integral_g(MPIndex index) {
    const double q = index.q();
    if (std::abs(q - 1.0) <= kRatioUnityBand)
        throw RatioAtUnityError(
            "mp_integral_g: q_n = 1 is excluded (|q - 1| <= 1e-8); the centering "
            "term is undefined at the ratio-one ridge");
    return q;
}

double mp_integral_numeric(const std::function<double(double)>& f,
                           MPIndex index,
                           double tol) {
    const double q = index.q();
    const double sq = std::sqrt(q);
    const auto integrand = [&](double theta) {
        const double x = 1.0 + q - 2.0 * sq * std::cos(theta);
        // x(0) = (1 - sqrt(q))^2 can round to <= 0 when q is within rounding
        // distance of 1; the sin^2 factor vanishes there as well.
        if (x <= 0.0)
            return 0.0;
        const double s = std::sin(theta);
        return f(x) * (2.0 * s * s) / (kPi * x);
    };
    double value = adaptive_simpson(integrand, 0.0, kPi, tol);
    if (q > 1.0)
        value += f(0.0) * mp_point_mass(index);
    return value;
}

double helper_integral_cos(double d0) {
    if (!(d0 < -1.0))
        throw DomainError(
            "helper_integral_cos: requires d0 < -1 (for |d0| <= 1 the integrand "
            "1/(cos(theta) + d0) has a pole on the path); got d0 = " +
            std::to_string(d0));
    return -2.0 * kPi / std::sqrt(d0 * d0 - 1.0);
}

} // namespace covtest
