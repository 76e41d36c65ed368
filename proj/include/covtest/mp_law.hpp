#pragma once

#include <functional>

namespace covtest {

/**
 * @brief Dimension-to-sample ratio indexing a Marchenko-Pastur law.
 *
 * Invariant: q > 0. Values above 1 are legal; the law then carries a point
 * mass at the origin of weight 1 - 1/q.
 */
class MPIndex {
public:
    explicit MPIndex(double q);
    [[nodiscard]] double q() const { return q_; }

    /// Lower support edge (1 - sqrt(q))^2 of the continuous part.
    [[nodiscard]] double support_lower() const;
    /// Upper support edge (1 + sqrt(q))^2.
    [[nodiscard]] double support_upper() const;

private:
    double q_;
};

/// Continuous Marchenko-Pastur density at x; zero outside the support.
double mp_density(double x, MPIndex index);

/// Mass at the origin: max(0, 1 - 1/q).
double mp_point_mass(MPIndex index);

/**
 * @brief Closed-form integral of (x-1)^2 against the Marchenko-Pastur law,
 *        which collapses to q itself (the point mass for q > 1 contributes
 *        (1-1/q) * 1 and the continuous part makes up the rest).
 *
 * @throws RatioAtUnityError when |q - 1| <= 1e-8; the downstream centering
 *         term is undefined on that ridge and callers must not smooth over it.
 */
double mp_integral_g(MPIndex index);

/**
 * @brief Numerical integral of an arbitrary f against the Marchenko-Pastur
 *        law, including the origin point mass when q > 1.
 *
 * The continuous part is computed after the substitution
 * x = 1 + q - 2 sqrt(q) cos(theta), which removes the edge singularities:
 * the integrand becomes f(x(theta)) * 2 sin^2(theta) / (pi x(theta)) over
 * [0, pi]. Refinement follows adaptive_simpson's doubling rule.
 *
 * @throws QuadratureError if refinement does not converge within the cap.
 */
double mp_integral_numeric(const std::function<double(double)>& f,
                           MPIndex index,
                           double tol = 1e-9);

/**
 * @brief Closed form of the full-period integral of 1/(cos(theta) + d0):
 *        -2 pi / sqrt(d0^2 - 1), valid for d0 < -1.
 *
 * @throws DomainError when d0 >= -1 (for |d0| <= 1 the integrand has a pole
 *         on the path).
 */
double helper_integral_cos(double d0);

} // namespace covtest
