#pragma once

#include <complex>

#include "covtest/mp_law.hpp"

namespace covtest {

/**
 * @brief Parameters of the limiting normal correction for the scaled test
 *        statistic: dimension ratio q, field constant kappa (2 for real
 *        observations, 1 for complex), and the standardized fourth-cumulant
 *        parameter beta (E xi^4 - kappa - 1; zero for Gaussian entries).
 *
 * Invariants: kappa in {1, 2}, beta finite and >= -kappa. Both corrections
 * are finite and continuous in q on all of (0, inf); the ratio-one exclusion
 * belongs to the centering integral, not here.
 */
class RmtParams {
public:
    RmtParams(double q, int kappa, double beta);

    [[nodiscard]] double q() const { return index_.q(); }
    [[nodiscard]] MPIndex index() const { return index_; }
    [[nodiscard]] int kappa() const { return kappa_; }
    [[nodiscard]] double beta() const { return beta_; }

private:
    MPIndex index_;
    int kappa_;
    double beta_;
};

/// Closed-form asymptotic mean shift: (kappa - 1) q + beta q.
double mean_correction(const RmtParams& params);

/// Closed-form asymptotic variance: 2 kappa q^2 (1 + 2q) + 4 beta q^3.
double var_correction(const RmtParams& params);

/**
 * @brief Companion Stieltjes-transform coordinate change
 *        z(m) = -1/m + q/(1 + m), defined for any q >= 0 (q = 0 degenerates
 *        to the plain reciprocal z = -1/m).
 *
 * @throws DomainError at the poles (m = 0 always; m = -1 unless q = 0).
 * @throws ConfigError for negative q.
 */
std::complex<double> stieltjes_z_of_m(std::complex<double> m, double q);

/**
 * @brief Mean shift computed by quadrature instead of the closed form.
 *
 * The kappa part integrates (x(theta) - 1)^2 over the arc substitution and
 * combines it with the support-edge values; the beta part is a contour
 * integral in the m plane around the pole dictated by q (-1 for q <= 1,
 * 0 for q > 1). The induced circuit orientation flips from counterclockwise
 * to clockwise as q crosses 1, which the sign handling accounts for.
 */
double mean_correction_numeric(const RmtParams& params, double tol = 1e-9);

/// Variance computed by contour quadrature instead of the closed form.
double var_correction_numeric(const RmtParams& params, double tol = 1e-9);

/**
 * @brief The beta part of the mean shift via a single m-plane contour of the
 *        given radius around the q-dependent pole. Exposed so the radius
 *        invariance of the quadrature can be checked directly.
 *
 * Requires radius in (0, 0.7]: the excluded pole sits at distance 1 from the
 * contour center and must keep a 0.3 margin. Violations raise ConfigError.
 */
double mean_correction_beta_part_numeric(const RmtParams& params,
                                         double radius = 0.5,
                                         double tol = 1e-9);

/// The beta part of the variance (a squared one-dimensional contour integral).
double var_correction_beta_part_numeric(const RmtParams& params,
                                        double radius = 0.5,
                                        double tol = 1e-9);

/**
 * @brief The kappa part of the variance via a nested double contour:
 *        inner circle radius @p inner_radius, outer @p outer_radius, both
 *        around the q-dependent pole.
 *
 * @throws ConfigError if the radii are closer than 1e-3 to each other or
 *         either circle comes within 0.3 of the excluded pole.
 */
double var_correction_kappa_part_numeric(const RmtParams& params,
                                         double inner_radius = 0.3,
                                         double outer_radius = 0.6,
                                         double tol = 1e-9);

/**
 * @brief Double-contour covariance functional evaluated on the monomial pair
 *        f(z1) = z1^deg1, g(z2) = z2^deg2 (degrees in {1, 2}), including the
 *        kappa prefactor. Building block used to cross-check
 *        var_correction_kappa_part_numeric term by term.
 */
double upsilon_component_numeric(int deg1,
                                 int deg2,
                                 const RmtParams& params,
                                 double inner_radius = 0.3,
                                 double outer_radius = 0.6,
                                 double tol = 1e-9);

} // namespace covtest
