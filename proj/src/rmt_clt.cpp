#include "covtest/rmt_clt.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "covtest/errors.hpp"
#include "covtest/quadrature.hpp"

namespace covtest {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPoleMargin = 0.3;

// The m-plane integrands have poles only at 0 and -1. The circuit encircles
// one of them (-1 when q <= 1, 0 when q > 1) and must stay clear of the other,
// which sits at distance 1 from the center.
double contour_center(double q) { return q <= 1.0 ? -1.0 : 0.0; }

void check_radius(double radius, const char* who) {
    if (!(radius > 0.0) || !(1.0 - radius >= kPoleMargin))
        throw ConfigError(std::string(who) +
                          ": contour radius must lie in (0, 0.7] so the excluded "
                          "pole keeps a 0.3 margin");
}

// (2 pi i)^-1 times the counterclockwise circle integral of F, by the periodic
// trapezoid rule with node doubling until two successive estimates agree.
Complex circle_residue_quad(const std::function<Complex(Complex)>& F,
                            Complex center,
                            double radius,
                            double tol,
                            int n_start = 2048,
                            int n_max = 1 << 20) {
    Complex prev(0.0, 0.0);
    bool have_prev = false;
    for (int n = n_start; n <= n_max; n *= 2) {
        Complex sum(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
            const double theta = kTwoPi * j / n;
            const Complex e(std::cos(theta), std::sin(theta));
            sum += F(center + radius * e) * e;
        }
        const Complex value = sum * (radius / n);
        if (have_prev && std::abs(value - prev) < tol)
            return value;
        prev = value;
        have_prev = true;
    }
    throw QuadratureError("circle_residue_quad: no convergence within node cap");
}

Complex z_of_m_unchecked(Complex m, double q) {
    return -1.0 / m + q / (1.0 + m);
}

Complex monomial(Complex z, int deg) {
    Complex w = z;
    for (int k = 1; k < deg; ++k)
        w *= z;
    return w;
}

// -(4 pi^2)^-1 times the nested double contour of f1(z(m1)) f2(z(m2)) over
// (m1 - m2)^2, both circles counterclockwise around the same center. The
// kernel is analytic in an annulus whose radius ratio is bounded away from 1,
// so a few hundred nodes per circle already reach spectral accuracy; doubling
// continues until two successive estimates agree.
double double_contour_quad(const std::function<Complex(Complex)>& f1,
                           const std::function<Complex(Complex)>& f2,
                           double q,
                           double r_inner,
                           double r_outer,
                           double tol,
                           int n_start = 512,
                           int n_max = 1 << 14) {
    check_radius(r_inner, "double_contour_quad");
    check_radius(r_outer, "double_contour_quad");
    if (!(r_outer - r_inner >= 1e-3))
        throw ConfigError(
            "double_contour_quad: nested contour radii must differ by at least "
            "1e-3 (inner strictly inside outer)");
    const Complex center(contour_center(q), 0.0);

    double prev = 0.0;
    bool have_prev = false;
    for (int n = n_start; n <= n_max; n *= 2) {
        // Precompute per-node factors: a_j = f(z(m_j)) e^{i theta_j} r.
        std::vector<Complex> m1(n), m2(n), a1(n), a2(n);
        for (int j = 0; j < n; ++j) {
            const double theta = kTwoPi * j / n;
            const Complex e(std::cos(theta), std::sin(theta));
            m1[j] = center + r_inner * e;
            m2[j] = center + r_outer * e;
            a1[j] = f1(z_of_m_unchecked(m1[j], q)) * e * r_inner;
            a2[j] = f2(z_of_m_unchecked(m2[j], q)) * e * r_outer;
        }
        Complex sum(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
            Complex row(0.0, 0.0);
            for (int k = 0; k < n; ++k) {
                const Complex d = m1[j] - m2[k];
                row += a2[k] / (d * d);
            }
            sum += a1[j] * row;
        }
        const double value = (sum / static_cast<double>(n * n)).real();
        if (have_prev && std::abs(value - prev) < tol)
            return value;
        prev = value;
        have_prev = true;
    }
    throw QuadratureError("double_contour_quad: no convergence within node cap");
}

} // namespace

RmtParams::RmtParams(double q, int kappa, double beta)
    : index_(q), kappa_(kappa), beta_(beta) {
    if (kappa != 1 && kappa != 2)
        throw ConfigError("RmtParams: kappa must be 1 (complex) or 2 (real)");
    if (!std::isfinite(beta) || beta < -static_cast<double>(kappa))
        throw ConfigError("RmtParams: beta must be finite and >= -kappa");
}

double mean_correction(const RmtParams& params) {
    const double q = params.q();
    return (params.kappa() - 1) * q + params.beta() * q;
}

double var_correction(const RmtParams& params) {
    const double q = params.q();
    return 2.0 * params.kappa() * q * q * (1.0 + 2.0 * q) +
           4.0 * params.beta() * q * q * q;
}

std::complex<double> stieltjes_z_of_m(std::complex<double> m, double q) {
    if (!(q >= 0.0))
        throw ConfigError("stieltjes_z_of_m: q must be >= 0");
    if (m == Complex(0.0, 0.0))
        throw DomainError("stieltjes_z_of_m: pole at m = 0");
    if (q != 0.0 && m == Complex(-1.0, 0.0))
        throw DomainError("stieltjes_z_of_m: pole at m = -1");
    return z_of_m_unchecked(m, q);
}

double mean_correction_beta_part_numeric(const RmtParams& params,
                                         double radius,
                                         double tol) {
    check_radius(radius, "mean_correction_beta_part_numeric");
    const double q = params.q();
    const Complex center(contour_center(q), 0.0);
    const auto F = [q](Complex m) {
        const Complex num = m * m - (q - 2.0) * m + 1.0;
        const Complex onepm = 1.0 + m;
        const Complex onepm2 = onepm * onepm;
        return (num * num) / (m * onepm2 * onepm2 * onepm);
    };
    const Complex res = circle_residue_quad(F, center, radius, tol);
    // The residue theorem applies to the counterclockwise circuit only for
    // q <= 1; crossing q = 1 swaps the enclosed pole and reverses the induced
    // orientation, hence the sign flip.
    const double orientation = q <= 1.0 ? 1.0 : -1.0;
    return -params.beta() * q * orientation * res.real();
}

double mean_correction_numeric(const RmtParams& params, double tol) {
    const double q = params.q();
    const double sq = std::sqrt(q);
    double kappa_part = 0.0;
    if (params.kappa() != 1) {
        // g(x) = (x - 1)^2 evaluated on the arc x(theta) = 1 + q - 2 sqrt(q) cos(theta).
        const auto g_arc = [q, sq](double theta) {
            const double d = q - 2.0 * sq * std::cos(theta);
            return d * d;
        };
        const double arc = adaptive_simpson(g_arc, 0.0, kPi, tol);
        const double g_lower = (q - 2.0 * sq) * (q - 2.0 * sq);
        const double g_upper = (q + 2.0 * sq) * (q + 2.0 * sq);
        kappa_part = (params.kappa() - 1) *
                     (0.25 * (g_lower + g_upper) - arc / kTwoPi);
    }
    return kappa_part + mean_correction_beta_part_numeric(params, 0.5, tol);
}

double var_correction_beta_part_numeric(const RmtParams& params,
                                        double radius,
                                        double tol) {
    check_radius(radius, "var_correction_beta_part_numeric");
    const double q = params.q();
    const Complex center(contour_center(q), 0.0);
    const auto F = [q](Complex m) {
        const Complex zm1 = z_of_m_unchecked(m, q) - 1.0;
        const Complex onepm = 1.0 + m;
        return (zm1 * zm1) / (onepm * onepm);
    };
    // Squaring the circuit integral cancels its orientation, so no q-dependent
    // sign is needed here.
    const Complex res = circle_residue_quad(F, center, radius, tol);
    return params.beta() * q * (res * res).real();
}

double var_correction_kappa_part_numeric(const RmtParams& params,
                                         double inner_radius,
                                         double outer_radius,
                                         double tol) {
    const double q = params.q();
    const auto f = [](Complex z) { return z * z - 2.0 * z; };
    return params.kappa() *
           double_contour_quad(f, f, q, inner_radius, outer_radius, tol);
}

double upsilon_component_numeric(int deg1,
                                 int deg2,
                                 const RmtParams& params,
                                 double inner_radius,
                                 double outer_radius,
                                 double tol) {
    if (deg1 < 1 || deg1 > 2 || deg2 < 1 || deg2 > 2)
        throw ConfigError("upsilon_component_numeric: degrees must be 1 or 2");
    const double q = params.q();
    const auto f1 = [deg1](Complex z) { return monomial(z, deg1); };
    const auto f2 = [deg2](Complex z) { return monomial(z, deg2); };
    return params.kappa() *
           double_contour_quad(f1, f2, q, inner_radius, outer_radius, tol);
}

double var_correction_numeric(const RmtParams& params, double tol) {
    return var_correction_kappa_part_numeric(params, 0.3, 0.6, tol) +
           var_correction_beta_part_numeric(params, 0.5, tol);
}

} // namespace covtest
