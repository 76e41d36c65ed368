#include "covtest/quadrature.hpp"

#include <cmath>

#include "covtest/errors.hpp"

namespace covtest {

double adaptive_simpson(const std::function<double(double)>& f,
                        double a,
                        double b,
                        double tol,
                        int max_halvings) {
    if (!(b > a))
        throw ConfigError("adaptive_simpson: need b > a");
    if (!(tol > 0.0))
        throw ConfigError("adaptive_simpson: tolerance must be positive");

    // Trapezoid chain: each step doubles the panel count by adding midpoints.
    double trap = 0.5 * (b - a) * (f(a) + f(b));
    double simpson = trap;
    double prev_simpson = 0.0;
    long panels = 1;

    for (int level = 1; level <= max_halvings; ++level) {
        const double h = (b - a) / static_cast<double>(panels);
        double mid_sum = 0.0;
        double x = a + 0.5 * h;
        for (long i = 0; i < panels; ++i, x += h)
            mid_sum += f(x);
        const double next_trap = 0.5 * (trap + h * mid_sum);
        prev_simpson = simpson;
        simpson = (4.0 * next_trap - trap) / 3.0;
        trap = next_trap;
        panels *= 2;

        // A few warm-up levels guard against spurious agreement on coarse grids.
        if (level >= 5 && std::abs(simpson - prev_simpson) < tol)
            return simpson;
    }
    throw QuadratureError("adaptive_simpson: no convergence within refinement cap");
}

} // namespace covtest
