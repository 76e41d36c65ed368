#pragma once

#include <functional>

namespace covtest {

/**
 * @brief Integrate f over [a, b] with composite Simpson refinement.
 *
 * The trapezoid estimate is refined by interval halving, with Simpson's rule
 * obtained by Richardson extrapolation; refinement stops once two successive
 * Simpson estimates differ by less than @p tol.
 *
 * @throws QuadratureError if the estimates have not settled after
 *         @p max_halvings halvings.
 */
double adaptive_simpson(const std::function<double(double)>& f,
                        double a,
                        double b,
                        double tol = 1e-9,
                        int max_halvings = 22);

} // namespace covtest
