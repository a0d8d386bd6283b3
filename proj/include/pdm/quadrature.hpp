#pragma once

#include <functional>

namespace pdm {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
};

// Composite Simpson with interval halving until the Richardson error estimate
// drops below rel_tol * |value| (or an absolute floor of abs_floor).
// Throws NumericError carrying the achieved tolerance on non-convergence.
QuadratureResult simpson_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double rel_tol = 1e-10, double abs_floor = 1e-14);

} // namespace pdm
