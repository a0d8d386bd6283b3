#include "pdm/quadrature.hpp"

#include "pdm/errors.hpp"

#include <cmath>
#include <vector>

namespace pdm {

QuadratureResult simpson_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double rel_tol, double abs_floor) {
    if (a == b) return {0.0, 0.0, 0};
    constexpr int kMaxPanels = 1 << 20;

    // endpoint and odd/even sums are reused across halvings
    int panels = 2;
    double h = (b - a) / panels;
    const double ends = f(a) + f(b);
    double evens = 0.0;
    double odds = f(a + h);
    double previous = h / 3.0 * (ends + 4.0 * odds);

    for (;;) {
        panels *= 2;
        h *= 0.5;
        evens += odds;
        odds = 0.0;
        for (int i = 1; i < panels; i += 2) odds += f(a + i * h);
        const double current = h / 3.0 * (ends + 2.0 * evens + 4.0 * odds);
        const double err = std::abs(current - previous) / 15.0;
        if (!std::isfinite(current))
            throw NumericError("quadrature produced a non-finite value", err);
        if (panels >= 16 && err <= std::max(rel_tol * std::abs(current), abs_floor))
            return {current, err, panels};
        if (panels >= kMaxPanels)
            throw NumericError("quadrature did not converge", err / std::max(std::abs(current), abs_floor));
        previous = current;
    }
}

} // namespace pdm
