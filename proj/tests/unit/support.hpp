#pragma once

// Shared helpers for the unit tests: seeded generators and independent oracles.

#include "pdm/grid.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace testing {

// Fixed-seed generator; every property test owns one so failures replay.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    // kappa away from the excluded set {0, 1, -1}
    double kappa() {
        for (;;) {
            const double k = uniform(-5.0, 5.0);
            if (std::abs(k) > 0.05 && std::abs(std::abs(k) - 1.0) > 0.05) return k;
        }
    }

    // Gaussian bump centred inside [lo, hi] that is below 1e-12 at both edges.
    pdm::SampledFunction bump(const pdm::Grid& g) {
        const double len = g.x_hi() - g.x_lo();
        const double width = uniform(0.04, 0.08) * len;
        const double centre = uniform(g.x_lo() + 0.4 * len, g.x_hi() - 0.4 * len);
        const double freq = uniform(-2.0, 2.0);
        return pdm::SampledFunction::from(g, [=](double x) {
            const double t = (x - centre) / width;
            return std::exp(-0.5 * t * t) * pdm::cplx(std::cos(freq * x), std::sin(freq * x));
        });
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

// Dense symmetric eigenvalues by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
    std::sort(out.begin(), out.end());
    return out;
}

// Observed order from errors at n, 2n-1, 4n-3 style refinements (h halves each step).
inline double observed_order(const std::vector<double>& errs) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < errs.size(); ++i) sum += std::log2(errs[i] / errs[i + 1]);
    return sum / static_cast<double>(errs.size() - 1);
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace testing
