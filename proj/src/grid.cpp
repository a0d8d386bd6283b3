#include "pdm/grid.hpp"

#include "pdm/errors.hpp"

#include <cmath>

namespace pdm {

Grid::Grid(double x_lo, double x_hi, std::size_t n) : x_lo_(x_lo), x_hi_(x_hi), n_(n) {
    if (n < 16) throw InputError("grid needs at least 16 points");
    if (!(x_hi > x_lo) || !std::isfinite(x_lo) || !std::isfinite(x_hi))
        throw InputError("grid needs finite endpoints with x_lo < x_hi");
    h_ = (x_hi - x_lo) / static_cast<double>(n - 1);
}

double Grid::x(std::size_t i) const {
    if (i + 1 == n_) return x_hi_;
    return x_lo_ + static_cast<double>(i) * h_;
}

std::vector<double> Grid::points() const {
    std::vector<double> xs(n_);
    for (std::size_t i = 0; i < n_; ++i) xs[i] = x(i);
    return xs;
}

SampledFunction::SampledFunction(Grid g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.n()) throw InputError("sampled function length differs from grid size");
}

SampledFunction::SampledFunction(Grid g) : grid(g), values(g.n(), cplx(0.0)) {}

SampledFunction SampledFunction::from(const Grid& g, const std::function<cplx(double)>& f) {
    SampledFunction out(g);
    for (std::size_t i = 0; i < g.n(); ++i) out.values[i] = f(g.x(i));
    return out;
}

SampledFunction SampledFunction::from_real(const Grid& g, const std::function<double(double)>& f) {
    SampledFunction out(g);
    for (std::size_t i = 0; i < g.n(); ++i) out.values[i] = f(g.x(i));
    return out;
}

SampledFunction SampledFunction::from_real(const Grid& g, const std::vector<double>& v) {
    if (v.size() != g.n()) throw InputError("sample vector length differs from grid size");
    SampledFunction out(g);
    for (std::size_t i = 0; i < g.n(); ++i) out.values[i] = v[i];
    return out;
}

std::vector<double> SampledFunction::real() const {
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i].real();
    return out;
}

std::vector<double> SampledFunction::abs() const {
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = std::abs(values[i]);
    return out;
}

SampledFunction derivative(const SampledFunction& f) {
    const std::size_t n = f.size();
    const double h = f.grid.h();
    SampledFunction out(f.grid);
    const auto& v = f.values;
    for (std::size_t i = 1; i + 1 < n; ++i) out.values[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    // one-sided (-3, 4, -1) stencil written in differences so constants give exactly 0
    out.values[0] = (4.0 * (v[1] - v[0]) - (v[2] - v[0])) / (2.0 * h);
    out.values[n - 1] = (4.0 * (v[n - 1] - v[n - 2]) - (v[n - 1] - v[n - 3])) / (2.0 * h);
    return out;
}

cplx integrate(const SampledFunction& f) {
    const std::size_t n = f.size();
    const double h = f.grid.h();
    const auto& v = f.values;
    // Simpson over the largest odd-length prefix
    const std::size_t m = (n % 2 == 1) ? n : n - 1;
    cplx odd = 0.0;
    cplx even = 0.0;
    for (std::size_t i = 1; i + 1 < m; i += 2) odd += v[i];
    for (std::size_t i = 2; i + 1 < m; i += 2) even += v[i];
    cplx total = h / 3.0 * (v[0] + v[m - 1] + 4.0 * odd + 2.0 * even);
    if (m != n) total += 0.5 * h * (v[n - 2] + v[n - 1]);
    return total;
}

double l2_norm(const SampledFunction& f) {
    double s = 0.0;
    for (const auto& z : f.values) s += std::norm(z);
    return std::sqrt(f.grid.h() * s);
}

cplx inner(const SampledFunction& f, const SampledFunction& g) {
    if (!(f.grid == g.grid)) throw InputError("inner product of functions on different grids");
    SampledFunction p(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) p.values[i] = std::conj(f.values[i]) * g.values[i];
    return integrate(p);
}

double max_abs(const SampledFunction& f) {
    double m = 0.0;
    for (const auto& z : f.values) m = std::max(m, std::abs(z));
    return m;
}

SampledFunction operator+(const SampledFunction& a, const SampledFunction& b) {
    SampledFunction out(a.grid);
    for (std::size_t i = 0; i < a.size(); ++i) out.values[i] = a.values[i] + b.values[i];
    return out;
}

SampledFunction operator-(const SampledFunction& a, const SampledFunction& b) {
    SampledFunction out(a.grid);
    for (std::size_t i = 0; i < a.size(); ++i) out.values[i] = a.values[i] - b.values[i];
    return out;
}

SampledFunction operator*(cplx s, const SampledFunction& a) {
    SampledFunction out(a.grid);
    for (std::size_t i = 0; i < a.size(); ++i) out.values[i] = s * a.values[i];
    return out;
}

SampledFunction multiply(const std::vector<double>& coeff, const SampledFunction& f) {
    SampledFunction out(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i)
        out.values[i] = f.values[i] == cplx(0.0) ? cplx(0.0) : coeff[i] * f.values[i];
    return out;
}

SampledFunction multiply(const std::vector<cplx>& coeff, const SampledFunction& f) {
    SampledFunction out(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i)
        out.values[i] = f.values[i] == cplx(0.0) ? cplx(0.0) : coeff[i] * f.values[i];
    return out;
}

std::vector<SampledFunction> smooth_test_suite(const Grid& g) {
    const double lo = g.x_lo();
    const double len = g.x_hi() - lo;
    const double w = len / 16.0;
    auto gauss = [](double t) { return std::exp(-t * t); };
    std::vector<SampledFunction> suite;
    suite.push_back(SampledFunction::from_real(g, [&](double x) { return gauss((x - (lo + 0.5 * len)) / w); }));
    suite.push_back(SampledFunction::from_real(g, [&](double x) {
        const double t = (x - (lo + 0.4 * len)) / w;
        return t * gauss(t);
    }));
    suite.push_back(SampledFunction::from_real(g, [&](double x) {
        const double t = (x - (lo + 0.6 * len)) / w;
        return std::cos(2.0 * t) * gauss(t);
    }));
    suite.push_back(SampledFunction::from_real(g, [&](double x) {
        const double t = (x - (lo + 0.45 * len)) / (0.7 * w);
        return (1.0 - t * t) * gauss(t);
    }));
    suite.push_back(SampledFunction::from(g, [&](double x) {
        const double t = (x - (lo + 0.55 * len)) / w;
        return cplx(std::cos(t), std::sin(t)) * gauss(t);
    }));
    return suite;
}

} // namespace pdm
