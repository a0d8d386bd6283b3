#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace pdm {

using cplx = std::complex<double>;

class Grid {
public:
    Grid(double x_lo, double x_hi, std::size_t n);

    double x_lo() const { return x_lo_; }
    double x_hi() const { return x_hi_; }
    std::size_t n() const { return n_; }
    double h() const { return h_; }
    double x(std::size_t i) const;
    std::vector<double> points() const;

    bool operator==(const Grid& other) const = default;

private:
    double x_lo_;
    double x_hi_;
    std::size_t n_;
    double h_;
};

struct SampledFunction {
    Grid grid;
    std::vector<cplx> values;

    SampledFunction(Grid g, std::vector<cplx> v);
    explicit SampledFunction(Grid g);  // zero function

    static SampledFunction from(const Grid& g, const std::function<cplx(double)>& f);
    static SampledFunction from_real(const Grid& g, const std::function<double(double)>& f);
    static SampledFunction from_real(const Grid& g, const std::vector<double>& v);

    std::size_t size() const { return values.size(); }
    cplx operator[](std::size_t i) const { return values[i]; }
    cplx& operator[](std::size_t i) { return values[i]; }
    std::vector<double> real() const;
    std::vector<double> abs() const;
};

// Central second-order stencil inside, one-sided second-order at the ends.
SampledFunction derivative(const SampledFunction& f);
// Composite Simpson; for an even number of points the final panel uses the trapezoid rule.
cplx integrate(const SampledFunction& f);

// Discrete L2 norm sqrt(h * sum |f_i|^2).
double l2_norm(const SampledFunction& f);
// <f, g> = integral of conj(f) g via Simpson.
cplx inner(const SampledFunction& f, const SampledFunction& g);
double max_abs(const SampledFunction& f);

SampledFunction operator+(const SampledFunction& a, const SampledFunction& b);
SampledFunction operator-(const SampledFunction& a, const SampledFunction& b);
SampledFunction operator*(cplx s, const SampledFunction& a);
// Pointwise product; samples where f vanishes stay zero even if the coefficient is infinite.
SampledFunction multiply(const std::vector<double>& coeff, const SampledFunction& f);
SampledFunction multiply(const std::vector<cplx>& coeff, const SampledFunction& f);

// Five smooth, effectively compactly supported test functions inside [lo, hi]
// (Gaussian envelopes whose tails are below 1e-10 at the window edges).
std::vector<SampledFunction> smooth_test_suite(const Grid& g);

} // namespace pdm
