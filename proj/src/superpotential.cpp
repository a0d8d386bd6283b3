#include "pdm/superpotential.hpp"

#include "pdm/errors.hpp"
#include "pdm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <vector>

namespace pdm {

void ClassSpec::validate() const {
    if (class_id < 1 || class_id > 3) throw ParameterError("class id must be 1, 2 or 3");
    for (double v : {a, b, c, d, k0, k1})
        if (!std::isfinite(v)) throw ParameterError("class parameters must be finite");
    if (class_id == 3 && a == 0.0 && b == 0.0)
        throw ParameterError("class 3 needs a^2 phi^2 + b^2 > 0, got a = b = 0");
}

double ClassSpec::rhs(double phi) const {
    switch (class_id) {
    case 1: return (a * phi + b) * phi + c;
    case 2: return a * phi * phi + b;
    default: return (c * phi + d) * std::sqrt(a * a * phi * phi + b * b);
    }
}

void to_json(nlohmann::json& j, const ClassSpec& s) {
    j = nlohmann::json{{"class", s.class_id}, {"a", s.a}, {"b", s.b}, {"c", s.c},
                       {"d", s.d},            {"k0", s.k0}, {"k1", s.k1}};
}

void from_json(const nlohmann::json& j, ClassSpec& s) {
    if (!j.is_object() || !j.contains("class")) throw ConfigError("class spec needs a 'class' key");
    for (const auto& [key, value] : j.items()) {
        if (key != "class" && key != "a" && key != "b" && key != "c" && key != "d" && key != "k0" && key != "k1")
            throw ConfigError("unknown class spec key '" + key + "'");
        if (!value.is_number()) throw ConfigError("class spec key '" + key + "' must be a number");
    }
    s.class_id = j.at("class").get<int>();
    s.a = j.value("a", 0.0);
    s.b = j.value("b", 0.0);
    s.c = j.value("c", 0.0);
    s.d = j.value("d", 0.0);
    s.k0 = j.value("k0", 1.0);
    s.k1 = j.value("k1", 0.0);
}

Superpotential Superpotential::linear(double k0, double k1) {
    Superpotential w;
    w.value = [k0, k1](double mu) { return k0 * mu + k1; };
    w.slope = [k0](double) { return k0; };
    w.antiderivative = [k0, k1](double mu) { return 0.5 * k0 * mu * mu + k1 * mu; };
    w.label = "linear";
    return w;
}

namespace {

void check_poles(const std::vector<double>& poles, const MuRange& range) {
    // poles within rounding of an endpoint are walls, not interior blow-ups
    const double slack = 1e-9 * std::max(1.0, range.hi - range.lo);
    for (double p : poles)
        if (p > range.lo + slack && p < range.hi - slack) throw SingularityError("phi has a pole inside the working range", p);
}

// Closed forms of dphi/dmu = a phi^2 + b phi + c; returns false when none applies.
bool riccati_closed(double a, double b, double c, const PhiInitial& init, const MuRange& range,
                    PhiFunction& out) {
    const double mu0 = init.mu0;
    const double phi0 = init.phi0;
    if (a == 0.0 && b == 0.0) {
        out.eval = [phi0, mu0, c](double mu) { return phi0 + c * (mu - mu0); };
        out.branch = "linear";
        return true;
    }
    if (a == 0.0) {
        const double fixed = -c / b;
        const double amp = phi0 - fixed;
        out.eval = [fixed, amp, b, mu0](double mu) { return fixed + amp * std::exp(b * (mu - mu0)); };
        out.branch = "exponential";
        return true;
    }
    const double shift = b / (2.0 * a);
    const double psi0 = phi0 + shift;
    const double disc = b * b - 4.0 * a * c;
    const double scale = std::max({b * b, std::abs(4.0 * a * c), 1e-300});
    if (std::abs(disc) <= 1e-14 * scale) {
        if (psi0 == 0.0) {
            out.eval = [shift](double) { return -shift; };
            out.branch = "fixed-point";
            return true;
        }
        const double pole = mu0 + 1.0 / (a * psi0);
        check_poles({pole}, range);
        out.eval = [a, pole, shift](double mu) { return -1.0 / (a * (mu - pole)) - shift; };
        out.branch = "rational";
        return true;
    }
    const double q = std::sqrt(std::abs(disc)) / (2.0 * std::abs(a));
    const double aq = a * q;
    if (disc > 0.0) {
        if (std::abs(psi0) == q) {
            out.eval = [psi0, shift](double) { return psi0 - shift; };
            out.branch = "fixed-point";
            return true;
        }
        if (std::abs(psi0) < q) {
            const double center = mu0 - std::atanh(-psi0 / q) / aq;
            out.eval = [q, aq, center, shift](double mu) { return -q * std::tanh(aq * (mu - center)) - shift; };
            out.branch = "tanh";
            return true;
        }
        const double pole = mu0 - std::atanh(-q / psi0) / aq;
        check_poles({pole}, range);
        out.eval = [q, aq, pole, shift](double mu) { return -q / std::tanh(aq * (mu - pole)) - shift; };
        out.branch = "coth";
        return true;
    }
    const double period = std::numbers::pi / std::abs(aq);
    if (std::isinf(psi0)) {
        // pole at mu0: write the solution as a cotangent so the pole stays exact
        const double k_lo = std::ceil((range.lo - mu0) / period);
        std::vector<double> poles;
        for (double k = k_lo; mu0 + k * period < range.hi; k += 1.0) poles.push_back(mu0 + k * period);
        check_poles(poles, range);
        out.eval = [q, aq, mu0, shift](double mu) { return -q / std::tan(aq * (mu - mu0)) - shift; };
        out.branch = "tan";
        return true;
    }
    const double center = mu0 - std::atan(psi0 / q) / aq;
    // poles where aq (mu - center) = pi/2 + k pi
    const double first = center + 0.5 * std::numbers::pi / aq;
    const double k_lo = std::ceil((range.lo - first) / period);
    std::vector<double> poles;
    for (double k = k_lo; first + k * period < range.hi; k += 1.0) poles.push_back(first + k * period);
    check_poles(poles, range);
    out.eval = [q, aq, center, shift](double mu) { return q * std::tan(aq * (mu - center)) - shift; };
    out.branch = "tan";
    return true;
}

bool class3_closed(const ClassSpec& s, const PhiInitial& init, PhiFunction& out) {
    if (s.c != 0.0) return false;
    const double mu0 = init.mu0;
    const double phi0 = init.phi0;
    const double aa = std::abs(s.a);
    const double bb = std::abs(s.b);
    if (aa == 0.0) {
        const double rate = s.d * bb;
        out.eval = [phi0, mu0, rate](double mu) { return phi0 + rate * (mu - mu0); };
        out.branch = "linear";
        return true;
    }
    if (bb == 0.0) return false;
    // phi = (|b|/|a|) sinh(|a| d (mu - C))
    const double ratio = bb / aa;
    const double rate = aa * s.d;
    if (rate == 0.0) {
        out.eval = [phi0](double) { return phi0; };
        out.branch = "fixed-point";
        return true;
    }
    const double center = mu0 - std::asinh(phi0 / ratio) / rate;
    out.eval = [ratio, rate, center](double mu) { return ratio * std::sinh(rate * (mu - center)); };
    out.branch = "sinh";
    return true;
}

struct Table {
    double mu_lo;
    double step;
    std::vector<double> phi;
    std::vector<double> dphi;
};

PhiFunction numeric_branch(const ClassSpec& spec, const PhiInitial& init, const MuRange& range, double step) {
    if (!(range.hi > range.lo)) throw ParameterError("numeric phi needs a non-empty range");
    if (!std::isfinite(init.phi0)) throw ParameterError("numeric phi needs a finite initial value");
    if (init.mu0 < range.lo || init.mu0 > range.hi)
        throw ParameterError("initial point lies outside the working range");
    const std::size_t left = static_cast<std::size_t>(std::ceil((init.mu0 - range.lo) / step));
    const std::size_t right = static_cast<std::size_t>(std::ceil((range.hi - init.mu0) / step));
    auto table = std::make_shared<Table>();
    table->step = step;
    table->mu_lo = init.mu0 - static_cast<double>(left) * step;
    table->phi.assign(left + right + 1, 0.0);
    table->phi[left] = init.phi0;

    auto rk4 = [&](double y, double hstep, double mu) {
        const double k1 = spec.rhs(y);
        const double k2 = spec.rhs(y + 0.5 * hstep * k1);
        const double k3 = spec.rhs(y + 0.5 * hstep * k2);
        const double k4 = spec.rhs(y + hstep * k3);
        const double next = y + hstep / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!std::isfinite(next) || std::abs(next) > 1e12) throw SingularityError("numeric phi blew up", mu);
        return next;
    };
    for (std::size_t i = left; i < left + right; ++i)
        table->phi[i + 1] = rk4(table->phi[i], step, table->mu_lo + static_cast<double>(i + 1) * step);
    for (std::size_t i = left; i > 0; --i)
        table->phi[i - 1] = rk4(table->phi[i], -step, table->mu_lo + static_cast<double>(i - 1) * step);
    table->dphi.resize(table->phi.size());
    for (std::size_t i = 0; i < table->phi.size(); ++i) table->dphi[i] = spec.rhs(table->phi[i]);

    PhiFunction out;
    out.eval = [table](double mu) {
        const double t = (mu - table->mu_lo) / table->step;
        const double last = static_cast<double>(table->phi.size() - 1);
        if (t < -1e-9 || t > last + 1e-9) throw DomainError("mu outside the tabulated numeric phi range");
        std::size_t i = static_cast<std::size_t>(std::clamp(std::floor(t), 0.0, last - 1.0));
        const double s = t - static_cast<double>(i);
        const double h = table->step;
        // cubic Hermite on (phi, dphi)
        const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
        const double h10 = s * (1 - s) * (1 - s);
        const double h01 = s * s * (3 - 2 * s);
        const double h11 = s * s * (s - 1);
        return h00 * table->phi[i] + h10 * h * table->dphi[i] + h01 * table->phi[i + 1] +
               h11 * h * table->dphi[i + 1];
    };
    out.branch = "numeric";
    return out;
}

} // namespace

PhiFunction solve_phi(const ClassSpec& spec, const PhiInitial& initial, const MuRange& range,
                      const SolveOptions& options) {
    spec.validate();
    PhiFunction out;
    bool closed = false;
    if (!options.force_numeric) {
        if (spec.class_id == 1) closed = riccati_closed(spec.a, spec.b, spec.c, initial, range, out);
        else if (spec.class_id == 2) closed = riccati_closed(spec.a, 0.0, spec.b, initial, range, out);
        else closed = class3_closed(spec, initial, out);
    }
    if (!closed) out = numeric_branch(spec, initial, range, options.step);
    out.spec = spec;
    out.range = range;
    // an initial pole cannot anchor antiderivatives
    out.mu_ref = std::isfinite(initial.phi0) ? initial.mu0 : 0.5 * (range.lo + range.hi);
    return out;
}

PhiFunction solve_phi_numeric_matched(const ClassSpec& spec, const PhiFunction& closed, double step) {
    const double mid = 0.5 * (closed.range.lo + closed.range.hi);
    SolveOptions opts;
    opts.force_numeric = true;
    opts.step = step;
    return solve_phi(spec, {mid, closed(mid)}, closed.range, opts);
}

Superpotential w_from_phi(const ClassSpec& spec, const PhiFunction& phi) {
    spec.validate();
    const double k0 = spec.k0;
    const double k1 = spec.k1;
    Superpotential w;
    if (spec.class_id == 2 || spec.class_id == 3) {
        // sample the working range for zeros of phi (class 2) or of the radicand (class 3)
        const MuRange r = phi.range;
        if (r.hi > r.lo) {
            const int samples = 1024;
            double prev = std::numeric_limits<double>::quiet_NaN();
            for (int i = 1; i < samples; ++i) {
                const double mu = r.lo + (r.hi - r.lo) * i / samples;
                const double p = phi(mu);
                if (!std::isfinite(p)) continue;
                if (spec.class_id == 2) {
                    if (p == 0.0 || (std::isfinite(prev) && prev * p < 0.0 && std::abs(prev) < 1e6 && std::abs(p) < 1e6))
                        throw SingularityError("class 2 superpotential divides by phi = 0", mu);
                } else if (!(spec.a * spec.a * p * p + spec.b * spec.b > 0.0)) {
                    throw SingularityError("class 3 radicand is not positive", mu);
                }
                prev = p;
            }
        }
    }
    switch (spec.class_id) {
    case 1:
        w.value = [phi, k0, k1](double mu) { return k0 * phi(mu) + k1; };
        w.slope = [phi, k0](double mu) { return k0 * phi.slope(mu); };
        break;
    case 2:
        w.value = [phi, k0, k1](double mu) {
            const double p = phi(mu);
            return k0 * p + k1 / p;
        };
        w.slope = [phi, k0, k1](double mu) {
            const double p = phi(mu);
            return (k0 - k1 / (p * p)) * phi.slope(mu);
        };
        break;
    default: {
        const double a2 = spec.a * spec.a;
        const double b2 = spec.b * spec.b;
        w.value = [phi, k0, k1, a2, b2](double mu) {
            const double p = phi(mu);
            return (k0 * p + k1) / std::sqrt(a2 * p * p + b2);
        };
        w.slope = [phi, k0, k1, a2, b2](double mu) {
            const double p = phi(mu);
            const double r = std::sqrt(a2 * p * p + b2);
            return (k0 * b2 - k1 * a2 * p) / (r * r * r) * phi.slope(mu);
        };
        break;
    }
    }
    const double ref = phi.mu_ref;
    auto value = w.value;
    w.antiderivative = [value, ref](double mu) { return simpson_adaptive(value, ref, mu, 1e-12, 1e-15).value; };
    w.label = "class " + std::to_string(spec.class_id) + " (" + phi.branch + ")";
    return w;
}

double ode_residual(const ClassSpec& spec, const PhiFunction& phi, const Grid& mu_grid) {
    const auto samples = SampledFunction::from_real(mu_grid, phi.eval);
    const auto slope = derivative(samples);
    double worst = 0.0;
    for (std::size_t i = 0; i < mu_grid.n(); ++i) {
        const double r = std::abs(slope.values[i].real() - spec.rhs(samples.values[i].real()));
        worst = std::max(worst, r);
    }
    return worst;
}

} // namespace pdm
