#include "pdm/mass_profile.hpp"

#include "pdm/errors.hpp"
#include "pdm/expression.hpp"
#include "pdm/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace pdm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

MuImage extrapolate_image(const MassProfile& p) {
    // Integrate outward over doubling intervals; a side is finite once the
    // increment over the last doubling is negligible.
    auto side = [&](double sign, double limit) {
        if (p.has_closed_mu() && std::isfinite(limit)) return p.mu(limit);
        auto root_m = [&p](double y) { return std::sqrt(p.mass(y)); };
        double x = p.anchor();
        double mu = 0.0;
        double step = 1.0;
        for (int k = 0; k <= 40; ++k) {
            double next = x + sign * step;
            const bool last = std::isfinite(limit) && sign * (next - limit) >= 0.0;
            if (last) next = limit;
            const double inc = sign * simpson_adaptive(root_m, std::min(x, next), std::max(x, next), 1e-10, 1e-15).value;
            mu += inc;
            x = next;
            step *= 2.0;
            if (last) return mu;
            if (std::abs(inc) < 1e-9 * std::max(1.0, std::abs(mu)) && k >= 4) return mu;
        }
        return std::isfinite(limit) ? p.mu(limit) : sign * kInf;
    };
    return {side(-1.0, p.x_lo()), side(1.0, p.x_hi())};
}

} // namespace

MassProfile::MassProfile(Definition def) : def_(std::move(def)) {
    if (!def_.m) throw ConfigError("mass profile '" + def_.id + "' has no mass function");
    if (!(def_.x_lo < def_.x_hi)) throw ConfigError("mass profile '" + def_.id + "' has an empty domain");
    if (def_.anchor < def_.x_lo || def_.anchor > def_.x_hi)
        throw ConfigError("mass profile '" + def_.id + "' anchor lies outside the domain");
    if (def_.image) image_cache_ = def_.image;
}

MassProfile MassProfile::constant() {
    Definition d;
    d.id = "constant";
    d.m = [](double) { return 1.0; };
    d.dm = [](double) { return 0.0; };
    d.d2m = [](double) { return 0.0; };
    d.mu_closed = [](double x) { return x; };
    d.mu_inverse = [](double mu) { return mu; };
    d.x_lo = -kInf;
    d.x_hi = kInf;
    d.anchor = 0.0;
    d.image = MuImage{-kInf, kInf};
    MassProfile p(std::move(d));
    p.constant_ = true;
    return p;
}

MassProfile MassProfile::cauchy_squared_inverse() {
    Definition d;
    d.id = "cauchy-squared-inverse";
    d.m = [](double x) {
        const double s = 1.0 + x * x;
        return 1.0 / (s * s);
    };
    d.dm = [](double x) {
        const double s = 1.0 + x * x;
        return -4.0 * x / (s * s * s);
    };
    d.d2m = [](double x) {
        const double s = 1.0 + x * x;
        return -4.0 / (s * s * s) + 24.0 * x * x / (s * s * s * s);
    };
    d.mu_closed = [](double x) { return std::atan(x); };
    d.mu_inverse = [](double mu) { return std::tan(mu); };
    d.x_lo = -kInf;
    d.x_hi = kInf;
    d.anchor = 0.0;
    d.image = MuImage{-std::numbers::pi / 2, std::numbers::pi / 2};
    return MassProfile(std::move(d));
}

MassProfile MassProfile::quartic_growth() {
    Definition d;
    d.id = "quartic-growth";
    d.m = [](double x) {
        const double s = 1.0 + x * x;
        return s * s;
    };
    d.dm = [](double x) { return 4.0 * x * (1.0 + x * x); };
    d.d2m = [](double x) { return 4.0 + 12.0 * x * x; };
    d.mu_closed = [](double x) { return x + x * x * x / 3.0; };
    d.x_lo = -kInf;
    d.x_hi = kInf;
    d.anchor = 0.0;
    d.image = MuImage{-kInf, kInf};
    return MassProfile(std::move(d));
}

MassProfile MassProfile::half_line_constant() {
    Definition d;
    d.id = "half-line-constant";
    d.m = [](double) { return 1.0; };
    d.dm = [](double) { return 0.0; };
    d.d2m = [](double) { return 0.0; };
    d.mu_closed = [](double x) { return x; };
    d.mu_inverse = [](double mu) { return mu; };
    d.x_lo = 0.0;
    d.x_hi = kInf;
    d.anchor = 0.0;
    d.image = MuImage{0.0, kInf};
    MassProfile p(std::move(d));
    p.constant_ = true;
    return p;
}

MassProfile MassProfile::from_expression(const std::string& expr, double x_lo, double x_hi, double anchor,
                                         const std::string& id) {
    const Expression m = Expression::parse(expr);
    const Expression dm = m.derivative();
    const Expression d2m = dm.derivative();
    Definition d;
    d.id = id;
    d.m = [m](double x) { return m(x); };
    d.dm = [dm](double x) { return dm(x); };
    d.d2m = [d2m](double x) { return d2m(x); };
    d.x_lo = x_lo;
    d.x_hi = x_hi;
    d.anchor = anchor;
    MassProfile p(std::move(d));
    if (!(p.def_.m(anchor) > 0.0))
        throw ConfigError("mass expression '" + expr + "' is not positive at the anchor");
    return p;
}

std::vector<std::string> MassProfile::bundled_ids() {
    return {"constant", "cauchy-squared-inverse", "quartic-growth", "half-line-constant"};
}

MassProfile MassProfile::by_id(const std::string& id) {
    if (id == "constant") return constant();
    if (id == "cauchy-squared-inverse") return cauchy_squared_inverse();
    if (id == "quartic-growth") return quartic_growth();
    if (id == "half-line-constant") return half_line_constant();
    throw ConfigError("unknown mass profile '" + id + "'");
}

bool MassProfile::is_constant() const { return constant_; }

void MassProfile::check_domain(double x) const {
    const double slack = 1e-12 * std::max(1.0, std::abs(x));
    if (!(x >= def_.x_lo - slack && x <= def_.x_hi + slack))
        throw DomainError("x=" + std::to_string(x) + " outside the domain of mass profile '" + def_.id + "'");
}

double MassProfile::mass(double x) const {
    check_domain(x);
    const double v = def_.m(x);
    if (!(v > 0.0)) throw DomainError("mass profile '" + def_.id + "' is not positive at x=" + std::to_string(x));
    return v;
}

double MassProfile::u(double x) const {
    if (constant_) {
        check_domain(x);
        return 1.0;
    }
    return std::pow(mass(x), -0.25);
}

double MassProfile::u_prime(double x) const {
    if (constant_) return 0.0;
    const double m = mass(x);
    return -0.25 * std::pow(m, -1.25) * def_.dm(x);
}

double MassProfile::u_second(double x) const {
    if (constant_) return 0.0;
    const double m = mass(x);
    const double dm = def_.dm(x);
    return 0.3125 * std::pow(m, -2.25) * dm * dm - 0.25 * std::pow(m, -1.25) * def_.d2m(x);
}

double MassProfile::mass_potential(double x) const {
    if (constant_) return 0.0;
    const double u0 = u(x);
    const double u1 = u_prime(x);
    const double u2 = u_second(x);
    return -u0 * u0 * u1 * u1 - 0.5 * u0 * u0 * u0 * u2;
}

double MassProfile::mu_quadrature(double from, double to) const {
    auto integrand = [this](double y) { return std::sqrt(def_.m(y)); };
    return simpson_adaptive(integrand, from, to, 1e-10, 1e-15).value;
}

double MassProfile::mu(double x) const {
    check_domain(x);
    if (def_.mu_closed) return def_.mu_closed(x);
    return mu_quadrature(def_.anchor, x);
}

std::vector<double> MassProfile::mu_samples(const std::vector<double>& xs) const {
    std::vector<double> out(xs.size());
    if (xs.empty()) return out;
    if (def_.mu_closed) {
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = mu(xs[i]);
        return out;
    }
    out[0] = mu(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        check_domain(xs[i]);
        out[i] = out[i - 1] + mu_quadrature(xs[i - 1], xs[i]);
    }
    return out;
}

MuImage MassProfile::image() const {
    if (image_cache_) return *image_cache_;
    return extrapolate_image(*this);
}

double MassProfile::x_of_mu(double target) const {
    if (def_.mu_closed && def_.mu_inverse) {
        const MuImage img = image();
        if (target < img.mu_lo || target > img.mu_hi)
            throw DomainError("mu=" + std::to_string(target) + " outside the image of profile '" + def_.id + "'");
        return def_.mu_inverse(target);
    }
    // bracket outward from the anchor, then bisect
    double lo = def_.anchor;
    double hi = def_.anchor;
    const double sign = target >= 0.0 ? 1.0 : -1.0;
    const double limit = sign > 0 ? def_.x_hi : def_.x_lo;
    double step = 1.0;
    for (int k = 0;; ++k) {
        double next = (sign > 0 ? hi : lo) + sign * step;
        if (std::isfinite(limit) && sign * (next - limit) > 0) next = limit;
        const double mu_next = mu(next);
        if (sign > 0) {
            if (mu_next >= target) { hi = next; break; }
            lo = next;
            hi = next;
        } else {
            if (mu_next <= target) { lo = next; break; }
            lo = next;
            hi = next;
        }
        if (next == limit || k > 60)
            throw DomainError("mu=" + std::to_string(target) + " outside the image of profile '" + def_.id + "'");
        step *= 2.0;
    }
    if (sign > 0 && lo == hi) lo = def_.anchor;
    if (sign < 0 && lo == hi) hi = def_.anchor;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (mu(mid) < target) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double u_of_x(const MassProfile& profile, double x) { return profile.u(x); }
double mu_of_x(const MassProfile& profile, double x) { return profile.mu(x); }
MuImage mu_image(const MassProfile& profile) { return profile.image(); }

} // namespace pdm
