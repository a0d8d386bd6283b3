#include "pdm/coherent.hpp"

#include "pdm/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace pdm {

std::pair<double, double> gamma_f(double kappa) {
    if (kappa == 0.0 || kappa == 1.0 || kappa == -1.0)
        throw ParameterError("invalid kappa=" + std::to_string(kappa) +
                             ": gamma = 1/κ and f = κ - 1/κ are defined for κ≠0,±1");
    return {1.0 / kappa, kappa - 1.0 / kappa};
}

namespace {

void check_xi(cplx xi) {
    if (xi.real() != 0.0)
        throw ParameterError("xi must be purely imaginary (Re xi = " + std::to_string(xi.real()) + ")");
    if (!std::isfinite(xi.imag())) throw ParameterError("xi must be finite");
}

} // namespace

CoherentParams CoherentParams::make(double kappa, cplx xi) {
    check_xi(xi);
    const auto [g, f] = gamma_f(kappa);
    CoherentParams p;
    p.xi_im = xi.imag();
    p.kappa = kappa;
    p.gamma = g;
    p.f_kappa = f;
    return p;
}

CoherentParams CoherentParams::hermitian(double kappa, cplx xi) {
    check_xi(xi);
    if (kappa == 0.0 || !std::isfinite(kappa)) throw ParameterError("gamma(kappa) = 1/kappa needs kappa != 0");
    CoherentParams p;
    p.xi_im = xi.imag();
    p.kappa = kappa;
    p.gamma = 1.0 / kappa;
    if (kappa != 1.0 && kappa != -1.0) p.f_kappa = kappa - 1.0 / kappa;
    return p;
}

double CoherentParams::f() const {
    if (!f_kappa) throw ParameterError("f(κ) = κ - 1/κ is defined for κ≠0,±1");
    return *f_kappa;
}

void check_kappa_consistent(const CoherentParams& params, const FactorizedSystem& sys) {
    if (params.kappa != sys.kappa())
        throw ParameterError("coherent parameters and system disagree on kappa");
}

DisplacementOperator make_displacement(const CoherentParams& params, const FactorizedSystem& sys) {
    const cplx xk = params.xi_kappa();
    return {[xk, sys](double x) { return std::exp(std::numbers::sqrt2 * xk * sys.w_mod(x)); }};
}

namespace {

struct LogSamples {
    std::vector<double> log_mod;
    std::vector<double> phase;
};

// which: 0 = hcs (bar form), 1 = hcs (gamma form), 2 = phcs
LogSamples coherent_logs(const CoherentParams& params, const FactorizedSystem& sys, const Grid& grid, int which) {
    check_kappa_consistent(params, sys);
    const auto xs = grid.points();
    const auto mus = sys.profile().mu_samples(xs);
    const auto& w = sys.superpotential();
    if (!w.antiderivative) throw ParameterError("coherent states need an antiderivative of W");
    const double kappa = params.kappa;
    const double bar = params.w_bar_factor();
    LogSamples out;
    out.log_mod.resize(xs.size());
    out.phase.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double lm = 0.25 * std::log(sys.profile().mass(xs[i]));
        const double a = w.antiderivative(mus[i]);
        const double wv = w.value(mus[i]);
        switch (which) {
        case 0:
            out.log_mod[i] = lm - kappa * (bar * a);
            out.phase[i] = std::numbers::sqrt2 * params.xi_im * (bar * wv);
            break;
        case 1:
            out.log_mod[i] = lm - sys.p() * a;
            out.phase[i] = std::numbers::sqrt2 * (params.gamma * params.xi_im) * (sys.p() * wv);
            break;
        default:
            out.log_mod[i] = lm - bar * a;
            out.phase[i] = std::numbers::sqrt2 * params.xi_im * (bar * wv);
            break;
        }
        // walls: the modulus vanishes, the phase is irrelevant
        if (out.log_mod[i] == -std::numeric_limits<double>::infinity()) out.phase[i] = 0.0;
    }
    return out;
}

SampledFunction raw_from_logs(const LogSamples& s, const Grid& grid) {
    SampledFunction out(grid);
    for (std::size_t i = 0; i < s.log_mod.size(); ++i) out.values[i] = std::polar(std::exp(s.log_mod[i]), s.phase[i]);
    return out;
}

} // namespace

SampledFunction hcs_raw(const CoherentParams& params, const FactorizedSystem& sys, const Grid& grid) {
    return raw_from_logs(coherent_logs(params, sys, grid, 0), grid);
}

SampledFunction hcs_raw_gamma_form(const CoherentParams& params, const FactorizedSystem& sys, const Grid& grid) {
    return raw_from_logs(coherent_logs(params, sys, grid, 1), grid);
}

SampledFunction phcs_raw(const CoherentParams& params, const FactorizedSystem& sys, const Grid& grid) {
    return raw_from_logs(coherent_logs(params, sys, grid, 2), grid);
}

double hcs_ground_exponent(const CoherentParams& params, const FactorizedSystem& sys, double x) {
    return -params.kappa * (params.w_bar_factor() * sys.superpotential().antiderivative(sys.mu(x)));
}

double phcs_ground_exponent(const CoherentParams& params, const FactorizedSystem& sys, double x) {
    return -(params.w_bar_factor() * sys.superpotential().antiderivative(sys.mu(x)));
}

SampledFunction hcs_evaluate(const CoherentParams& params, const FactorizedSystem& sys, const Grid& grid,
                             TailPolicy policy) {
    const auto logs = coherent_logs(params, sys, grid, 0);
    SampledFunction out(grid);
    normalize_log_samples(logs.log_mod, logs.phase, out, policy, "coherent state");
    return out;
}

SampledFunction phcs_evaluate(const CoherentParams& params, const FactorizedSystem& sys, const Grid& grid,
                              TailPolicy policy) {
    params.f();
    const auto logs = coherent_logs(params, sys, grid, 2);
    SampledFunction out(grid);
    normalize_log_samples(logs.log_mod, logs.phase, out, policy, "pseudo-Hermitian coherent state");
    return out;
}

double displacement_identity_check(const CoherentParams& params, const FactorizedSystem& sys,
                                   const std::vector<SampledFunction>& testset) {
    check_kappa_consistent(params, sys);
    double worst = 0.0;
    const cplx xk = params.xi_kappa();
    for (const auto& f : testset) {
        const auto s = sys.sample(f.grid);
        std::vector<cplx> phase(f.size()), inverse(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            phase[i] = std::exp(std::numbers::sqrt2 * xk * s.w_mod[i]);
            inverse[i] = std::conj(phase[i]);
        }
        const auto lhs = multiply(inverse, apply_annihilation(sys, multiply(phase, f)));
        const auto rhs = apply_annihilation(sys, f) + multiply(s.F, xk * f);
        const double nf = l2_norm(f);
        if (nf == 0.0) continue;
        worst = std::max(worst, l2_norm(lhs - rhs) / nf);
    }
    return worst;
}

ActionReport annihilation_action_check(const CoherentParams& params, const FactorizedSystem& sys,
                                       const Grid& grid, TailPolicy policy) {
    const auto psi = hcs_evaluate(params, sys, grid, policy);
    const auto s = sys.sample(grid);
    const auto eta_psi = apply_annihilation(sys, psi);
    const cplx xk = params.xi_kappa();
    const double npsi = l2_norm(psi);
    const auto identity = eta_psi - multiply(s.F, xk * psi);

    cplx num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        num += std::conj(psi.values[i]) * eta_psi.values[i];
        den += std::norm(psi.values[i]);
    }
    const cplx best = num / den;
    const auto eig = eta_psi - best * psi;
    return {l2_norm(identity) / npsi, best, l2_norm(eig) / npsi};
}

UncertaintyReport uncertainty_product(const CoherentParams& params, const FactorizedSystem& sys, const Grid& grid) {
    const auto psi = hcs_evaluate(params, sys, grid);
    const auto s = sys.sample(grid);
    SampledFunction density(grid);
    for (std::size_t i = 0; i < psi.size(); ++i) density.values[i] = std::norm(psi.values[i]);
    const double mass = integrate(density).real();
    auto expect = [&](const std::vector<double>& coeff) { return integrate(multiply(coeff, density)).real() / mass; };

    std::vector<double> w2(s.w_mod.size());
    for (std::size_t i = 0; i < w2.size(); ++i) w2[i] = s.w_mod[i] * s.w_mod[i];
    const double mean_w = expect(s.w_mod);
    const double var_w = expect(w2) - mean_w * mean_w;
    const double mean_f = expect(s.F);

    // Pi psi = -i U d/dx (U psi)
    const auto upsi = multiply(s.u, psi);
    const auto pi_psi = cplx(0.0, -1.0) * multiply(s.u, derivative(upsi));
    const double mean_pi = inner(psi, pi_psi).real() / mass;
    const double mean_pi2 = inner(pi_psi, pi_psi).real() / mass;
    const double var_pi = mean_pi2 - mean_pi * mean_pi;

    UncertaintyReport r;
    r.lhs = var_w * var_pi;
    r.rhs = 0.25 * mean_f * mean_f;
    r.mean_w = mean_w;
    r.mean_pi = mean_pi;
    r.mean_f = mean_f;
    r.var_w = var_w;
    r.var_pi = var_pi;
    return r;
}

} // namespace pdm
