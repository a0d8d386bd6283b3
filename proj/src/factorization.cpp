#include "pdm/factorization.hpp"

#include "pdm/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace pdm {

KappaReduction kappa_reduce(double alpha, double beta) {
    if (alpha != 0.0 && beta != 0.0)
        throw UnsupportedReductionError("kappa reduction needs beta = 0 or alpha = 0");
    const double kappa = alpha != 0.0 ? alpha : beta;
    return {kappa, kappa + 1.0};
}

FactorizedSystem::FactorizedSystem(MassProfile profile, Superpotential w, double kappa, double q1)
    : profile_(std::move(profile)), w_(std::move(w)), kappa_(kappa), p_(kappa + 1.0), q1_(q1) {
    if (kappa == -1.0) throw ParameterError("kappa = -1 is excluded (the factorized potential vanishes)");
    if (!std::isfinite(kappa)) throw ParameterError("kappa must be finite");
    if (!w_.value || !w_.slope) throw ParameterError("superpotential needs value and slope");
    q_ = -p_ * q1_;
}

double FactorizedSystem::potential_formula(double p, double w, double w_mu) {
    return 0.5 * p * p * w * w - 0.5 * p * w_mu + 0.5 * p;
}

double FactorizedSystem::w_mod(double x) const { return p_ * w_.value(mu(x)); }

double FactorizedSystem::structure(double x) const { return p_ * w_.slope(mu(x)); }

double FactorizedSystem::effective_potential(double x) const {
    const double m = mu(x);
    return potential_formula(p_, w_.value(m), w_.slope(m));
}

double FactorizedSystem::log_ground(double x) const {
    if (!w_.antiderivative) throw ParameterError("ground state needs an antiderivative of W");
    return 0.25 * std::log(profile_.mass(x)) - p_ * w_.antiderivative(mu(x));
}

SystemSamples FactorizedSystem::sample(const Grid& grid) const {
    SystemSamples s;
    s.x = grid.points();
    s.mu = profile_.mu_samples(s.x);
    const std::size_t n = grid.n();
    s.u.resize(n);
    s.u4.resize(n);
    s.w.resize(n);
    s.w_mod.resize(n);
    s.F.resize(n);
    s.v_tilde.resize(n);
    s.v_mass.resize(n);
    s.log_ground.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = s.x[i];
        const double m = s.mu[i];
        const double u = profile_.u(x);
        const double w = w_.value(m);
        const double wm = w_.slope(m);
        s.u[i] = u;
        s.u4[i] = u * u * u * u;
        s.w[i] = w;
        s.w_mod[i] = p_ * w;
        s.F[i] = p_ * wm;
        s.v_tilde[i] = potential_formula(p_, w, wm);
        s.v_mass[i] = profile_.mass_potential(x);
        s.log_ground[i] = w_.antiderivative
                              ? 0.25 * std::log(profile_.mass(x)) - p_ * w_.antiderivative(m)
                              : std::numeric_limits<double>::quiet_NaN();
    }
    return s;
}

namespace {

// (1/sqrt2)(sign U d/dx U f + W~ f)
SampledFunction ladder(const SystemSamples& s, const SampledFunction& f, double sign) {
    const auto uf = multiply(s.u, f);
    const auto duf = derivative(uf);
    SampledFunction out(f.grid);
    const auto wf = multiply(s.w_mod, f);
    for (std::size_t i = 0; i < f.size(); ++i)
        out.values[i] = (sign * s.u[i] * duf.values[i] + wf.values[i]) / std::numbers::sqrt2;
    return out;
}

} // namespace

SampledFunction apply_annihilation(const FactorizedSystem& sys, const SampledFunction& f) {
    return ladder(sys.sample(f.grid), f, 1.0);
}

SampledFunction apply_creation(const FactorizedSystem& sys, const SampledFunction& f) {
    return ladder(sys.sample(f.grid), f, -1.0);
}

SampledFunction commutator_apply(const FactorizedSystem& sys, const SampledFunction& f) {
    const auto s = sys.sample(f.grid);
    const auto ad = ladder(s, ladder(s, f, -1.0), 1.0);
    const auto da = ladder(s, ladder(s, f, 1.0), -1.0);
    return ad - da;
}

std::function<double(double)> structure_function(const FactorizedSystem& sys) {
    return [sys](double x) { return sys.structure(x); };
}

std::function<double(double)> effective_potential(const FactorizedSystem& sys) {
    return [sys](double x) { return sys.effective_potential(x); };
}

double normalize_log_samples(const std::vector<double>& log_modulus, const std::vector<double>& phase,
                             SampledFunction& out, TailPolicy policy, const char* what) {
    double peak = -std::numeric_limits<double>::infinity();
    for (double v : log_modulus)
        if (!std::isnan(v)) peak = std::max(peak, v);
    if (!std::isfinite(peak)) throw NormalizabilityError(std::string(what) + " has no finite samples");
    for (std::size_t i = 0; i < log_modulus.size(); ++i) {
        const double lm = log_modulus[i];
        if (std::isnan(lm)) throw NumericError(std::string(what) + " has a NaN sample at index " + std::to_string(i));
        const double mod = std::exp(lm - peak);
        out.values[i] = std::polar(mod, phase.empty() ? 0.0 : phase[i]);
    }
    if (policy == TailPolicy::require_decay) {
        const double left = std::abs(out.values.front());
        const double right = std::abs(out.values.back());
        if (left > 1e-6 || right > 1e-6)
            throw NormalizabilityError(std::string(what) +
                                       " does not decay at the grid ends (boundary/peak = " +
                                       std::to_string(std::max(left, right)) + ")");
    }
    const double nrm = l2_norm(out);
    for (auto& z : out.values) z /= nrm;
    // raw = exp(peak) * nrm * normalized
    return std::exp(peak) * nrm;
}

GroundState ground_state(const FactorizedSystem& sys, const Grid& grid, TailPolicy policy) {
    const auto s = sys.sample(grid);
    SampledFunction psi(grid);
    const double norm = normalize_log_samples(s.log_ground, {}, psi, policy, "ground state");
    return {std::move(psi), norm, std::nullopt};
}

SampledFunction hamiltonian_apply_factorized(const FactorizedSystem& sys, const SampledFunction& f) {
    const auto s = sys.sample(f.grid);
    const auto out = ladder(s, ladder(s, f, 1.0), -1.0);
    return out + cplx(sys.delta()) * f;
}

SampledFunction hamiltonian_apply_direct(const FactorizedSystem& sys, const SampledFunction& f) {
    const auto s = sys.sample(f.grid);
    const auto flux = multiply(s.u4, derivative(f));
    const auto kinetic = cplx(-0.5) * derivative(flux);
    std::vector<double> v(s.v_tilde.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.v_tilde[i] + s.v_mass[i];
    return kinetic + multiply(v, f);
}

} // namespace pdm
