#include "pdm/swanson.hpp"

#include "pdm/coherent.hpp"
#include "pdm/errors.hpp"

#include <cmath>

namespace pdm {

SwansonSystem::SwansonSystem(double alpha, double beta, MassProfile profile, Superpotential w)
    : alpha_(alpha), beta_(beta), omega_(alpha + beta + 1.0), omega_plus_(2.0 * (alpha + beta) + 1.0),
      profile_(std::move(profile)), w_(std::move(w)) {
    if (!std::isfinite(alpha) || !std::isfinite(beta)) throw ParameterError("alpha and beta must be finite");
    if (!w_.value || !w_.slope) throw ParameterError("superpotential needs value and slope");
}

std::optional<std::string> SwansonSystem::warning() const {
    if (!unbounded()) return std::nullopt;
    return "omega^2 - 4 alpha beta < 0: Hermitized potential is inverted, spectrum unbounded below";
}

double SwansonSystem::K(double x) const {
    const double u = profile_.u(x);
    const double w = w_.value(profile_.mu(x));
    return (alpha_ - beta_) * u * u * w - 2.0 * u * u * u * profile_.u_prime(x);
}

double SwansonSystem::R(double x) const {
    const double u = profile_.u(x);
    const double u1 = profile_.u_prime(x);
    const double u2 = profile_.u_second(x);
    const double mu = profile_.mu(x);
    const double w = w_.value(mu);
    const double wm = w_.slope(mu);
    const double d = alpha_ - beta_;
    return 0.5 * (omega_ * (1.0 - wm) + omega_plus_ * w * w + d * (2.0 * u * u1 * w + wm) -
                  u * u * (2.0 * u1 * u1 + u * u2));
}

double SwansonSystem::hermitized_potential(double x) const {
    const double mu = profile_.mu(x);
    const double w = w_.value(mu);
    const double wm = w_.slope(mu);
    return 0.5 * (omega_ * omega_ - 4.0 * alpha_ * beta_) * w * w - 0.5 * omega_ * wm + 0.5 * omega_ +
           profile_.mass_potential(x);
}

std::vector<double> SimilarityMap::sample(const Grid& grid) const {
    std::vector<double> out(grid.n());
    for (std::size_t i = 0; i < grid.n(); ++i) out[i] = rho(grid.x(i));
    return out;
}

std::vector<double> SimilarityMap::sample_inverse(const Grid& grid) const {
    std::vector<double> out(grid.n());
    for (std::size_t i = 0; i < grid.n(); ++i) out[i] = inverse(grid.x(i));
    return out;
}

std::vector<double> Metric::sample(const Grid& grid) const {
    std::vector<double> out(grid.n());
    for (std::size_t i = 0; i < grid.n(); ++i) out[i] = zeta(grid.x(i));
    return out;
}

namespace {

std::function<double(double)> scaled_antiderivative(double factor, const Superpotential& w, const MassProfile& profile) {
    if (!w.antiderivative) throw ParameterError("similarity map needs an antiderivative of W");
    auto anti = w.antiderivative;
    return [factor, anti, profile](double x) { return -factor * anti(profile.mu(x)); };
}

} // namespace

SimilarityMap rho_alpha_beta(double alpha, double beta, const Superpotential& w, const MassProfile& profile) {
    return {scaled_antiderivative(alpha - beta, w, profile), SimilarityKind::alpha_beta, std::nullopt};
}

SimilarityMap rho_alpha_beta(const SwansonSystem& sys) {
    return rho_alpha_beta(sys.alpha(), sys.beta(), sys.superpotential(), sys.profile());
}

SimilarityMap rho_kappa(double kappa, const Superpotential& w, const MassProfile& profile) {
    const double f = gamma_f(kappa).second;
    return {scaled_antiderivative(f, w, profile), SimilarityKind::kappa, f};
}

Metric metric(const SwansonSystem& sys) {
    return {scaled_antiderivative(2.0 * (sys.alpha() - sys.beta()), sys.superpotential(), sys.profile())};
}

SampledFunction swanson_apply(const SwansonSystem& sys, const SampledFunction& f) {
    const Grid& g = f.grid;
    std::vector<double> u4(g.n()), k(g.n()), r(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) {
        const double x = g.x(i);
        const double u = sys.profile().u(x);
        u4[i] = -0.5 * u * u * u * u;
        k[i] = sys.K(x);
        r[i] = sys.R(x);
    }
    const auto d1 = derivative(f);
    const auto d2 = derivative(d1);
    return multiply(u4, d2) + multiply(k, d1) + multiply(r, f);
}

SampledFunction hermitize_apply(const SwansonSystem& sys, const SampledFunction& g) {
    const auto rho = rho_alpha_beta(sys);
    const auto fwd = rho.sample(g.grid);
    const auto inv = rho.sample_inverse(g.grid);
    return multiply(fwd, swanson_apply(sys, multiply(inv, g)));
}

double symmetry_defect(const Operator& op, const std::vector<SampledFunction>& testset) {
    std::vector<SampledFunction> images;
    images.reserve(testset.size());
    for (const auto& g : testset) images.push_back(op(g));
    double worst = 0.0;
    for (std::size_t i = 0; i < testset.size(); ++i) {
        for (std::size_t j = 0; j < testset.size(); ++j) {
            const cplx lhs = inner(testset[j], images[i]);
            const cplx rhs = inner(images[j], testset[i]);
            const double scale = l2_norm(testset[i]) * l2_norm(testset[j]);
            worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
    }
    return worst;
}

double hermitize_check(const SwansonSystem& sys, const std::vector<SampledFunction>& testset) {
    return symmetry_defect([&sys](const SampledFunction& g) { return hermitize_apply(sys, g); }, testset);
}

double pseudo_hermiticity_check(const SwansonSystem& sys, const std::vector<SampledFunction>& testset) {
    if (testset.empty()) return 0.0;
    const auto zeta = metric(sys).sample(testset.front().grid);
    std::vector<SampledFunction> h_images;
    for (const auto& g : testset) h_images.push_back(swanson_apply(sys, g));
    double worst = 0.0;
    for (std::size_t i = 0; i < testset.size(); ++i) {
        for (std::size_t j = 0; j < testset.size(); ++j) {
            const cplx lhs = inner(testset[j], multiply(zeta, h_images[i]));
            const cplx rhs = inner(h_images[j], multiply(zeta, testset[i]));
            const double scale = l2_norm(testset[i]) * l2_norm(testset[j]);
            worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
    }
    return worst;
}

std::function<double(double)> hermitized_potential(const SwansonSystem& sys) {
    return [sys](double x) { return sys.hermitized_potential(x); };
}

std::vector<double> hermitized_spectrum(const SwansonSystem& sys, const Grid& grid, int k) {
    if (sys.unbounded()) return {};
    SampledFunction u4(grid), v(grid);
    for (std::size_t i = 0; i < grid.n(); ++i) {
        const double x = grid.x(i);
        const double u = sys.profile().u(x);
        u4.values[i] = u * u * u * u;
        v.values[i] = (i == 0 || i + 1 == grid.n()) ? 0.0 : sys.hermitized_potential(x);
    }
    const auto pairs = lowest_eigenpairs(build_divergence_hamiltonian(u4, v), k);
    std::vector<double> out;
    for (const auto& p : pairs) out.push_back(p.value);
    return out;
}

SampledFunction to_swanson_eigenfunction(const SimilarityMap& map, const SampledFunction& chi) {
    return multiply(map.sample_inverse(chi.grid), chi);
}

} // namespace pdm
