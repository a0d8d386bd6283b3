#pragma once

#include "pdm/eigen.hpp"
#include "pdm/grid.hpp"
#include "pdm/mass_profile.hpp"
#include "pdm/superpotential.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <string>

namespace pdm {

// omega = alpha + beta + 1 (Omega- = 1), Omega+ = omega + alpha + beta.
class SwansonSystem {
public:
    SwansonSystem(double alpha, double beta, MassProfile profile, Superpotential w);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double omega() const { return omega_; }
    double omega_plus() const { return omega_plus_; }
    const MassProfile& profile() const { return profile_; }
    const Superpotential& superpotential() const { return w_; }

    // omega^2 - 4 alpha beta < 0: the Hermitized potential is inverted.
    bool unbounded() const { return omega_ * omega_ - 4.0 * alpha_ * beta_ < 0.0; }
    std::optional<std::string> warning() const;

    double K(double x) const;
    double R(double x) const;
    double hermitized_potential(double x) const;

private:
    double alpha_, beta_, omega_, omega_plus_;
    MassProfile profile_;
    Superpotential w_;
};

enum class SimilarityKind { alpha_beta, kappa };

struct SimilarityMap {
    std::function<double(double)> log_rho;  // log rho(x)
    SimilarityKind kind;
    std::optional<double> f_kappa;

    double rho(double x) const { return std::exp(log_rho(x)); }
    double inverse(double x) const { return std::exp(-log_rho(x)); }
    std::vector<double> sample(const Grid& grid) const;
    std::vector<double> sample_inverse(const Grid& grid) const;
};

struct Metric {
    std::function<double(double)> log_zeta;

    double zeta(double x) const { return std::exp(log_zeta(x)); }
    std::vector<double> sample(const Grid& grid) const;
};

// rho = exp(-(alpha - beta) int W dmu)
SimilarityMap rho_alpha_beta(double alpha, double beta, const Superpotential& w, const MassProfile& profile);
SimilarityMap rho_alpha_beta(const SwansonSystem& sys);
// rho_kappa = exp(-f(kappa) int W dmu); throws ParameterError for kappa in {0, +-1}.
SimilarityMap rho_kappa(double kappa, const Superpotential& w, const MassProfile& profile);
// zeta = rho^2
Metric metric(const SwansonSystem& sys);

// -1/2 U^4 f'' + K f' + R f
SampledFunction swanson_apply(const SwansonSystem& sys, const SampledFunction& f);
// rho H rho^-1 g
SampledFunction hermitize_apply(const SwansonSystem& sys, const SampledFunction& g);

using Operator = std::function<SampledFunction(const SampledFunction&)>;
// max over pairs |<g2, A g1> - <A g2, g1>| / (|g1| |g2|)
double symmetry_defect(const Operator& op, const std::vector<SampledFunction>& testset);

double hermitize_check(const SwansonSystem& sys, const std::vector<SampledFunction>& testset);
// max over pairs |<g2, zeta H g1> - <H g2, zeta g1>| / (|g1| |g2|)
double pseudo_hermiticity_check(const SwansonSystem& sys, const std::vector<SampledFunction>& testset);

std::function<double(double)> hermitized_potential(const SwansonSystem& sys);

// Lowest k eigenvalues of -1/2 d/dx U^4 d/dx + V_eff; empty when the system is unbounded.
std::vector<double> hermitized_spectrum(const SwansonSystem& sys, const Grid& grid, int k);

// psi = rho^-1 chi
SampledFunction to_swanson_eigenfunction(const SimilarityMap& map, const SampledFunction& chi);

} // namespace pdm
