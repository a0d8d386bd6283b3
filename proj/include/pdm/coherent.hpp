#pragma once

#include "pdm/factorization.hpp"

#include <optional>
#include <utility>

namespace pdm {

// (1/kappa, kappa - 1/kappa); throws ParameterError for kappa in {0, 1, -1}.
std::pair<double, double> gamma_f(double kappa);

// Coherent-state parameters with xi on the imaginary axis.
struct CoherentParams {
    double xi_im = 0.0;
    double kappa = 2.0;
    double gamma = 0.5;
    std::optional<double> f_kappa;

    // Full parameter set; kappa must avoid {0, 1, -1}, Re(xi) must be zero.
    static CoherentParams make(double kappa, cplx xi);
    // Hermitian states only: gamma = 1/kappa for any kappa != 0, f left unset
    // (f vanishes at kappa = +-1, so pseudo-Hermitian quantities are unavailable).
    static CoherentParams hermitian(double kappa, cplx xi);

    cplx xi() const { return {0.0, xi_im}; }
    cplx xi_kappa() const { return {0.0, gamma * xi_im}; }
    double w_bar_factor() const { return (kappa + 1.0) / kappa; }
    double f() const;  // throws when unset
};

struct DisplacementOperator {
    std::function<cplx(double)> phase_fn;  // x -> exp(sqrt2 xi_kappa W~(x))
};

DisplacementOperator make_displacement(const CoherentParams& params, const FactorizedSystem& sys);

// m^(1/4) exp(sqrt2 xi Wbar) exp(-kappa int Wbar dmu), Wbar = ((kappa+1)/kappa) W.
SampledFunction hcs_raw(const CoherentParams& params, const FactorizedSystem& sys, const Grid& grid);
// Same state written as exp(sqrt2 gamma xi W~) times the ground factor with explicit gamma.
SampledFunction hcs_raw_gamma_form(const CoherentParams& params, const FactorizedSystem& sys, const Grid& grid);
// m^(1/4) exp(sqrt2 xi Wbar) exp(-int Wbar dmu)
SampledFunction phcs_raw(const CoherentParams& params, const FactorizedSystem& sys, const Grid& grid);

// Exponents of the two ground factors at x.
double hcs_ground_exponent(const CoherentParams& params, const FactorizedSystem& sys, double x);
double phcs_ground_exponent(const CoherentParams& params, const FactorizedSystem& sys, double x);

void check_kappa_consistent(const CoherentParams& params, const FactorizedSystem& sys);

SampledFunction hcs_evaluate(const CoherentParams& params, const FactorizedSystem& sys, const Grid& grid,
                             TailPolicy policy = TailPolicy::require_decay);
SampledFunction phcs_evaluate(const CoherentParams& params, const FactorizedSystem& sys, const Grid& grid,
                              TailPolicy policy = TailPolicy::require_decay);

// max over the test set of |D^-1 eta (D f) - eta f - xi_kappa F f| / |f|
double displacement_identity_check(const CoherentParams& params, const FactorizedSystem& sys,
                                   const std::vector<SampledFunction>& testset);

struct ActionReport {
    double identity_residual;  // |eta psi - xi_kappa F psi| / |psi|
    cplx best_eigenvalue;      // least-squares constant eigenvalue
    double eigen_residual;     // |eta psi - best psi| / |psi|
};

ActionReport annihilation_action_check(const CoherentParams& params, const FactorizedSystem& sys,
                                       const Grid& grid, TailPolicy policy = TailPolicy::require_decay);

struct UncertaintyReport {
    double lhs;  // Var(W~) Var(Pi)
    double rhs;  // <F>^2 / 4
    double mean_w;
    double mean_pi;
    double mean_f;
    double var_w;
    double var_pi;
};

UncertaintyReport uncertainty_product(const CoherentParams& params, const FactorizedSystem& sys, const Grid& grid);

} // namespace pdm
