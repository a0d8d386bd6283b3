#pragma once

#include "pdm/grid.hpp"
#include "pdm/mass_profile.hpp"
#include "pdm/superpotential.hpp"

#include <functional>
#include <optional>

namespace pdm {

struct KappaReduction {
    double kappa;
    double p;
};

// kappa from (alpha, beta) when one of them vanishes; p = kappa + 1.
KappaReduction kappa_reduce(double alpha, double beta);

// Whether a sampled state must decay at the grid ends (full states) or is a
// local probe on a window that cuts through the state.
enum class TailPolicy { require_decay, local_probe };

// Coefficients of a factorized system sampled on a grid.
struct SystemSamples {
    std::vector<double> x, mu, u, u4, w, w_mod, F, v_tilde, v_mass, log_ground;
};

class FactorizedSystem {
public:
    // Throws ParameterError for kappa = -1. q is fixed by p q1 + q = 0.
    FactorizedSystem(MassProfile profile, Superpotential w, double kappa, double q1 = 0.0);

    const MassProfile& profile() const { return profile_; }
    const Superpotential& superpotential() const { return w_; }
    double kappa() const { return kappa_; }
    double p() const { return p_; }
    double q() const { return q_; }
    double q1() const { return q1_; }
    double delta() const { return 0.5 * p_; }

    double mu(double x) const { return profile_.mu(x); }
    double w_mod(double x) const;
    double structure(double x) const;
    double effective_potential(double x) const;
    double mass_potential(double x) const { return profile_.mass_potential(x); }
    // log of m^(1/4) exp(-p int W dmu) at x
    double log_ground(double x) const;

    SystemSamples sample(const Grid& grid) const;

    // (p^2/2) W^2 - (p/2) W_mu + p/2; vanishes identically at p = 0.
    static double potential_formula(double p, double w, double w_mu);

private:
    MassProfile profile_;
    Superpotential w_;
    double kappa_, p_, q_, q1_;
};

struct GroundState {
    SampledFunction psi0;
    double norm_constant;           // psi0 = raw / norm_constant
    std::optional<double> energy;   // set from the catalog when known
};

SampledFunction apply_annihilation(const FactorizedSystem& sys, const SampledFunction& f);
SampledFunction apply_creation(const FactorizedSystem& sys, const SampledFunction& f);
// (eta eta^dagger - eta^dagger eta) f
SampledFunction commutator_apply(const FactorizedSystem& sys, const SampledFunction& f);
std::function<double(double)> structure_function(const FactorizedSystem& sys);
std::function<double(double)> effective_potential(const FactorizedSystem& sys);
GroundState ground_state(const FactorizedSystem& sys, const Grid& grid,
                         TailPolicy policy = TailPolicy::require_decay);
SampledFunction hamiltonian_apply_factorized(const FactorizedSystem& sys, const SampledFunction& f);
SampledFunction hamiltonian_apply_direct(const FactorizedSystem& sys, const SampledFunction& f);

// Normalizes exp(log_modulus + i phase) to unit discrete L2 norm without
// overflow; returns the factor removed from the raw samples.
double normalize_log_samples(const std::vector<double>& log_modulus, const std::vector<double>& phase,
                             SampledFunction& out, TailPolicy policy, const char* what);

} // namespace pdm
