#pragma once

#include "pdm/grid.hpp"

#include <json.hpp>

#include <functional>
#include <string>

namespace pdm {

// One of the three superpotential families:
//   class 1: dphi/dmu = a phi^2 + b phi + c,             W = k0 phi + k1
//   class 2: dphi/dmu = a phi^2 + b,                     W = k0 phi + k1/phi
//   class 3: dphi/dmu = (c phi + d) sqrt(a^2 phi^2 + b^2), W = (k0 phi + k1)/sqrt(a^2 phi^2 + b^2)
struct ClassSpec {
    int class_id = 1;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double k0 = 1.0;
    double k1 = 0.0;

    void validate() const;
    double rhs(double phi) const;
};

void to_json(nlohmann::json& j, const ClassSpec& s);
void from_json(const nlohmann::json& j, ClassSpec& s);

struct MuRange {
    double lo;
    double hi;
};

// phi(mu0) = phi0; an infinite phi0 places a pole at mu0 (closed forms only).
struct PhiInitial {
    double mu0;
    double phi0;
};

struct PhiFunction {
    std::function<double(double)> eval;
    std::string branch;
    ClassSpec spec;
    MuRange range{0.0, 0.0};
    double mu_ref = 0.0;  // base point for antiderivatives

    double operator()(double mu) const { return eval(mu); }
    double slope(double mu) const { return spec.rhs(eval(mu)); }
};

// W as a function of mu, with its mu-derivative and an antiderivative.
struct Superpotential {
    std::function<double(double)> value;
    std::function<double(double)> slope;
    std::function<double(double)> antiderivative;
    std::string label;

    double operator()(double mu) const { return value(mu); }

    // W = k0 mu + k1 with closed antiderivative.
    static Superpotential linear(double k0, double k1);
};

struct SolveOptions {
    bool force_numeric = false;
    double step = 1e-3;  // RK4 step for the numeric branch
};

// Closed-form branch when one applies, otherwise RK4 in mu (branch "numeric").
// Throws SingularityError when phi has a pole strictly inside the range.
PhiFunction solve_phi(const ClassSpec& spec, const PhiInitial& initial, const MuRange& range,
                      const SolveOptions& options = {});
// Numeric branch with the initial value matched to the closed form at the range midpoint.
PhiFunction solve_phi_numeric_matched(const ClassSpec& spec, const PhiFunction& closed,
                                      double step = 1e-3);

// Antiderivative is integrated numerically from phi.mu_ref.
Superpotential w_from_phi(const ClassSpec& spec, const PhiFunction& phi);

// max |dphi/dmu - rhs(phi)| with the derivative stencil on mu_grid.
double ode_residual(const ClassSpec& spec, const PhiFunction& phi, const Grid& mu_grid);

} // namespace pdm
