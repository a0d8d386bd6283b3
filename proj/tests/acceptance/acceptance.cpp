// Acceptance suite: one line per criterion, exit status 0 iff every selected criterion passes.
//   acceptance                 run everything
//   acceptance --criterion 5   run criterion 5 (all parts)
//   acceptance --criterion 5.2 run one part

#include "pdm/catalog.hpp"
#include "pdm/coherent.hpp"
#include "pdm/errors.hpp"
#include "pdm/factorization.hpp"
#include "pdm/swanson.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace pdm;

namespace {

// Constant of every "<= C h^2" bound, and the accepted window on the measured order.
constexpr double kC = 50.0;
constexpr double kOrderLo = 1.8;
constexpr double kOrderHi = 2.2;
const std::vector<std::size_t> kRefinement = {1025, 2049, 4097};

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    std::function<Outcome()> run;
};

std::string fmt(double v, int prec = 4) {
    std::ostringstream s;
    s.precision(prec);
    s << v;
    return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Least-squares slope of log(err) against log(h) with h ~ 1/(n-1).
double order_of(const std::vector<std::size_t>& ns, const std::vector<double>& errs) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double x = std::log(1.0 / static_cast<double>(ns[i] - 1));
        const double y = std::log(errs[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

bool order_ok(double p) { return p >= kOrderLo && p <= kOrderHi; }

EntryParams canonical(const std::string& name) { return registry_info(name).canonical; }

EntryParams with_kappa(const std::string& name, double kappa) {
    EntryParams p = canonical(name);
    p.kappa = kappa;
    if (name == "hulthen") p.k0 = 1.0 / (kappa + 1.0);
    return p;
}

bool on_wall(const CatalogEntry& e, double mu) {
    const double tol = 1e-12 * std::max(1.0, e.mu_hi - e.mu_lo);
    return (e.wall_lo && std::abs(mu - e.natural_lo) <= tol) || (e.wall_hi && std::abs(mu - e.natural_hi) <= tol);
}

TailPolicy policy_for(const Grid& probe, const Grid& full) {
    return probe == full ? TailPolicy::require_decay : TailPolicy::local_probe;
}

double annihilation_residual(const Instance& inst, std::size_t n) {
    const Grid full = inst.canonical_grid(n);
    const Grid probe = inst.probe_grid(n);
    const auto gs = ground_state(inst.system, probe, policy_for(probe, full));
    return l2_norm(apply_annihilation(inst.system, gs.psi0)) / l2_norm(gs.psi0);
}

// ------------------------------------------------------------------ criteria

Outcome criterion1() {
    bool pass = true;
    double worst = 0.0, slowest = 0.0;
    std::string worst_entry, failures;
    for (const auto& name : catalog_names()) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto inst = instantiate(name, canonical(name), MassProfile::constant());
        const Grid grid = inst.canonical_grid(4097);
        const auto s = inst.system.sample(grid);
        std::vector<double> diff;
        for (std::size_t i = 0; i < grid.n(); ++i) {
            if (on_wall(inst.entry, s.mu[i])) continue;
            diff.push_back(s.v_tilde[i] - inst.entry.v_closed(s.mu[i]));
        }
        double mean = 0.0;
        for (double d : diff) mean += d;
        mean /= static_cast<double>(diff.size());
        double dev = 0.0;
        for (double d : diff) dev = std::max(dev, std::abs(d - mean));
        const double t = seconds_since(t0);
        slowest = std::max(slowest, t);
        if (dev > worst) {
            worst = dev;
            worst_entry = name;
        }
        if (!(dev <= 1e-9) || t > 1.0) {
            pass = false;
            failures += " " + name + "(dev " + fmt(dev) + ", " + fmt(t) + " s)";
        }
    }
    return {pass, "max |V~ - V_closed - C*| = " + fmt(worst) + " (" + worst_entry + ", tol 1e-9), slowest entry " +
                      fmt(slowest, 3) + " s (limit 1 s)" + (failures.empty() ? "" : "; failing:" + failures)};
}

Outcome criterion2() {
    bool pass = true;
    double worst = 0.0, order_min = 1e9, order_max = -1e9;
    std::string failures;
    for (const auto& name : catalog_names()) {
        const auto inst = instantiate(name, canonical(name), MassProfile::constant());
        std::vector<double> errs;
        for (std::size_t n : kRefinement) errs.push_back(annihilation_residual(inst, n));
        const double p = order_of(kRefinement, errs);
        worst = std::max(worst, errs.back());
        order_min = std::min(order_min, p);
        order_max = std::max(order_max, p);
        if (!(errs.back() <= 5e-5) || !order_ok(p)) {
            pass = false;
            failures += " " + name + "(res " + fmt(errs.back()) + ", order " + fmt(p, 3) + ")";
        }
    }
    return {pass, "max |eta psi0|/|psi0| at n=4097 = " + fmt(worst) + " (tol 5e-5), orders in [" + fmt(order_min, 3) +
                      ", " + fmt(order_max, 3) + "] (accept 2.0 +- 0.2)" +
                      (failures.empty() ? "" : "; failing:" + failures)};
}

Outcome criterion3() {
    struct Case {
        std::string name;
        double x_lo, x_hi, expected, tol;
    };
    const std::vector<Case> cases = {
        {"shifted-ho", -8.0, 8.0, 1.0, 1e-4},
        {"morse", -3.0, 12.0, -2.0, 5e-3},
        {"poschl-teller", -12.0, 12.0, -2.0, 5e-3},
        {"coulomb", 0.0, 40.0, -4.5, 1e-2},
    };
    bool pass = true;
    std::string detail;
    for (const auto& c : cases) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto inst = instantiate(c.name, canonical(c.name), MassProfile::constant());
        const double lowest = closed_potential_spectrum(inst.entry, inst.system, Grid(c.x_lo, c.x_hi, 4097), 1).front();
        const double t = seconds_since(t0);
        const bool ok = std::abs(lowest - c.expected) <= c.tol && t <= 2.0 &&
                        std::abs(inst.entry.eps0 - c.expected) <= 1e-12;
        pass = pass && ok;
        detail += (detail.empty() ? "" : "; ") + c.name + " " + fmt(lowest, 8) + " vs " + fmt(c.expected) + " +- " +
                  fmt(c.tol, 2) + " (" + fmt(t, 2) + " s)" + (ok ? "" : " FAIL");
    }
    return {pass, detail};
}

Outcome criterion4() {
    const FactorizedSystem sys(MassProfile::quartic_growth(), Superpotential::linear(1.0, 0.0), 1.0);
    std::vector<double> ann, ham, ham_ratio;
    for (std::size_t n : kRefinement) {
        const Grid grid(-2.5, 2.5, n);
        const auto gs = ground_state(sys, grid);
        ann.push_back(l2_norm(apply_annihilation(sys, gs.psi0)) / l2_norm(gs.psi0));
        double worst = 0.0;
        for (const auto& f : smooth_test_suite(grid))
            worst = std::max(worst, l2_norm(hamiltonian_apply_factorized(sys, f) - hamiltonian_apply_direct(sys, f)) /
                                        l2_norm(f));
        ham.push_back(worst);
        ham_ratio.push_back(worst / (grid.h() * grid.h()));
    }
    const double p_ann = order_of(kRefinement, ann);
    const double p_ham = order_of(kRefinement, ham);
    const double h = Grid(-2.5, 2.5, 4097).h();
    const bool pass = ann.back() <= 5e-5 && ann.back() <= kC * h * h && order_ok(p_ann) && ham.back() <= kC * h * h &&
                      order_ok(p_ham);
    return {pass, "m=(1+x^2)^2 on [-2.5,2.5]: |eta psi0|/|psi0| = " + fmt(ann.back()) + " (order " + fmt(p_ann, 3) +
                      "), |H_fact - H_direct| = " + fmt(ham.back()) + " = " + fmt(ham_ratio.back(), 3) +
                      " h^2 (order " + fmt(p_ham, 3) + "), bound C h^2 = " + fmt(kC * h * h)};
}

SwansonSystem criterion5_system() {
    return SwansonSystem(0.3, 0.1, MassProfile::constant(), Superpotential::linear(1.0, 0.0));
}

Outcome criterion5_symmetry() {
    const auto sys = criterion5_system();
    std::vector<double> errs;
    for (std::size_t n : kRefinement) errs.push_back(hermitize_check(sys, smooth_test_suite(Grid(-8.0, 8.0, n))));
    const double h = Grid(-8.0, 8.0, 4097).h();
    const double p = order_of(kRefinement, errs);
    return {errs.back() <= kC * h * h, "symmetry defect of rho H rho^-1 = " + fmt(errs.back()) + " <= C h^2 = " +
                                           fmt(kC * h * h) + " (order " + fmt(p, 3) + ")"};
}

Outcome criterion5_eigenvalue() {
    const auto sys = criterion5_system();
    const double expected = 0.7 + std::sqrt(1.84) / 2.0;
    const auto eig = hermitized_spectrum(sys, Grid(-8.0, 8.0, 4097), 1);
    const double lowest = eig.empty() ? std::nan("") : eig.front();
    return {std::abs(lowest - expected) <= 1e-3, "lowest eigenvalue " + fmt(lowest, 8) + " vs expected " +
                                                     fmt(expected, 8) + " +- 1e-3 (ω=1.4, V_eff = 0.92 x^2)"};
}

Outcome criterion5_metric() {
    const auto sys = criterion5_system();
    const Grid grid(-8.0, 8.0, 4097);
    const auto zeta = metric(sys).sample(grid);
    double zmin = zeta.front();
    for (double z : zeta) zmin = std::min(zmin, z);
    return {zmin > 0.0, "min zeta over " + std::to_string(grid.n()) + " grid points = " + fmt(zmin)};
}

Outcome criterion6() {
    bool pass = true;
    std::string detail;
    const auto params = CoherentParams::make(2.0, cplx(0.0, 0.3));
    for (const std::string name : {"shifted-ho", "morse"}) {
        const auto inst = instantiate(name, with_kappa(name, 2.0), MassProfile::constant());
        std::vector<double> errs;
        for (std::size_t n : kRefinement)
            errs.push_back(displacement_identity_check(params, inst.system, smooth_test_suite(inst.canonical_grid(n))));
        const double h = inst.canonical_grid(4097).h();
        const double p = order_of(kRefinement, errs);
        const bool ok = errs.back() <= kC * h * h && order_ok(p);
        pass = pass && ok;
        detail += (detail.empty() ? "" : "; ") + name + " residual " + fmt(errs.back()) + " = " +
                  fmt(errs.back() / (h * h), 3) + " h^2 (order " + fmt(p, 3) + ")" + (ok ? "" : " FAIL");
    }
    return {pass, detail + "; bound C h^2 with C = " + fmt(kC)};
}

Outcome criterion7() {
    bool pass = true;
    double worst = 0.0, worst_mod = 0.0;
    std::string failures;
    const auto params = CoherentParams::make(2.0, cplx(0.0, 0.3));
    for (const auto& name : catalog_names()) {
        const auto inst = instantiate(name, with_kappa(name, 2.0), MassProfile::constant());
        const Grid full = inst.canonical_grid(4097);
        const Grid probe = inst.probe_grid(4097);
        const auto rep = annihilation_action_check(params, inst.system, probe, policy_for(probe, full));
        const auto psi = hcs_evaluate(params, inst.system, full);
        const auto gs = ground_state(inst.system, full);
        double mod = 0.0;
        for (std::size_t i = 0; i < full.n(); ++i)
            mod = std::max(mod, std::abs(std::abs(psi.values[i]) - std::abs(gs.psi0.values[i])));
        worst = std::max(worst, rep.identity_residual);
        worst_mod = std::max(worst_mod, mod);
        if (!(rep.identity_residual <= 5e-5) || !(mod <= 1e-12)) {
            pass = false;
            failures += " " + name + "(res " + fmt(rep.identity_residual) + ", mod " + fmt(mod) + ")";
        }
    }
    return {pass, "max |eta psi - xi_k F psi|/|psi| = " + fmt(worst) + " (tol 5e-5), max ||psi_xi| - |psi0|| = " +
                      fmt(worst_mod) + " (tol 1e-12)" + (failures.empty() ? "" : "; failing:" + failures)};
}

Outcome criterion8() {
    const auto inst = instantiate("shifted-ho", canonical("shifted-ho"), MassProfile::constant());
    const auto params = CoherentParams::hermitian(1.0, cplx(0.0, 0.2));
    const auto u = uncertainty_product(params, inst.system, Grid(-6.0, 6.0, 32769));
    const double rel = std::abs(u.lhs - u.rhs) / u.rhs;
    bool pass = rel <= 1e-6;
    double worst = 0.0;
    std::string worst_entry;
    for (const auto& name : catalog_names()) {
        const auto e = instantiate(name, canonical(name), MassProfile::constant());
        const Grid grid = e.canonical_grid(4097);
        const auto gs = ground_state(e.system, grid);
        const auto s = e.system.sample(grid);
        const double moment = std::abs(inner(gs.psi0, multiply(s.w_mod, gs.psi0)));
        if (moment > worst) {
            worst = moment;
            worst_entry = name;
        }
    }
    pass = pass && worst <= 1e-6;
    return {pass, "shifted-ho: |Var W~ Var Pi - <F>^2/4| / (<F>^2/4) = " + fmt(rel) + " (tol 1e-6, lhs " +
                      fmt(u.lhs, 12) + ", rhs " + fmt(u.rhs, 12) + "); max |<W~>| over entries = " + fmt(worst) +
                      " (" + worst_entry + ", tol 1e-6)"};
}

Outcome criterion9_rho_kappa() {
    const auto profile = MassProfile::constant();
    double worst = 0.0;
    for (const std::string name : {"shifted-ho", "morse", "poschl-teller", "scarf"}) {
        const auto inst = instantiate(name, with_kappa(name, 2.0), profile);
        const Grid grid = inst.canonical_grid(4097);
        const auto& w = inst.system.superpotential();
        for (double k : {2.0, 3.0, 0.5, 0.3, 1.7}) {
            const auto a = rho_kappa(k, w, profile).sample(grid);
            const auto b = rho_kappa(-k, w, profile).sample(grid);
            for (std::size_t i = 0; i < grid.n(); ++i) worst = std::max(worst, std::abs(a[i] * b[i] - 1.0));
        }
    }
    return {worst <= 1e-12, "max |rho_-k rho_k - 1| = " + fmt(worst) + " (tol 1e-12)"};
}

Outcome criterion9_rho_alpha_beta() {
    const auto profile = MassProfile::constant();
    double worst = 0.0;
    for (const std::string name : {"shifted-ho", "morse", "poschl-teller", "scarf"}) {
        const auto inst = instantiate(name, canonical(name), profile);
        const Grid grid = inst.canonical_grid(4097);
        const auto& w = inst.system.superpotential();
        for (auto [al, be] : {std::pair{0.3, 0.1}, std::pair{0.0, 0.7}, std::pair{1.2, 0.4}}) {
            const auto a = rho_alpha_beta(al, be, w, profile).sample(grid);
            const auto b = rho_alpha_beta(be, al, w, profile).sample(grid);
            for (std::size_t i = 0; i < grid.n(); ++i) worst = std::max(worst, std::abs(a[i] * b[i] - 1.0));
        }
    }
    return {worst <= 1e-12, "max |rho_ab rho_ba - 1| = " + fmt(worst) + " (tol 1e-12)"};
}

Outcome criterion9_gamma_f() {
    bool exact = true;
    std::string detail;
    for (double k : {2.0, -2.0, 3.0, 0.5, -0.5, 1.5, 10.0, 0.3, 1.7, -4.25}) {
        const auto [g, f] = gamma_f(k);
        const double lhs = (k + 1.0) * g + f;
        const double ulps = (lhs - (k + 1.0)) / (std::nextafter(k + 1.0, INFINITY) - (k + 1.0));
        if (lhs != k + 1.0) {
            exact = false;
            detail += " k=" + fmt(k) + ": " + fmt(ulps, 2) + " ulp";
        }
    }
    return {exact, std::string("(k+1) gamma + f == k+1 bitwise over 10 kappa values: ") +
                       (exact ? "all exact" : "inexact at" + detail)};
}

Outcome criterion9_phcs() {
    const auto profile = MassProfile::constant();
    double worst = 0.0;
    for (const std::string name : {"shifted-ho", "morse", "poschl-teller", "scarf"}) {
        const auto inst = instantiate(name, with_kappa(name, 2.0), profile);
        const Grid grid = inst.canonical_grid(4097);
        const auto params = CoherentParams::make(2.0, cplx(0.0, 0.3));
        const auto hcs = hcs_raw(params, inst.system, grid);
        const auto ph = phcs_raw(params, inst.system, grid);
        const auto inv = rho_kappa(2.0, inst.system.superpotential(), profile).sample_inverse(grid);
        for (std::size_t i = 0; i < grid.n(); ++i) {
            const cplx composed = inv[i] * hcs.values[i];
            const double scale = std::abs(ph.values[i]);
            if (scale == 0.0 && composed == 0.0) continue;
            worst = std::max(worst, std::abs(composed - ph.values[i]) / scale);
        }
    }
    return {worst <= 1e-12, "max |rho_k^-1 |xi> - |Xi>| / ||Xi>| pre-normalization = " + fmt(worst) + " (tol 1e-12)"};
}

Outcome criterion10() {
    // closed-form ground energies from the entries' parameter maps, checked against the printed expressions
    double worst = 0.0;
    auto expect = [&](const std::string& name, double value) {
        worst = std::max(worst, std::abs(make_entry(name, canonical(name)).eps0 - value));
    };
    expect("shifted-ho", 1.0);
    expect("morse", -2.0);
    expect("coulomb", -4.5);
    expect("poschl-teller", -2.0);
    return {worst <= 1e-14, "no tabulated numerics to reproduce; closed-form eps0 values reproduce the criterion 3 "
                            "targets to " + fmt(worst) + "; numeric agreement is criterion 3"};
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {"1", "catalog potential consistency", criterion1},
        {"2", "ground-state annihilation", criterion2},
        {"3", "ground energies", criterion3},
        {"4", "variable-mass identity suite", criterion4},
        {"5.1", "Swanson Hermitization symmetry defect", criterion5_symmetry},
        {"5.2", "Swanson Hermitized lowest eigenvalue", criterion5_eigenvalue},
        {"5.3", "Swanson metric positivity", criterion5_metric},
        {"6", "displacement identity", criterion6},
        {"7", "HCS action identity", criterion7},
        {"8", "uncertainty equality and ground moments", criterion8},
        {"9.1", "similarity map inversion in kappa", criterion9_rho_kappa},
        {"9.2", "similarity map inversion in (alpha, beta)", criterion9_rho_alpha_beta},
        {"9.3", "gamma/f identity", criterion9_gamma_f},
        {"9.4", "PHCS composition", criterion9_phcs},
        {"10", "closed-form ground energies", criterion10},
    };
    return all;
}

bool selected(const std::string& id, const std::string& want) {
    if (want.empty() || id == want) return true;
    return id.rfind(want + ".", 0) == 0;
}

} // namespace

int main(int argc, char** argv) {
    std::string want;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            want = argv[++i];
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    int ran = 0, failed = 0;
    for (const auto& c : criteria()) {
        if (!selected(c.id, want)) continue;
        ++ran;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& ex) {
            o = {false, std::string("error: ") + ex.what()};
        }
        if (!o.pass) ++failed;
        std::printf("[%s] criterion %s: %s: %s\n", o.pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    if (ran == 0) {
        std::fprintf(stderr, "no criterion matches '%s'\n", want.c_str());
        return 2;
    }
    return failed == 0 ? 0 : 1;
}
