#include "doctest.h"

#include "pdm/coherent.hpp"
#include "pdm/errors.hpp"
#include "pdm/swanson.hpp"
#include "support.hpp"

#include <cmath>
#include <string>

using namespace pdm;

namespace {

constexpr double kC = 50.0;

FactorizedSystem shifted_ho(double kappa) {
    return FactorizedSystem(MassProfile::constant(), Superpotential::linear(1.0, 0.0), kappa);
}

FactorizedSystem morse(double kappa) {
    Superpotential w;
    w.value = [](double mu) { return 1.0 - std::exp(-mu); };
    w.slope = [](double mu) { return std::exp(-mu); };
    w.antiderivative = [](double mu) { return mu + std::exp(-mu); };
    return FactorizedSystem(MassProfile::constant(), w, kappa);
}

} // namespace

TEST_CASE("gamma and f") {
    CHECK(gamma_f(2.0) == std::pair{0.5, 1.5});
    CHECK(gamma_f(-2.0) == std::pair{-0.5, -1.5});
    for (double bad : {0.0, 1.0, -1.0}) {
        try {
            gamma_f(bad);
            FAIL("expected a parameter error");
        } catch (const ParameterError& e) {
            CHECK(std::string(e.what()).find("for κ≠0,±1") != std::string::npos);
        }
    }
    testing::Gen gen(51);
    for (int i = 0; i < 200; ++i) {
        const double k = gen.kappa();
        const auto [g, f] = gamma_f(k);
        const auto [gm, fm] = gamma_f(-k);
        CHECK(gm == -g);
        CHECK(fm == -f);
        CHECK(std::abs((k + 1) * g + f - (k + 1)) <= 4e-16 * std::abs(k + 1) + 1e-15);
    }
}

TEST_CASE("coherent parameters") {
    CHECK_THROWS_AS(CoherentParams::make(2.0, cplx(0.1, 0.3)), ParameterError);
    CHECK_THROWS_AS(CoherentParams::make(1.0, cplx(0.0, 0.3)), ParameterError);
    const auto h = CoherentParams::hermitian(1.0, cplx(0.0, 0.2));
    CHECK(h.gamma == 1.0);
    CHECK_THROWS(h.f());
    CHECK_THROWS_AS(CoherentParams::hermitian(0.0, cplx(0.0, 0.2)), ParameterError);
    const auto p = CoherentParams::make(2.0, cplx(0.0, 0.3));
    CHECK(p.xi_kappa().imag() == doctest::Approx(0.15));
    CHECK(p.w_bar_factor() == doctest::Approx(1.5));
    CHECK_THROWS_AS(check_kappa_consistent(p, shifted_ho(3.0)), ParameterError);
}

TEST_CASE("HCS of the shifted oscillator at kappa = 2") {
    const auto p = CoherentParams::make(2.0, cplx(0.0, 0.3));
    const auto sys = shifted_ho(2.0);
    const Grid g(-6, 6, 2049);
    const auto psi = hcs_evaluate(p, sys, g);
    const auto ref = SampledFunction::from(g, [](double x) {
        return std::exp(cplx(-1.5 * x * x, 0.45 * std::sqrt(2.0) * x));
    });
    const auto ref_n = (1.0 / l2_norm(ref)) * ref;
    CHECK(max_abs(psi - ref_n) <= 1e-12);

    // xi = 0 gives the ground state
    const auto p0 = CoherentParams::make(2.0, cplx(0.0, 0.0));
    const auto gs = ground_state(sys, g);
    CHECK(max_abs(hcs_evaluate(p0, sys, g) - gs.psi0) <= 1e-14);
}

TEST_CASE("PHCS and the ground-factor exponents") {
    const auto sys = shifted_ho(2.0);
    const auto p0 = CoherentParams::make(2.0, cplx(0.0, 0.0));
    const Grid g(-6, 6, 2049);
    const auto ph = phcs_evaluate(p0, sys, g);
    const auto ref = SampledFunction::from_real(g, [](double x) { return std::exp(-0.75 * x * x); });
    CHECK(max_abs(ph - (1.0 / l2_norm(ref)) * ref) <= 1e-12);

    testing::Gen gen(52);
    for (int i = 0; i < 30; ++i) {
        const double k = gen.kappa();
        if (k <= 0) continue;  // W = x needs a positive ground exponent on the full line
        const auto s = morse(k);
        const auto p = CoherentParams::make(k, cplx(0.0, 0.3));
        for (double x : {-1.0, 0.5, 3.0}) {
            const double ratio = hcs_ground_exponent(p, s, x) / phcs_ground_exponent(p, s, x);
            CHECK(ratio == doctest::Approx(k).epsilon(1e-10));
        }
    }
}

TEST_CASE("norm preservation and the gamma form") {
    testing::Gen gen(53);
    const Grid g(-4, 10, 2049);
    for (int i = 0; i < 15; ++i) {
        const double k = std::abs(gen.kappa()) + 0.1;
        if (k == 1.0) continue;
        const auto s = morse(k);
        const auto p = CoherentParams::make(k, cplx(0.0, gen.uniform(-1.0, 1.0)));
        const auto raw = hcs_raw(p, s, g);
        const auto alt = hcs_raw_gamma_form(p, s, g);
        const auto samples = s.sample(g);
        double worst = 0.0, worst_alt = 0.0;
        for (std::size_t j = 0; j < g.n(); ++j) {
            const double ground = std::exp(samples.log_ground[j]);
            worst = std::max(worst, std::abs(std::abs(raw[j]) - ground) / std::max(ground, 1e-300));
            worst_alt = std::max(worst_alt, std::abs(raw[j] - alt[j]) / std::max(ground, 1e-300));
        }
        CHECK(worst <= 1e-12);
        CHECK(worst_alt <= 1e-12);
    }
}

TEST_CASE("displacement operator") {
    const auto p = CoherentParams::make(2.0, cplx(0.0, 0.3));
    const auto sys = shifted_ho(2.0);
    const auto d = make_displacement(p, sys);
    testing::Gen gen(54);
    for (int i = 0; i < 50; ++i) CHECK(std::abs(std::abs(d.phase_fn(gen.uniform(-10, 10))) - 1.0) <= 1e-14);

    for (const auto& s : {shifted_ho(2.0), morse(2.0)}) {
        const Grid g(-3, 6, 2049);
        std::vector<SampledFunction> suite;
        for (int j = 0; j < 5; ++j) suite.push_back(gen.bump(g));
        CHECK(displacement_identity_check(p, s, suite) <= kC * g.h() * g.h());
        CHECK(displacement_identity_check(CoherentParams::make(2.0, cplx(0.0, 0.0)), s, suite) == 0.0);
    }
}

TEST_CASE("annihilation action on the HCS") {
    const auto p = CoherentParams::make(2.0, cplx(0.0, 0.3));
    const Grid g(-6, 6, 4097);
    const auto ho = annihilation_action_check(p, shifted_ho(2.0), g);
    CHECK(ho.identity_residual <= 5e-5);
    CHECK(std::abs(ho.best_eigenvalue - cplx(0.0, 0.45)) <= 1e-4);
    CHECK(ho.eigen_residual <= 5e-5);

    const Grid gm(-3, 12, 4097);
    const auto mo = annihilation_action_check(p, morse(2.0), gm);
    CHECK(mo.identity_residual <= 5e-5);
    CHECK(mo.eigen_residual >= 1e-2);

    const auto p0 = CoherentParams::make(2.0, cplx(0.0, 0.0));
    const auto r0 = annihilation_action_check(p0, morse(2.0), gm);
    const auto gs = ground_state(morse(2.0), gm);
    const double base = l2_norm(apply_annihilation(morse(2.0), gs.psi0)) / l2_norm(gs.psi0);
    CHECK(r0.identity_residual == doctest::Approx(base).epsilon(1e-10));
    CHECK(r0.eigen_residual == doctest::Approx(base).epsilon(1e-6));
}

TEST_CASE("uncertainty product of the shifted oscillator") {
    const auto p = CoherentParams::hermitian(1.0, cplx(0.0, 0.2));
    const auto u = uncertainty_product(p, shifted_ho(1.0), Grid(-6, 6, 32769));
    CHECK(std::abs(u.lhs - u.rhs) / u.rhs <= 1e-6);
    CHECK(u.rhs == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(u.mean_w) <= 1e-6);
    CHECK(u.mean_pi == doctest::Approx(std::sqrt(2.0) * 0.2 * u.mean_f / 1.0).epsilon(1e-6));
}

TEST_CASE("PHCS composition with the similarity map") {
    testing::Gen gen(55);
    const Grid g(-4, 10, 2049);
    for (int i = 0; i < 15; ++i) {
        const double k = std::abs(gen.kappa()) + 0.1;
        const auto s = morse(k);
        const auto p = CoherentParams::make(k, cplx(0.0, gen.uniform(-1.0, 1.0)));
        const auto inv = rho_kappa(k, s.superpotential(), s.profile()).sample_inverse(g);
        const auto xi = hcs_raw(p, s, g);
        const auto big = phcs_raw(p, s, g);
        double worst = 0.0;
        for (std::size_t j = 0; j < g.n(); ++j) {
            if (big[j] == cplx(0.0)) continue;
            worst = std::max(worst, std::abs(inv[j] * xi[j] - big[j]) / std::abs(big[j]));
        }
        CHECK(worst <= 1e-12);
    }
}
