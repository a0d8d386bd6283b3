#include "doctest.h"

#include "pdm/errors.hpp"
#include "pdm/superpotential.hpp"
#include "support.hpp"

#include <cmath>
#include <numbers>

using namespace pdm;

namespace {

ClassSpec class1(double a, double b, double c, double k0 = 1.0, double k1 = 0.0) { return {1, a, b, c, 0.0, k0, k1}; }

PhiFunction wrap(const ClassSpec& spec, std::function<double(double)> f) {
    PhiFunction p;
    p.eval = std::move(f);
    p.spec = spec;
    p.branch = "test";
    return p;
}

} // namespace

TEST_CASE("closed branches of the class ODEs") {
    const auto lin = solve_phi(class1(0, 0, 1), {0.0, 0.0}, {-5, 5});
    CHECK(lin.branch == "linear");
    CHECK(lin(2.5) == doctest::Approx(2.5));

    const auto ex = solve_phi(class1(0, -1, 1), {0.0, 0.0}, {-3, 10});
    CHECK(ex.branch == "exponential");
    for (double mu : {-2.0, 0.3, 4.0}) CHECK(ex(mu) == doctest::Approx(1.0 - std::exp(-mu)).epsilon(1e-14));

    const ClassSpec c2{2, -1.0, 0.0, 0.0, 0.0, 1.0, 1.0};
    const auto inv = solve_phi(c2, {1.0, 1.0}, {0.5, 10});
    for (double mu : {0.5, 1.0, 3.0, 9.0}) CHECK(inv(mu) == doctest::Approx(1.0 / mu).epsilon(1e-14));

    const auto th = solve_phi(class1(-1, 0, 1), {0.0, 0.0}, {-6, 6});
    CHECK(th.branch == "tanh");
    CHECK(th(0.7) == doctest::Approx(std::tanh(0.7)));

    const auto cth = solve_phi(class1(-1, 0, 1), {0.0, INFINITY}, {0, 10});
    CHECK(cth.branch == "coth");
    CHECK(cth(0.7) == doctest::Approx(1.0 / std::tanh(0.7)));

    const auto cot = solve_phi(class1(1, 0, 1), {0.0, INFINITY}, {0, std::numbers::pi});
    CHECK(cot.branch == "tan");
    CHECK(cot(1.0) == doctest::Approx(-1.0 / std::tan(1.0)));

    const ClassSpec c3{3, 1.0, 1.0, 0.0, 1.0, 1.0, 0.0};
    const auto sh = solve_phi(c3, {0.0, 0.0}, {-5, 5});
    CHECK(sh.branch == "sinh");
    CHECK(sh(1.3) == doctest::Approx(std::sinh(1.3)));
}

TEST_CASE("pole inside the working range") {
    try {
        solve_phi(class1(1, 0, 1), {0.0, 0.0}, {0.0, 3.0});
        FAIL("expected a singularity error");
    } catch (const SingularityError& e) {
        CHECK(e.location() == doctest::Approx(std::numbers::pi / 2));
    }
    // a pole on the boundary is a wall
    CHECK_NOTHROW(solve_phi(class1(-1, 0, 1), {0.0, INFINITY}, {0.0, 5.0}));
    CHECK_THROWS_AS(solve_phi(class1(-1, 0, 1), {1.0, INFINITY}, {0.0, 5.0}), SingularityError);
}

TEST_CASE("numeric branch agrees with closed forms") {
    testing::Gen gen(31);
    for (int i = 0; i < 20; ++i) {
        // tanh-type Riccati with random coefficients: a < 0, c > 0
        const double a = -gen.uniform(0.3, 2.0), b = gen.uniform(-1.0, 1.0), c = gen.uniform(0.3, 2.0);
        const auto spec = class1(a, b, c);
        const MuRange range{-3.0, 3.0};
        const auto closed = solve_phi(spec, {0.0, gen.uniform(-0.2, 0.2)}, range);
        const auto num = solve_phi_numeric_matched(spec, closed);
        CHECK(num.branch == "numeric");
        for (double mu : {-2.9, -1.0, 0.0, 1.7, 2.9}) CHECK(num(mu) == doctest::Approx(closed(mu)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(solve_phi(class1(1, 0, 1), {0.0, INFINITY}, {0, 3}, {true, 1e-3}), ParameterError);
}

TEST_CASE("W from phi for the three classes") {
    const auto s1 = class1(0, 0, 1, 1.0, 0.0);
    const auto w1 = w_from_phi(s1, solve_phi(s1, {0.0, 0.0}, {-5, 5}));
    CHECK(w1(1.5) == doctest::Approx(1.5));

    const ClassSpec s2{2, -1.0, 0.0, 0.0, 0.0, 1.0, 1.0};
    const auto w2 = w_from_phi(s2, solve_phi(s2, {1.0, 1.0}, {0.5, 8}));
    for (double mu : {0.5, 2.0, 7.0}) CHECK(w2(mu) == doctest::Approx(1.0 / mu + mu));

    const ClassSpec s3{3, 1.0, 1.0, 0.0, 1.0, 1.0, 0.0};
    const auto w3 = w_from_phi(s3, solve_phi(s3, {0.0, 0.0}, {-5, 5}));
    for (double mu : {-2.0, 0.4, 3.0}) CHECK(w3(mu) == doctest::Approx(std::tanh(mu)).epsilon(1e-13));
    // slope and antiderivative are consistent with the value
    CHECK(w3.slope(0.4) == doctest::Approx(1.0 / std::pow(std::cosh(0.4), 2)).epsilon(1e-12));
    CHECK(w3.antiderivative(1.0) - w3.antiderivative(0.0) == doctest::Approx(std::log(std::cosh(1.0))).epsilon(1e-9));
}

TEST_CASE("class 2 division by zero") {
    // phi = tan(mu) crosses zero at mu = 0 inside the range
    const ClassSpec s2{2, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0};
    const auto phi = solve_phi(s2, {0.0, 0.0}, {-1.0, 1.0});
    try {
        w_from_phi(s2, phi);
        FAIL("expected a singularity error");
    } catch (const SingularityError& e) {
        CHECK(std::abs(e.location()) <= 1e-2);
    }
}

TEST_CASE("ode residual") {
    const auto spec = class1(0, 0, 1);
    const Grid g(-3, 3, 1001);
    CHECK(ode_residual(spec, wrap(spec, [](double mu) { return mu; }), g) <= 1e-12);
    const auto th = class1(-1, 0, 1);
    CHECK(ode_residual(th, wrap(th, [](double mu) { return std::tanh(mu); }), Grid(-6, 6, 4097)) <= 5e-5);
    CHECK(ode_residual(spec, wrap(spec, [](double mu) { return mu * mu; }), g) >= 1.0);
}

TEST_CASE("class spec validation and JSON") {
    ClassSpec bad{4, 0, 0, 0, 0, 1, 0};
    CHECK_THROWS(bad.validate());
    const ClassSpec s{3, 1.0, 2.0, 0.5, 1.0, -1.0, 0.25};
    nlohmann::json j = s;
    const ClassSpec back = j.get<ClassSpec>();
    CHECK(back.class_id == 3);
    CHECK(back.b == 2.0);
    CHECK(back.k1 == 0.25);
    CHECK_THROWS_AS(nlohmann::json({{"class", 1}, {"zz", 1}}).get<ClassSpec>(), ConfigError);
}

TEST_CASE("linear superpotential") {
    const auto w = Superpotential::linear(2.0, -1.0);
    CHECK(w(3.0) == 5.0);
    CHECK(w.slope(3.0) == 2.0);
    CHECK(w.antiderivative(2.0) - w.antiderivative(0.0) == doctest::Approx(2.0));
}
