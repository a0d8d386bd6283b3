#include "pdm/catalog.hpp"

#include "pdm/coherent.hpp"
#include "pdm/eigen.hpp"
#include "pdm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace pdm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kLn2 = std::numbers::ln2;

double log_cosh(double y) {
    const double a = std::abs(y);
    return a + std::log1p(std::exp(-2.0 * a)) - kLn2;
}

// log sinh y for y >= 0
double log_sinh(double y) {
    if (y == 0.0) return -kInf;
    if (y < 0.0) return std::numeric_limits<double>::quiet_NaN();
    if (y < 1e-4) return std::log(y) + y * y / 6.0;
    return y + std::log1p(-std::exp(-2.0 * y)) - kLn2;
}

double sech(double y) { return 1.0 / std::cosh(y); }

// phase sqrt2 xi_kappa W~ combined with a log ground factor
cplx coherent_value(cplx xk, double w_mod, double log_ground) {
    if (log_ground == -kInf) return 0.0;
    return std::exp(kSqrt2 * xk * w_mod + cplx(log_ground, 0.0));
}

void require(bool ok, const std::string& entry, const std::string& what) {
    if (!ok) throw ParameterError(entry + ": " + what);
}

void set_canonical(CatalogEntry& e, double lo, double hi) {
    e.mu_lo = lo;
    e.mu_hi = hi;
    switch (e.domain_kind) {
    case DomainKind::full_line:
        e.natural_lo = -kInf;
        e.natural_hi = kInf;
        break;
    case DomainKind::half_line:
        e.natural_lo = 0.0;
        e.natural_hi = kInf;
        e.wall_lo = true;
        break;
    case DomainKind::finite:
        e.natural_lo = lo;
        e.natural_hi = hi;
        e.wall_lo = true;
        e.wall_hi = true;
        break;
    }
}

CatalogEntry base(const std::string& name, const EntryParams& q) {
    const auto& info = registry_info(name);
    CatalogEntry e;
    e.name = name;
    e.class_id = info.class_id;
    e.constraint = info.constraint;
    e.domain_kind = info.domain_kind;
    e.params = q;
    require(std::isfinite(q.kappa) && q.kappa != -1.0, name, "kappa must be finite and different from -1");
    return e;
}

CatalogEntry shifted_ho(const EntryParams& q) {
    auto e = base("shifted-ho", q);
    const double P = q.kappa + 1.0;
    const double k0 = q.k0, k1 = q.k1;
    require(k0 != 0.0, e.name, "k0 must be nonzero");
    const double omega = P * k0;
    const double lambda = -P * k1;
    e.derived = {{"omega", omega}, {"lambda", lambda}};
    e.ode = {1, 0.0, 0.0, 1.0, 0.0, k0, k1};
    e.phi_initial = {0.0, 0.0};
    e.phi_closed = [](double mu) { return mu; };
    e.w_closed = [k0, k1](double mu) { return k0 * mu + k1; };
    e.w_antiderivative = [k0, k1](double mu) { return 0.5 * k0 * mu * mu + k1 * mu; };
    e.v_closed = [omega, lambda](double mu) {
        const double t = omega * mu - lambda;
        return 0.5 * t * t;
    };
    e.f_closed = [omega](double) { return omega; };
    e.hcs_closed = [omega, lambda](double mu, cplx xk) {
        return coherent_value(xk, omega * mu - lambda, -0.5 * omega * mu * mu + lambda * mu);
    };
    e.eps0 = 0.5 * omega;
    set_canonical(e, -8.0, 8.0);
    return e;
}

CatalogEntry morse(const EntryParams& q) {
    auto e = base("morse", q);
    const double P = q.kappa + 1.0;
    const double k0 = q.k0, c = q.c;
    require(c > 0.0, e.name, "c must be positive");
    require(q.k1 == 0.0, e.name, "k1 must be 0");
    const double lambda = P * k0 / (c * c);
    const double j = -(lambda * c + 0.5);
    e.derived = {{"lambda", lambda}, {"j", j}};
    e.ode = {1, 0.0, -c, c, 0.0, k0, 0.0};
    e.phi_initial = {0.0, 1.0 - 1.0 / c};
    e.phi_closed = [c](double mu) { return 1.0 - std::exp(-c * mu) / c; };
    e.w_closed = [k0, c](double mu) { return k0 * (1.0 - std::exp(-c * mu) / c); };
    e.w_antiderivative = [k0, c](double mu) { return k0 * (mu + std::exp(-c * mu) / (c * c)); };
    e.v_closed = [lambda, j, c](double mu) {
        const double x = std::exp(-c * mu);
        return 0.5 * lambda * lambda * c * c * x * x + j * lambda * c * c * x;
    };
    e.f_closed = [lambda, c](double mu) { return lambda * c * c * std::exp(-c * mu); };
    e.hcs_closed = [lambda, j, c](double mu, cplx xk) {
        const double x = std::exp(-c * mu);
        return coherent_value(xk, lambda * c * c + (j + 0.5) * x, -lambda * c * c * mu - lambda * x);
    };
    e.eps0 = -(c * c / 8.0) * (2.0 * j + 1.0) * (2.0 * j + 1.0);
    e.notes.push_back("V stores j*lambda*c^2 on exp(-c mu); the commonly printed coefficient lacks c^2 (equal at c=1)");
    set_canonical(e, -3.0, 12.0);
    return e;
}

CatalogEntry coulomb(const EntryParams& q) {
    auto e = base("coulomb", q);
    const double P = q.kappa + 1.0;
    const double k0 = q.k0, a = q.a, b = q.b, c = q.c;
    require(a != 0.0, e.name, "a must be nonzero");
    require(std::abs(b * b - 4.0 * a * c) <= 1e-12 * std::max(1.0, b * b), e.name, "constraint b^2 = 4ac violated");
    require(q.k1 == 0.0, e.name, "k1 must be 0");
    const double L = P * k0 / a;  // l + 1
    const double l = L - 1.0;
    const double ze2 = -b * L * L / 2.0;
    e.derived = {{"l", l}, {"Ze2", ze2}};
    e.ode = {1, a, b, c, 0.0, k0, 0.0};
    e.phi_initial = {0.0, kInf};
    e.phi_closed = [a, b](double mu) { return -1.0 / (a * mu) - b / (2.0 * a); };
    e.w_closed = [k0, a, b](double mu) { return k0 * (-1.0 / (a * mu) - b / (2.0 * a)); };
    e.w_antiderivative = [k0, a, b](double mu) { return k0 * (-std::log(mu) / a - b * mu / (2.0 * a)); };
    e.v_closed = [ze2, l](double mu) { return -ze2 / mu + l * (l + 1.0) / (2.0 * mu * mu); };
    e.f_closed = [L](double mu) { return L / (mu * mu); };
    e.hcs_closed = [L, ze2](double mu, cplx xk) {
        return coherent_value(xk, -L / mu + ze2 / L, L * std::log(mu) - ze2 * mu / L);
    };
    e.eps0 = -0.5 * (ze2 / L) * (ze2 / L);
    set_canonical(e, 0.0, 15.0);
    return e;
}

CatalogEntry poschl_teller(const EntryParams& q) {
    auto e = base("poschl-teller", q);
    const double P = q.kappa + 1.0;
    const double k0 = q.k0, s = q.a;
    require(s > 0.0, e.name, "a (tanh scale) must be positive");
    require(q.k1 == 0.0, e.name, "k1 must be 0");
    const double j = P * k0 / s;
    e.derived = {{"j", j}};
    e.ode = {1, -s, 0.0, s, 0.0, k0, 0.0};
    e.phi_initial = {0.0, 0.0};
    e.phi_closed = [s](double mu) { return std::tanh(s * mu); };
    e.w_closed = [k0, s](double mu) { return k0 * std::tanh(s * mu); };
    e.w_antiderivative = [k0, s](double mu) { return k0 * log_cosh(s * mu) / s; };
    e.v_closed = [j, s](double mu) {
        const double h = sech(s * mu);
        return -0.5 * s * s * j * (j + 1.0) * h * h;
    };
    e.f_closed = [j, s](double mu) {
        const double h = sech(s * mu);
        return j * s * s * h * h;
    };
    e.hcs_closed = [j, s](double mu, cplx xk) {
        return coherent_value(xk, j * s * std::tanh(s * mu), -j * log_cosh(s * mu));
    };
    e.eps0 = -0.5 * s * s * j * j;
    set_canonical(e, -10.0, 10.0);
    return e;
}

CatalogEntry eckart(const EntryParams& q) {
    auto e = base("eckart", q);
    const double P = q.kappa + 1.0;
    const double k0 = q.k0, k1 = q.k1, s = q.a;
    require(s > 0.0, e.name, "a (coth scale) must be positive");
    require(k0 != 0.0, e.name, "k0 must be nonzero");
    const double lambda = P * k0 / s;
    const double nu = P * P * k0 * k1 / (s * s);
    e.derived = {{"lambda", lambda}, {"nu", nu}};
    e.ode = {1, -s, 0.0, s, 0.0, -k0, k1};
    e.phi_initial = {0.0, kInf};
    e.phi_closed = [s](double mu) { return 1.0 / std::tanh(s * mu); };
    e.w_closed = [k0, k1, s](double mu) { return -k0 / std::tanh(s * mu) + k1; };
    e.w_antiderivative = [k0, k1, s](double mu) { return -k0 * log_sinh(s * mu) / s + k1 * mu; };
    e.v_closed = [lambda, nu, s](double mu) {
        const double cs = 1.0 / std::sinh(s * mu);
        return 0.5 * s * s * lambda * (lambda - 1.0) * cs * cs - nu * s * s / std::tanh(s * mu);
    };
    e.f_closed = [lambda, s](double mu) {
        const double cs = 1.0 / std::sinh(s * mu);
        return lambda * s * s * cs * cs;
    };
    e.hcs_closed = [lambda, nu, s](double mu, cplx xk) {
        return coherent_value(xk, s * (-lambda / std::tanh(s * mu) + nu / lambda),
                              lambda * log_sinh(s * mu) - s * nu * mu / lambda);
    };
    e.eps0 = -0.5 * s * s * (lambda * lambda + nu * nu / (lambda * lambda));
    e.notes.push_back("ODE pattern a=-c, b=0 (coth branch); an 'a=c' pattern does not produce coth");
    e.notes.push_back("normalizable for lambda>0 with nu/lambda > lambda; ground factor sinh^lambda vanishes at the wall");
    set_canonical(e, 0.0, 10.0);
    return e;
}

CatalogEntry rosen_morse(const EntryParams& q) {
    auto e = base("rosen-morse", q);
    const double P = q.kappa + 1.0;
    const double k0 = q.k0, k1 = q.k1, s = q.a;
    require(s > 0.0, e.name, "a (cot scale) must be positive");
    require(k0 != 0.0, e.name, "k0 must be nonzero");
    const double lambda = P * k0 / s;
    const double nu = P * P * k0 * k1 / (s * s);
    e.derived = {{"lambda", lambda}, {"nu", nu}};
    e.ode = {1, -s, 0.0, -s, 0.0, k0, -k1};
    e.phi_initial = {0.0, kInf};
    e.phi_closed = [s](double mu) { return 1.0 / std::tan(s * mu); };
    e.w_closed = [k0, k1, s](double mu) { return k0 / std::tan(s * mu) - k1; };
    e.w_antiderivative = [k0, k1, s](double mu) { return k0 * std::log(std::sin(s * mu)) / s - k1 * mu; };
    e.v_closed = [lambda, nu, s](double mu) {
        const double cs = 1.0 / std::sin(s * mu);
        return 0.5 * s * s * lambda * (lambda + 1.0) * cs * cs - nu * s * s / std::tan(s * mu);
    };
    e.f_closed = [lambda, s](double mu) {
        const double cs = 1.0 / std::sin(s * mu);
        return -lambda * s * s * cs * cs;
    };
    e.hcs_closed = [lambda, nu, s](double mu, cplx xk) {
        return coherent_value(xk, s * (lambda / std::tan(s * mu) - nu / lambda),
                              -lambda * std::log(std::sin(s * mu)) + s * nu * mu / lambda);
    };
    e.eps0 = 0.5 * s * s * (lambda * lambda - nu * nu / (lambda * lambda));
    e.notes.push_back("normalizable on (0, pi/a) only for lambda<0; F = -lambda a^2 csc^2 is then positive");
    set_canonical(e, 0.0, std::numbers::pi / s);
    return e;
}

CatalogEntry manning_rosen_like(CatalogEntry e, const EntryParams& q, bool hulthen) {
    const double P = q.kappa + 1.0;
    const double k0 = q.k0, k1 = q.k1, beta = q.b;
    require(beta > 0.0, e.name, "b must be positive");
    require(k0 != 0.0, e.name, "k0 must be nonzero");
    const double J = P * k0;
    const double shift = P * k1 / beta;  // lambda/(2J) - 1/2
    const double lambda = (2.0 * P * k1 / beta + 1.0) * J;
    const double lambda_v = J * (J + 2.0 * P * k1 / beta);
    if (hulthen) {
        const double ze2 = beta * lambda / 2.0;
        e.derived = {{"J", J}, {"lambda", lambda}, {"Ze2", ze2}};
    } else {
        e.derived = {{"J", J}, {"lambda", lambda}, {"Lambda_V", lambda_v}};
    }
    auto G = [beta](double mu) { return 1.0 / std::expm1(beta * mu); };
    e.ode = {1, -1.0, -beta, 0.0, 0.0, -k0, k1};
    e.phi_initial = {0.0, kInf};
    e.phi_closed = [beta, G](double mu) { return beta * G(mu); };
    e.w_closed = [k0, k1, beta, G](double mu) { return -k0 * beta * G(mu) + k1; };
    e.w_antiderivative = [k0, k1, beta](double mu) { return -k0 * std::log1p(-std::exp(-beta * mu)) + k1 * mu; };
    e.v_closed = [J, lambda_v, beta, G](double mu) {
        const double g = G(mu);
        return 0.5 * beta * beta * J * (J - 1.0) * g * (1.0 + g) - 0.5 * beta * beta * lambda_v * g;
    };
    e.f_closed = [J, beta](double mu) {
        const double cs = 1.0 / std::sinh(0.5 * beta * mu);
        return 0.25 * J * beta * beta * cs * cs;
    };
    e.hcs_closed = [J, beta, shift, G](double mu, cplx xk) {
        return coherent_value(xk, beta * (shift - J * G(mu)),
                              J * std::log1p(-std::exp(-beta * mu)) - beta * shift * mu);
    };
    e.eps0 = -0.5 * beta * beta * shift * shift;
    e.notes.push_back("ODE coefficients (a, b, c) = (-1, -b, 0) for phi = b e^(-b mu)/(1 - e^(-b mu))");
    if (!hulthen)
        e.notes.push_back("V coefficient of the e^(-b mu)/(1-e^(-b mu)) term is J(J + 2(kappa+1)k1/b); "
                          "the printed lambda = J(2(kappa+1)k1/b + 1) agrees only at J=1");
    e.notes.push_back("coherent phase constant is b(lambda/(2J) - 1/2); the printed form drops the factor b");
    set_canonical(e, 0.0, 16.0);
    return e;
}

CatalogEntry manning_rosen(const EntryParams& q) { return manning_rosen_like(base("manning-rosen", q), q, false); }

CatalogEntry hulthen(const EntryParams& q) {
    EntryParams r = q;
    const double fixed = 1.0 / (q.kappa + 1.0);
    require(std::abs(q.k0 - fixed) <= 1e-12 * std::max(1.0, std::abs(fixed)), "hulthen",
            "k0 is fixed to 1/(kappa+1) (J = 1)");
    r.k0 = fixed;
    return manning_rosen_like(base("hulthen", r), r, true);
}

CatalogEntry radial_ho(const EntryParams& q) {
    auto e = base("radial-ho", q);
    const double P = q.kappa + 1.0;
    const double k0 = q.k0, k1 = q.k1;
    const double L = P * k0;  // l + 1
    const double l = L - 1.0;
    const double omega = P * k1;
    e.derived = {{"l", l}, {"omega", omega}};
    e.ode = {2, -1.0, 0.0, 0.0, 0.0, -k0, k1};
    e.phi_initial = {0.0, kInf};
    e.phi_closed = [](double mu) { return 1.0 / mu; };
    e.w_closed = [k0, k1](double mu) { return -k0 / mu + k1 * mu; };
    e.w_antiderivative = [k0, k1](double mu) { return -k0 * std::log(mu) + 0.5 * k1 * mu * mu; };
    e.v_closed = [omega, l](double mu) { return 0.5 * omega * omega * mu * mu + l * (l + 1.0) / (2.0 * mu * mu); };
    e.f_closed = [omega, L](double mu) { return omega + L / (mu * mu); };
    e.hcs_closed = [omega, L](double mu, cplx xk) {
        return coherent_value(xk, -L / mu + omega * mu, L * std::log(mu) - 0.5 * omega * mu * mu);
    };
    e.eps0 = omega * (l + 1.5);
    e.notes.push_back("generic class-2 formula used with (k0, k1) -> (-k0, k1)");
    set_canonical(e, 0.0, 8.0);
    return e;
}

CatalogEntry generalized_pt(const EntryParams& q) {
    auto e = base("generalized-poschl-teller", q);
    const double P = q.kappa + 1.0;
    const double k0 = q.k0, k1 = q.k1, s = q.a;
    require(s > 0.0, e.name, "a (tanh scale) must be positive");
    const double lp = P * k0 / s;
    const double lm = P * k1 / s;
    const double m = 0.5 * (lp + lm) + 0.5;
    const double lambda = 0.5 * (lp - lm);
    e.derived = {{"m", m}, {"lambda", lambda}, {"Lambda_plus", lp}, {"Lambda_minus", lm}};
    e.ode = {2, -s, s, 0.0, 0.0, k0, k1};
    e.phi_initial = {0.0, 0.0};
    e.phi_closed = [s](double mu) { return std::tanh(s * mu); };
    e.w_closed = [k0, k1, s](double mu) { return k0 * std::tanh(s * mu) + k1 / std::tanh(s * mu); };
    e.w_antiderivative = [k0, k1, s](double mu) { return (k0 * log_cosh(s * mu) + k1 * log_sinh(s * mu)) / s; };
    e.v_closed = [m, lambda, s](double mu) {
        const double h = sech(s * mu);
        const double cs = 1.0 / std::sinh(s * mu);
        return -0.5 * s * s * ((m + lambda) * (m + lambda) - 0.25) * h * h +
               0.5 * s * s * ((m - lambda) * (m - lambda) - 0.25) * cs * cs;
    };
    e.f_closed = [lp, lm, s](double mu) {
        const double h = sech(s * mu);
        const double cs = 1.0 / std::sinh(s * mu);
        return s * s * lp * h * h - s * s * lm * cs * cs;
    };
    e.hcs_closed = [lp, lm, s](double mu, cplx xk) {
        return coherent_value(xk, s * (lp * std::tanh(s * mu) + lm / std::tanh(s * mu)),
                              -lp * log_cosh(s * mu) - lm * log_sinh(s * mu));
    };
    e.eps0 = -0.5 * s * s * (2.0 * m - 1.0) * (2.0 * m - 1.0);
    e.notes.push_back("treated as half-line: the coth term is singular at mu=0");
    set_canonical(e, 0.0, 12.0);
    return e;
}

CatalogEntry scarf(const EntryParams& q) {
    auto e = base("scarf", q);
    const double P = q.kappa + 1.0;
    const double k0 = q.k0, k1 = q.k1;
    require(q.a == 1.0, e.name, "class-3 pattern a=b=d=1, c=0 requires a=1");
    const double nu = P * k0;
    const double lambda = P * k1;
    e.derived = {{"nu", nu}, {"lambda", lambda}};
    e.ode = {3, 1.0, 1.0, 0.0, 1.0, k0, -k1};
    e.phi_initial = {0.0, 0.0};
    e.phi_closed = [](double mu) { return std::sinh(mu); };
    e.w_closed = [k0, k1](double mu) { return k0 * std::tanh(mu) - k1 * sech(mu); };
    e.w_antiderivative = [k0, k1](double mu) { return k0 * log_cosh(mu) - k1 * std::atan(std::sinh(mu)); };
    e.v_closed = [nu, lambda](double mu) {
        const double h = sech(mu);
        return 0.5 * (lambda * lambda - nu * nu - nu) * h * h - 0.5 * lambda * (2.0 * nu + 1.0) * std::tanh(mu) * h;
    };
    e.f_closed = [nu, lambda](double mu) {
        const double h = sech(mu);
        return nu * h * h + lambda * std::tanh(mu) * h;
    };
    e.hcs_closed = [nu, lambda](double mu, cplx xk) {
        return coherent_value(xk, nu * std::tanh(mu) - lambda * sech(mu),
                              -nu * log_cosh(mu) + lambda * std::atan(std::sinh(mu)));
    };
    e.eps0 = -0.5 * nu * nu;
    e.notes.push_back("ground factor cosh^(-nu) exp(+lambda arctan sinh mu); F = nu sech^2 + lambda tanh sech "
                      "(the printed forms carry the opposite sign and a factor 1/2)");
    set_canonical(e, -10.0, 10.0);
    return e;
}

using Factory = CatalogEntry (*)(const EntryParams&);

struct Registered {
    RegistryInfo info;
    Factory factory;
};

const std::vector<Registered>& registered() {
    static const std::vector<Registered> items = [] {
        EntryParams sho;
        EntryParams mo;
        mo.c = 1.0;
        EntryParams co;
        co.kappa = 2.0;
        co.a = 1.0;
        co.b = -2.0;
        co.c = 1.0;
        EntryParams pt;
        pt.a = 1.0;
        EntryParams ec;
        ec.k1 = 2.0;
        ec.a = 1.0;
        EntryParams rm;
        rm.k0 = -1.0;
        rm.k1 = 0.5;
        rm.a = 1.0;
        EntryParams mr;
        mr.k1 = 0.5;
        mr.b = 1.0;
        EntryParams hu;
        hu.k0 = 0.5;
        hu.k1 = 0.5;
        hu.b = 1.0;
        EntryParams rh;
        rh.k1 = 1.0;
        EntryParams gp;
        gp.k0 = 2.0;
        gp.k1 = -1.0;
        gp.a = 1.0;
        EntryParams sc;
        sc.k1 = 0.5;
        sc.a = 1.0;
        return std::vector<Registered>{
            {{"shifted-ho", 1, "a=b=0, c=1", DomainKind::full_line, sho}, shifted_ho},
            {{"morse", 1, "a=0, b=-c", DomainKind::full_line, mo}, morse},
            {{"coulomb", 1, "b^2=4ac", DomainKind::half_line, co}, coulomb},
            {{"poschl-teller", 1, "a=-c, b=0 (tanh)", DomainKind::full_line, pt}, poschl_teller},
            {{"eckart", 1, "a=-c, b=0 (coth)", DomainKind::half_line, ec}, eckart},
            {{"rosen-morse", 1, "a=c, b=0 (cot)", DomainKind::finite, rm}, rosen_morse},
            {{"manning-rosen", 1, "a=-1, c=0", DomainKind::half_line, mr}, manning_rosen},
            {{"hulthen", 1, "a=-1, c=0, J=1", DomainKind::half_line, hu}, hulthen},
            {{"radial-ho", 2, "a=-1, b=0", DomainKind::half_line, rh}, radial_ho},
            {{"generalized-poschl-teller", 2, "a=-b", DomainKind::half_line, gp}, generalized_pt},
            {{"scarf", 3, "a=b=d=1, c=0", DomainKind::full_line, sc}, scarf},
        };
    }();
    return items;
}

} // namespace

const char* to_string(DomainKind kind) {
    switch (kind) {
    case DomainKind::full_line: return "full-line";
    case DomainKind::half_line: return "half-line";
    case DomainKind::finite: return "finite";
    }
    return "?";
}

EntryParams ParamOverrides::apply(EntryParams base) const {
    if (kappa) base.kappa = *kappa;
    if (k0) base.k0 = *k0;
    if (k1) base.k1 = *k1;
    if (a) base.a = *a;
    if (b) base.b = *b;
    if (c) base.c = *c;
    if (d) base.d = *d;
    return base;
}

double CatalogEntry::derived_value(const std::string& key) const {
    for (const auto& [k, v] : derived)
        if (k == key) return v;
    throw ConfigError(name + " has no derived parameter '" + key + "'");
}

const std::vector<RegistryInfo>& catalog_registry() {
    static const std::vector<RegistryInfo> infos = [] {
        std::vector<RegistryInfo> out;
        for (const auto& r : registered()) out.push_back(r.info);
        return out;
    }();
    return infos;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& r : registered()) names.push_back(r.info.name);
    return names;
}

const RegistryInfo& registry_info(const std::string& name) {
    for (const auto& r : registered())
        if (r.info.name == name) return r.info;
    throw ConfigError("unknown catalog entry '" + name + "'");
}

CatalogEntry make_entry(const std::string& name, const EntryParams& params) {
    for (const auto& r : registered())
        if (r.info.name == name) return r.factory(params);
    throw ConfigError("unknown catalog entry '" + name + "'");
}

Grid Instance::grid_for_mu(double lo, double hi, std::size_t n) const {
    const auto& p = system.profile();
    return Grid(p.x_of_mu(lo), p.x_of_mu(hi), n);
}

Grid Instance::probe_grid(std::size_t n) const { return probe_window(entry, system, canonical_grid(n)); }

Instance instantiate(const std::string& name, const EntryParams& params, const MassProfile& profile) {
    CatalogEntry entry = make_entry(name, params);
    const MuImage img = profile.image();
    if (!img.covers(entry.natural_lo, entry.natural_hi)) {
        std::ostringstream msg;
        msg << name << " needs a mu-image containing [" << entry.natural_lo << ", " << entry.natural_hi
            << "] but profile '" << profile.id() << "' has image (" << img.mu_lo << ", " << img.mu_hi << ")";
        throw AdmissibilityError(msg.str());
    }
    const PhiFunction phi = solve_phi(entry.ode, entry.phi_initial, {entry.mu_lo, entry.mu_hi});
    Superpotential w = w_from_phi(entry.ode, phi);
    w.antiderivative = entry.w_antiderivative;
    w.label = name + " / " + w.label;
    FactorizedSystem system(profile, std::move(w), params.kappa);
    const double x_lo = profile.x_of_mu(entry.mu_lo);
    const double x_hi = profile.x_of_mu(entry.mu_hi);
    return {std::move(entry), std::move(system), x_lo, x_hi};
}

Grid probe_window(const CatalogEntry& entry, const FactorizedSystem& system, const Grid& grid) {
    const auto& p = system.profile();
    double mu_a = p.mu(grid.x_lo());
    double mu_b = p.mu(grid.x_hi());
    bool trimmed = false;
    if (entry.wall_lo && mu_a <= entry.natural_lo + 1e-9) {
        mu_a = entry.natural_lo + kProbeMargin;
        trimmed = true;
    }
    if (entry.wall_hi && mu_b >= entry.natural_hi - 1e-9) {
        mu_b = entry.natural_hi - kProbeMargin;
        trimmed = true;
    }
    if (!trimmed) return grid;
    return Grid(p.x_of_mu(mu_a), p.x_of_mu(mu_b), grid.n());
}

std::vector<double> closed_potential_spectrum(const CatalogEntry& entry, const FactorizedSystem& system,
                                              const Grid& grid, int k) {
    const auto& p = system.profile();
    const auto xs = grid.points();
    const auto mus = p.mu_samples(xs);
    SampledFunction u4(grid), v(grid);
    for (std::size_t i = 0; i < grid.n(); ++i) {
        const double u = p.u(xs[i]);
        u4.values[i] = u * u * u * u;
        const double vi = entry.v_closed(mus[i]) + p.mass_potential(xs[i]);
        v.values[i] = std::isfinite(vi) ? vi : 0.0;  // Dirichlet ends drop out of the matrix
    }
    const auto pairs = lowest_eigenpairs(build_divergence_hamiltonian(u4, v), k);
    std::vector<double> out;
    for (const auto& pr : pairs) out.push_back(pr.value);
    return out;
}

namespace {

CheckRecord run_check(const std::string& id, const std::string& entry, double tol,
                      const std::function<double(CheckRecord&)>& body) {
    CheckRecord r;
    r.check = id;
    r.entry = entry;
    r.tolerance = tol;
    try {
        r.measured = body(r);
        r.pass = std::isfinite(r.measured) && r.measured <= r.tolerance;
    } catch (const std::exception& ex) {
        r.measured = std::numeric_limits<double>::quiet_NaN();
        r.pass = false;
        r.notes.push_back(std::string("error: ") + ex.what());
    }
    return r;
}

// Samples on a singular wall carry no finite potential.
bool on_wall(const CatalogEntry& e, double mu) {
    const double tol = 1e-12 * std::max(1.0, e.mu_hi - e.mu_lo);
    return (e.wall_lo && std::abs(mu - e.natural_lo) <= tol) || (e.wall_hi && std::abs(mu - e.natural_hi) <= tol);
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

} // namespace

std::vector<CheckRecord> crosscheck(const CatalogEntry& entry, const FactorizedSystem& system, const Grid& grid,
                                    const CrosscheckOptions& options) {
    std::vector<CheckRecord> out;
    const auto& name = entry.name;
    const auto s = system.sample(grid);

    out.push_back(run_check("potential-offset", name, 1e-9, [&](CheckRecord& r) {
        std::vector<double> diff;
        for (std::size_t i = 0; i < grid.n(); ++i) {
            if (on_wall(entry, s.mu[i])) continue;
            const double d = s.v_tilde[i] - entry.v_closed(s.mu[i]);
            if (std::isfinite(d)) diff.push_back(d);
        }
        double mean = 0.0;
        for (double d : diff) mean += d;
        mean /= static_cast<double>(diff.size());
        double worst = 0.0;
        for (double d : diff) worst = std::max(worst, std::abs(d - mean));
        r.notes.push_back("constant offset V_generic - V_closed = " + fmt(mean));
        return worst;
    }));

    out.push_back(run_check("ground-annihilation", name, 5e-5, [&](CheckRecord& r) {
        const Grid probe = probe_window(entry, system, grid);
        const bool local = !(probe == grid);
        if (local) r.notes.push_back("probe window x in [" + fmt(probe.x_lo()) + ", " + fmt(probe.x_hi()) + "]");
        const auto gs = ground_state(system, probe, local ? TailPolicy::local_probe : TailPolicy::require_decay);
        return l2_norm(apply_annihilation(system, gs.psi0)) / l2_norm(gs.psi0);
    }));

    const auto gs = [&]() -> std::optional<GroundState> {
        try {
            return ground_state(system, grid);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }();
    double tail = 0.0;
    if (gs) tail = std::max(std::abs(gs->psi0.values.front()), std::abs(gs->psi0.values.back())) / max_abs(gs->psi0);
    const double eig_tol = std::max(1e-3, 10.0 * tail);
    out.push_back(run_check("ground-energy", name, eig_tol, [&](CheckRecord& r) {
        const double lowest = closed_potential_spectrum(entry, system, grid, 1).front();
        r.notes.push_back("lowest eigenvalue " + fmt(lowest) + ", eps0 " + fmt(entry.eps0));
        r.notes.push_back("boundary |psi0|/peak = " + fmt(tail));
        return std::abs(lowest - entry.eps0);
    }));

    out.push_back(run_check("structure-function", name, 1e-10, [&](CheckRecord&) {
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.n(); ++i) {
            if (on_wall(entry, s.mu[i])) continue;
            const double closed = entry.f_closed(s.mu[i]);
            if (!std::isfinite(closed) || !std::isfinite(s.F[i])) continue;
            worst = std::max(worst, std::abs(closed - s.F[i]) / std::max(1.0, std::abs(closed)));
        }
        return worst;
    }));

    out.push_back(run_check("hcs-closed-form", name, 1e-10, [&](CheckRecord& r) {
        const auto params = CoherentParams::hermitian(system.kappa(), cplx(0.0, options.xi_im));
        r.notes.push_back("xi = " + fmt(options.xi_im) + "i, gamma = 1/kappa");
        const auto generic = hcs_evaluate(params, system, grid);
        SampledFunction closed(grid);
        for (std::size_t i = 0; i < grid.n(); ++i) {
            const double m4 = std::pow(system.profile().mass(s.x[i]), 0.25);
            closed.values[i] = m4 * entry.hcs_closed(s.mu[i], params.xi_kappa());
        }
        const double nrm = l2_norm(closed);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.n(); ++i)
            worst = std::max(worst, std::abs(closed.values[i] / nrm - generic.values[i]));
        return worst;
    }));

    for (auto& rec : out)
        if (rec.check == "potential-offset")
            for (const auto& n : entry.notes) rec.notes.push_back(n);
    return out;
}

nlohmann::ordered_json entry_to_json(const CatalogEntry& e) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    j["class"] = e.class_id;
    j["constraint"] = e.constraint;
    j["mu_domain"] = to_string(e.domain_kind);
    j["canonical_mu"] = {e.mu_lo, e.mu_hi};
    j["params"] = {{"kappa", e.params.kappa}, {"k0", e.params.k0}, {"k1", e.params.k1}, {"a", e.params.a},
                   {"b", e.params.b},         {"c", e.params.c},   {"d", e.params.d}};
    nlohmann::ordered_json derived = nlohmann::ordered_json::object();
    for (const auto& [k, v] : e.derived) derived[k] = v;
    j["derived"] = derived;
    j["eps0"] = e.eps0;
    j["notes"] = e.notes;
    return j;
}

nlohmann::ordered_json registry_to_json() {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& info : catalog_registry()) arr.push_back(entry_to_json(make_entry(info.name, info.canonical)));
    return arr;
}

} // namespace pdm
