#include "pdm/catalog.hpp"
#include "pdm/coherent.hpp"
#include "pdm/eigen.hpp"
#include "pdm/errors.hpp"
#include "pdm/report.hpp"
#include "pdm/swanson.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using pdm::cplx;
using ojson = nlohmann::ordered_json;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct RunConfig {
    std::string command;
    std::string entry;
    std::optional<double> kappa, k0, k1, a, b, c, d;
    std::string mass;
    std::string mass_expr;
    double mass_xmin = -kInf;
    double mass_xmax = kInf;
    double mass_anchor = 0.0;
    std::optional<double> xmin, xmax;
    std::size_t n = 4097;
    std::optional<double> xi_im;
    std::string state = "hcs";
    std::string format;
    std::string output;
    std::string report;
    std::string potential = "closed";
    int k = 5;
    double alpha = 0.0;
    double beta = 0.0;
    std::string config;
};

struct Binding {
    CLI::Option* option;
    std::function<void(const nlohmann::json&)> assign;
};

using Bindings = std::map<std::string, Binding>;

template <typename T>
void bind_option(CLI::App* app, Bindings& b, const std::string& key, T& target, const std::string& help) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    CLI::Option* opt = app->add_option(flag, target, help);
    b[key] = {opt, [&target, key](const nlohmann::json& v) {
                  try {
                      if constexpr (std::is_same_v<T, std::optional<double>>) target = v.get<double>();
                      else target = v.get<T>();
                  } catch (const nlohmann::json::exception&) {
                      throw pdm::ConfigError("config key '" + key + "' has the wrong type");
                  }
              }};
}

void bind_entry_params(CLI::App* app, Bindings& b, RunConfig& cfg) {
    bind_option(app, b, "kappa", cfg.kappa, "deformation parameter kappa");
    bind_option(app, b, "k0", cfg.k0, "superpotential coefficient k0");
    bind_option(app, b, "k1", cfg.k1, "superpotential coefficient k1");
    bind_option(app, b, "a", cfg.a, "entry scale parameter a");
    bind_option(app, b, "b", cfg.b, "entry scale parameter b");
    bind_option(app, b, "c", cfg.c, "entry scale parameter c");
    bind_option(app, b, "d", cfg.d, "entry scale parameter d");
}

void bind_mass(CLI::App* app, Bindings& b, RunConfig& cfg) {
    std::string ids;
    for (const auto& id : pdm::MassProfile::bundled_ids()) ids += (ids.empty() ? "" : ", ") + id;
    bind_option(app, b, "mass", cfg.mass, "bundled mass profile: " + ids + " (default constant)");
    bind_option(app, b, "mass_expr", cfg.mass_expr, "custom mass m(x) as an expression in x");
    bind_option(app, b, "mass_xmin", cfg.mass_xmin, "lower end of the custom mass domain");
    bind_option(app, b, "mass_xmax", cfg.mass_xmax, "upper end of the custom mass domain");
    bind_option(app, b, "mass_anchor", cfg.mass_anchor, "point where mu(x) = 0 for a custom mass");
}

void bind_grid(CLI::App* app, Bindings& b, RunConfig& cfg) {
    bind_option(app, b, "xmin", cfg.xmin, "grid lower end (default: canonical domain)");
    bind_option(app, b, "xmax", cfg.xmax, "grid upper end (default: canonical domain)");
    bind_option(app, b, "n", cfg.n, "grid points, at least 64 (default 4097)");
}

void bind_common(CLI::App* app, Bindings& b, RunConfig& cfg) {
    bind_option(app, b, "output", cfg.output, "output file (default stdout)");
    app->add_option("--config", cfg.config, "JSON file with option values; command-line flags take precedence");
}

void load_config(const RunConfig& cfg, const Bindings& bindings) {
    if (cfg.config.empty()) return;
    std::ifstream in(cfg.config);
    if (!in) throw pdm::ConfigError("cannot read config file '" + cfg.config + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw pdm::ParseError("config file '" + cfg.config + "': " + e.what(), e.byte);
    }
    if (!j.is_object()) throw pdm::ConfigError("config file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "command") {
            if (value != cfg.command)
                throw pdm::ConfigError("config is for command '" + value.dump() + "', not '" + cfg.command + "'");
            continue;
        }
        auto it = bindings.find(key);
        if (it == bindings.end()) {
            if (key == "xi_im") throw pdm::ConfigError("xi_im is accepted only by the coherent command");
            throw pdm::ConfigError("config key '" + key + "' is not accepted by '" + cfg.command + "'");
        }
        if (it->second.option->count() == 0) it->second.assign(value);
    }
}

pdm::MassProfile resolve_mass(const RunConfig& cfg) {
    if (!cfg.mass_expr.empty()) {
        if (!cfg.mass.empty()) throw pdm::ConfigError("--mass and --mass-expr are mutually exclusive");
        return pdm::MassProfile::from_expression(cfg.mass_expr, cfg.mass_xmin, cfg.mass_xmax, cfg.mass_anchor);
    }
    return pdm::MassProfile::by_id(cfg.mass.empty() ? "constant" : cfg.mass);
}

std::string mass_label(const RunConfig& cfg) {
    if (!cfg.mass_expr.empty()) return cfg.mass_expr;
    return cfg.mass.empty() ? "constant" : cfg.mass;
}

pdm::ParamOverrides overrides(const RunConfig& cfg) {
    pdm::ParamOverrides o;
    o.kappa = cfg.kappa;
    o.k0 = cfg.k0;
    o.k1 = cfg.k1;
    o.a = cfg.a;
    o.b = cfg.b;
    o.c = cfg.c;
    o.d = cfg.d;
    return o;
}

bool has_overrides(const RunConfig& cfg) {
    return cfg.kappa || cfg.k0 || cfg.k1 || cfg.a || cfg.b || cfg.c || cfg.d;
}

pdm::EntryParams entry_params(const RunConfig& cfg) {
    if (cfg.entry.empty()) throw pdm::ConfigError("--entry is required");
    return overrides(cfg).apply(pdm::registry_info(cfg.entry).canonical);
}

// Grid on the instance, checked against the entry's natural mu-domain.
pdm::Grid resolve_grid(const RunConfig& cfg, const pdm::Instance& inst) {
    if (cfg.n < 64) throw pdm::ConfigError("grid needs n >= 64, got " + std::to_string(cfg.n));
    const double lo = cfg.xmin.value_or(inst.x_lo);
    const double hi = cfg.xmax.value_or(inst.x_hi);
    if (!(lo < hi)) throw pdm::ConfigError("grid requires xmin < xmax");
    const auto& p = inst.system.profile();
    const double mu_lo = p.mu(lo);
    const double mu_hi = p.mu(hi);
    const double slack = 1e-12 * std::max(1.0, std::abs(mu_hi - mu_lo));
    if (mu_lo < inst.entry.natural_lo - slack || mu_hi > inst.entry.natural_hi + slack) {
        std::ostringstream msg;
        msg << "grid maps to mu in [" << mu_lo << ", " << mu_hi << "] outside the natural domain of "
            << inst.entry.name << " [" << inst.entry.natural_lo << ", " << inst.entry.natural_hi << "]";
        throw pdm::AdmissibilityError(msg.str());
    }
    return pdm::Grid(lo, hi, cfg.n);
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw pdm::ConfigError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ojson params_json(const pdm::EntryParams& p) {
    return {{"kappa", p.kappa}, {"k0", p.k0}, {"k1", p.k1}, {"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}};
}

// ----------------------------------------------------------------- commands

int cmd_catalog_list(const RunConfig& cfg) {
    Output out(cfg.output);
    auto& os = out.stream();
    const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
    if (fmt == "json") {
        os << pdm::registry_to_json().dump(2) << "\n";
    } else if (fmt == "table") {
        char line[256];
        std::snprintf(line, sizeof line, "%-27s %-5s %-20s %-10s %s\n", "name", "class", "constraint", "mu-domain",
                      "canonical parameters");
        os << line;
        for (const auto& info : pdm::catalog_registry()) {
            const auto& p = info.canonical;
            std::ostringstream params;
            params << "kappa=" << p.kappa << " k0=" << p.k0 << " k1=" << p.k1 << " a=" << p.a << " b=" << p.b
                   << " c=" << p.c;
            std::snprintf(line, sizeof line, "%-27s %-5d %-20s %-10s %s\n", info.name.c_str(), info.class_id,
                          info.constraint.c_str(), pdm::to_string(info.domain_kind), params.str().c_str());
            os << line;
        }
    } else {
        throw pdm::ConfigError("catalog list supports --format json|table");
    }
    return 0;
}

int cmd_derive(const RunConfig& cfg) {
    if (!cfg.format.empty() && cfg.format != "csv") throw pdm::ConfigError("derive writes csv only");
    const auto profile = resolve_mass(cfg);
    const auto inst = pdm::instantiate(cfg.entry, entry_params(cfg), profile);
    const auto grid = resolve_grid(cfg, inst);
    const auto& sys = inst.system;
    const auto s = sys.sample(grid);
    const auto gs = pdm::ground_state(sys, grid);
    const auto params = pdm::CoherentParams::hermitian(sys.kappa(), cplx(0.0, 0.3));
    const auto coherent = pdm::hcs_evaluate(params, sys, grid);

    double offset = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < grid.n(); ++i) {
        const double dv = s.v_tilde[i] - inst.entry.v_closed(s.mu[i]);
        if (std::isfinite(dv)) {
            offset += dv;
            ++count;
        }
    }
    offset = count ? offset / static_cast<double>(count) : 0.0;

    Output out(cfg.output);
    auto& os = out.stream();
    const auto& p = inst.entry.params;
    os << "# " << pdm::kToolName << " " << pdm::kToolVersion << " derive entry=" << inst.entry.name
       << " mass=" << mass_label(cfg) << " kappa=" << num(p.kappa) << " k0=" << num(p.k0) << " k1=" << num(p.k1)
       << " a=" << num(p.a) << " b=" << num(p.b) << " c=" << num(p.c) << " n=" << grid.n() << "\n";
    os << "# V = (kappa+1)^2 W^2/2 - (kappa+1) W_mu/2 + (kappa+1)/2 (mass potential not included)\n";
    os << "# offset V - V_closed = " << num(offset) << "\n";
    os << "# psi_xi = normalized coherent state at xi = 0.3i, gamma = 1/kappa\n";
    os << "x,mu,m,V,psi0,re_psi_xi,im_psi_xi,F\n";
    for (std::size_t i = 0; i < grid.n(); ++i) {
        os << num(s.x[i]) << ',' << num(s.mu[i]) << ',' << num(profile.mass(s.x[i])) << ',' << num(s.v_tilde[i])
           << ',' << num(gs.psi0.values[i].real()) << ',' << num(coherent.values[i].real()) << ','
           << num(coherent.values[i].imag()) << ',' << num(s.F[i]) << "\n";
    }
    return 0;
}

int cmd_coherent(const RunConfig& cfg) {
    if (!cfg.format.empty() && cfg.format != "csv") throw pdm::ConfigError("coherent writes csv only");
    if (cfg.state != "hcs" && cfg.state != "phcs") throw pdm::ConfigError("--state must be hcs or phcs");
    const auto profile = resolve_mass(cfg);
    const auto params_entry = entry_params(cfg);
    const auto params = pdm::CoherentParams::make(params_entry.kappa, cplx(0.0, cfg.xi_im.value_or(0.0)));
    const auto inst = pdm::instantiate(cfg.entry, params_entry, profile);
    const auto grid = resolve_grid(cfg, inst);
    const auto& sys = inst.system;
    const auto psi = cfg.state == "hcs" ? pdm::hcs_evaluate(params, sys, grid) : pdm::phcs_evaluate(params, sys, grid);
    const auto mus = profile.mu_samples(grid.points());

    const auto u = pdm::uncertainty_product(params, sys, grid);
    ojson rep;
    rep["entry"] = inst.entry.name;
    rep["state"] = cfg.state;
    rep["uncertainty_state"] = "hcs";
    rep["kappa"] = params.kappa;
    rep["xi_im"] = params.xi_im;
    rep["gamma"] = params.gamma;
    rep["f_kappa"] = params.f();
    rep["lhs"] = u.lhs;
    rep["rhs"] = u.rhs;
    rep["ratio"] = u.rhs != 0.0 ? u.lhs / u.rhs : std::numeric_limits<double>::quiet_NaN();
    rep["mean_w"] = u.mean_w;
    rep["mean_pi"] = u.mean_pi;
    rep["mean_f"] = u.mean_f;
    rep["var_w"] = u.var_w;
    rep["var_pi"] = u.var_pi;
    if (!std::isfinite(rep["ratio"].get<double>())) rep["ratio"] = nullptr;

    Output out(cfg.output);
    auto& os = out.stream();
    os << "x,mu,re_psi,im_psi,abs_psi\n";
    for (std::size_t i = 0; i < grid.n(); ++i) {
        const cplx v = psi.values[i];
        os << num(grid.x(i)) << ',' << num(mus[i]) << ',' << num(v.real()) << ',' << num(v.imag()) << ','
           << num(std::abs(v)) << "\n";
    }
    if (cfg.report.empty()) {
        std::cerr << rep.dump(2) << "\n";
    } else {
        Output r(cfg.report);
        r.stream() << rep.dump(2) << "\n";
    }
    return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
    if (cfg.potential != "closed" && cfg.potential != "factorized")
        throw pdm::ConfigError("--potential must be closed or factorized");
    const auto profile = resolve_mass(cfg);
    const auto inst = pdm::instantiate(cfg.entry, entry_params(cfg), profile);
    const auto grid = resolve_grid(cfg, inst);
    std::vector<double> values;
    if (cfg.potential == "closed") {
        values = pdm::closed_potential_spectrum(inst.entry, inst.system, grid, cfg.k);
    } else {
        const auto s = inst.system.sample(grid);
        pdm::SampledFunction u4(grid), v(grid);
        for (std::size_t i = 0; i < grid.n(); ++i) {
            u4.values[i] = s.u4[i];
            const double vi = s.v_tilde[i] + s.v_mass[i];
            v.values[i] = std::isfinite(vi) ? vi : 0.0;
        }
        for (const auto& pr : pdm::lowest_eigenpairs(pdm::build_divergence_hamiltonian(u4, v), cfg.k))
            values.push_back(pr.value);
    }
    ojson j;
    j["entry"] = inst.entry.name;
    j["mass"] = mass_label(cfg);
    j["params"] = params_json(inst.entry.params);
    j["potential"] = cfg.potential;
    j["grid"] = {{"x_lo", grid.x_lo()}, {"x_hi", grid.x_hi()}, {"n", grid.n()}};
    j["eps0"] = inst.entry.eps0;
    j["eigenvalues"] = values;
    Output out(cfg.output);
    out.stream() << j.dump(2) << "\n";
    return 0;
}

int cmd_swanson(const RunConfig& cfg) {
    RunConfig local = cfg;
    if (local.entry.empty()) local.entry = "shifted-ho";
    const auto profile = resolve_mass(local);
    const auto inst = pdm::instantiate(local.entry, entry_params(local), profile);
    const auto grid = resolve_grid(local, inst);
    const pdm::SwansonSystem sys(cfg.alpha, cfg.beta, profile, inst.system.superpotential());
    const auto tests = pdm::smooth_test_suite(grid);
    const double sym = pdm::hermitize_check(sys, tests);
    const double pseudo = pdm::pseudo_hermiticity_check(sys, tests);
    const auto zeta = pdm::metric(sys).sample(grid);
    const double zeta_min = *std::min_element(zeta.begin(), zeta.end());
    const auto eig = pdm::hermitized_spectrum(sys, grid, cfg.k);

    ojson j;
    j["entry"] = inst.entry.name;
    j["mass"] = mass_label(local);
    j["alpha"] = sys.alpha();
    j["beta"] = sys.beta();
    j["omega"] = sys.omega();
    j["omega_plus"] = sys.omega_plus();
    j["grid"] = {{"x_lo", grid.x_lo()}, {"x_hi", grid.x_hi()}, {"n", grid.n()}};
    j["symmetry_defect"] = sym;
    j["pseudo_defect"] = pseudo;
    j["zeta_min"] = zeta_min;
    j["unbounded"] = sys.unbounded();
    j["eigenvalues"] = eig;
    if (auto w = sys.warning()) j["warning"] = *w;
    Output out(local.output);
    out.stream() << j.dump(2) << "\n";
    return 0;
}

unsigned thread_cap(std::size_t jobs) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PDMCS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) throw pdm::ConfigError("PDMCS_THREADS must be a positive integer");
        n = static_cast<unsigned>(std::min<long>(v, 1024));
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

int cmd_verify(const RunConfig& cfg) {
    const std::string which = cfg.entry.empty() ? "all" : cfg.entry;
    std::vector<std::string> names;
    if (which == "all") {
        if (has_overrides(cfg) || cfg.xmin || cfg.xmax)
            throw pdm::ConfigError("parameter and grid overrides need a single --entry");
        names = pdm::catalog_names();
    } else {
        pdm::registry_info(which);
        names = {which};
    }
    std::sort(names.begin(), names.end());
    if (cfg.n < 64) throw pdm::ConfigError("grid needs n >= 64, got " + std::to_string(cfg.n));
    const auto profile = resolve_mass(cfg);

    struct Job {
        std::vector<pdm::CheckRecord> records;
        std::exception_ptr error;
    };
    std::vector<Job> jobs(names.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < names.size();) {
            try {
                RunConfig one = cfg;
                one.entry = names[i];
                const auto inst = pdm::instantiate(names[i], entry_params(one), profile);
                jobs[i].records = pdm::crosscheck(inst.entry, inst.system, resolve_grid(one, inst));
            } catch (...) {
                jobs[i].error = std::current_exception();
            }
        }
    };
    const unsigned threads = thread_cap(names.size());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    pdm::VerificationReport report;
    report.config = {{"command", "verify"}, {"entry", which}, {"mass", mass_label(cfg)}, {"n", cfg.n}};
    if (which != "all") report.config["params"] = params_json(entry_params(cfg));
    for (auto& job : jobs) {
        if (job.error) std::rethrow_exception(job.error);
        for (auto& r : job.records) report.checks.push_back(std::move(r));
    }
    Output out(cfg.output);
    out.stream() << report.to_json().dump(2) << "\n";
    if (!report.all_pass()) {
        std::cerr << pdm::kToolName << ": " << report.failed() << " of " << report.checks.size()
                  << " checks failed\n";
        return static_cast<int>(pdm::ExitCode::verification);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pdmcs: position-dependent-mass factorization, coherent states and catalog verification"};
    app.require_subcommand(1);
    app.footer(
        "Exit codes:\n"
        "  0  success\n"
        "  2  configuration error (bad flag, unknown entry or mass, parse error, grid n < 64)\n"
        "  3  admissibility error (mass profile mu-image or grid incompatible with the entry's mu-domain)\n"
        "  4  verification failure (at least one check failed)\n"
        "  5  numeric error (non-normalizable state, singularity, eigensolver or quadrature failure)\n"
        "  6  parameter error (invalid kappa, e.g. kappa = +-1 for coherent states; entry constraint violated)\n"
        "Environment:\n"
        "  PDMCS_THREADS  cap on worker threads used by verify");

    RunConfig cfg;
    std::map<std::string, Bindings> bindings;

    auto* catalog = app.add_subcommand("catalog", "catalog commands");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "list registry entries");
    bind_option(list, bindings["catalog list"], "format", cfg.format, "json or table (default json)");
    bind_common(list, bindings["catalog list"], cfg);

    auto* derive = app.add_subcommand("derive", "emit mu, m, V, psi0, coherent state and F samples as CSV");
    auto* coherent = app.add_subcommand("coherent", "emit HCS or PHCS samples and an uncertainty report");
    auto* spectrum = app.add_subcommand("spectrum", "lowest eigenvalues of the divergence-form Hamiltonian");
    auto* swanson = app.add_subcommand("swanson", "pseudo-Hermitian checks for the Swanson Hamiltonian");
    auto* verify = app.add_subcommand("verify", "crosscheck suite; exit 0 iff every check passes");

    for (auto [sub, name] : {std::pair{derive, "derive"}, std::pair{coherent, "coherent"},
                             std::pair{spectrum, "spectrum"}, std::pair{swanson, "swanson"},
                             std::pair{verify, "verify"}}) {
        auto& b = bindings[name];
        bind_option(sub, b, "entry", cfg.entry,
             std::string(name) == "verify" ? "entry name or all (default all)" : "catalog entry name");
        bind_entry_params(sub, b, cfg);
        bind_mass(sub, b, cfg);
        bind_grid(sub, b, cfg);
        bind_common(sub, b, cfg);
        if (sub != verify && sub != swanson) bind_option(sub, b, "format", cfg.format, "output format");
    }
    bind_option(coherent, bindings["coherent"], "xi_im", cfg.xi_im, "imaginary part of xi (Re xi = 0)");
    bind_option(coherent, bindings["coherent"], "state", cfg.state, "hcs or phcs (default hcs)");
    bind_option(coherent, bindings["coherent"], "report", cfg.report, "uncertainty report path (default stderr)");
    bind_option(spectrum, bindings["spectrum"], "k", cfg.k, "number of eigenvalues, 1..10 (default 5)");
    bind_option(spectrum, bindings["spectrum"], "potential", cfg.potential, "closed or factorized (default closed)");
    bind_option(swanson, bindings["swanson"], "alpha", cfg.alpha, "Swanson alpha");
    bind_option(swanson, bindings["swanson"], "beta", cfg.beta, "Swanson beta");
    bind_option(swanson, bindings["swanson"], "k", cfg.k, "number of eigenvalues, 1..10 (default 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(pdm::ExitCode::config);
    }

    try {
        if (list->parsed()) {
            cfg.command = "catalog list";
            load_config(cfg, bindings[cfg.command]);
            return cmd_catalog_list(cfg);
        }
        for (auto [sub, name] : {std::pair{derive, "derive"}, std::pair{coherent, "coherent"},
                                 std::pair{spectrum, "spectrum"}, std::pair{swanson, "swanson"},
                                 std::pair{verify, "verify"}}) {
            if (!sub->parsed()) continue;
            cfg.command = name;
            load_config(cfg, bindings[name]);
            if (sub == derive) return cmd_derive(cfg);
            if (sub == coherent) return cmd_coherent(cfg);
            if (sub == spectrum) return cmd_spectrum(cfg);
            if (sub == swanson) return cmd_swanson(cfg);
            return cmd_verify(cfg);
        }
    } catch (const pdm::Error& e) {
        std::cerr << pdm::kToolName << ": error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << pdm::kToolName << ": error: " << e.what() << "\n";
        return static_cast<int>(pdm::ExitCode::config);
    } catch (const std::exception& e) {
        std::cerr << pdm::kToolName << ": error: " << e.what() << "\n";
        return static_cast<int>(pdm::ExitCode::numeric);
    }
    return 0;
}
