#pragma once

#include "pdm/factorization.hpp"
#include "pdm/report.hpp"
#include "pdm/superpotential.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pdm {

// Parameters as named per entry: kappa, (k0, k1) and the entry's scale
// parameters (a, b, c, d); unused fields are ignored by the entry.
struct EntryParams {
    double kappa = 1.0;
    double k0 = 1.0;
    double k1 = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

struct ParamOverrides {
    std::optional<double> kappa, k0, k1, a, b, c, d;
    EntryParams apply(EntryParams base) const;
};

enum class DomainKind { full_line, half_line, finite };

const char* to_string(DomainKind kind);

struct CatalogEntry {
    std::string name;
    int class_id = 1;
    std::string constraint;   // pattern on the ODE coefficients
    DomainKind domain_kind = DomainKind::full_line;
    EntryParams params;
    std::vector<std::pair<std::string, double>> derived;
    ClassSpec ode;            // ODE coefficients with the effective k0, k1 of the generic formula
    PhiInitial phi_initial{0.0, 0.0};

    std::function<double(double)> phi_closed;
    std::function<double(double)> w_closed;
    std::function<double(double)> w_antiderivative;
    std::function<double(double)> v_closed;
    std::function<double(double)> f_closed;
    // (mu, xi_kappa) -> displacement phase times ground factor, without m^(1/4)
    std::function<cplx(double, cplx)> hcs_closed;
    double eps0 = 0.0;

    // canonical truncated mu-domain and which ends are singular walls
    double mu_lo = 0.0;
    double mu_hi = 0.0;
    bool wall_lo = false;
    bool wall_hi = false;
    // natural domain, used for admissibility and user grids
    double natural_lo = 0.0;
    double natural_hi = 0.0;

    std::vector<std::string> notes;

    double derived_value(const std::string& key) const;
};

struct RegistryInfo {
    std::string name;
    int class_id;
    std::string constraint;
    DomainKind domain_kind;
    EntryParams canonical;
};

const std::vector<RegistryInfo>& catalog_registry();
std::vector<std::string> catalog_names();
// Throws ConfigError for unknown names.
const RegistryInfo& registry_info(const std::string& name);

// Builds an entry with derived parameters; throws ParameterError on constraint violations.
CatalogEntry make_entry(const std::string& name, const EntryParams& params);

struct Instance {
    CatalogEntry entry;
    FactorizedSystem system;
    double x_lo;  // canonical x-domain on the chosen profile
    double x_hi;

    Grid canonical_grid(std::size_t n) const { return Grid(x_lo, x_hi, n); }
    Grid probe_grid(std::size_t n) const;
    // Grid for an arbitrary mu interval on the chosen profile.
    Grid grid_for_mu(double mu_lo, double mu_hi, std::size_t n) const;
};

// Generic pipeline: solve_phi + w_from_phi on the entry's class spec, antiderivative
// from the entry. Throws AdmissibilityError when the profile's mu-image does not
// contain the entry's natural domain.
Instance instantiate(const std::string& name, const EntryParams& params, const MassProfile& profile);

// Margin in mu kept away from singular walls by the local operator checks.
inline constexpr double kProbeMargin = 0.5;

// Probe window: grid trimmed by kProbeMargin in mu at ends that sit on a wall.
Grid probe_window(const CatalogEntry& entry, const FactorizedSystem& system, const Grid& grid);

struct CrosscheckOptions {
    double xi_im = 0.3;
};

// Five checks: potential offset, ground annihilation, ground energy,
// structure function and closed-form coherent state.
std::vector<CheckRecord> crosscheck(const CatalogEntry& entry, const FactorizedSystem& system, const Grid& grid,
                                    const CrosscheckOptions& options = {});

// Lowest eigenvalues of -1/2 d/dx U^4 d/dx + v_closed + mass potential on grid.
std::vector<double> closed_potential_spectrum(const CatalogEntry& entry, const FactorizedSystem& system,
                                              const Grid& grid, int k);

nlohmann::ordered_json entry_to_json(const CatalogEntry& entry);
nlohmann::ordered_json registry_to_json();

} // namespace pdm
