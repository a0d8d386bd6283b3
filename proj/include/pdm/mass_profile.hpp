#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pdm {

// Image of the domain under mu; endpoints may be infinite.
struct MuImage {
    double mu_lo;
    double mu_hi;

    bool covers(double lo, double hi) const { return mu_lo <= lo && hi <= mu_hi; }
};

// Positive mass function m(x) with derived U = m^(-1/4) and mu(x) = int_anchor^x sqrt(m).
class MassProfile {
public:
    using Fn = std::function<double(double)>;

    struct Definition {
        std::string id;
        Fn m;
        Fn dm;             // m'
        Fn d2m;            // m''
        Fn mu_closed;      // optional
        Fn mu_inverse;     // optional, only used together with mu_closed
        double x_lo;
        double x_hi;
        double anchor;
        std::optional<MuImage> image;  // closed-form limits when known
    };

    explicit MassProfile(Definition def);

    static MassProfile constant();
    static MassProfile cauchy_squared_inverse();
    static MassProfile quartic_growth();
    static MassProfile half_line_constant();
    // Custom profile from an expression in x; m' and m'' are obtained symbolically.
    static MassProfile from_expression(const std::string& expr, double x_lo, double x_hi, double anchor,
                                       const std::string& id = "custom");
    // Bundled profile by CLI id; throws ConfigError for unknown ids.
    static MassProfile by_id(const std::string& id);
    static std::vector<std::string> bundled_ids();

    const std::string& id() const { return def_.id; }
    double x_lo() const { return def_.x_lo; }
    double x_hi() const { return def_.x_hi; }
    double anchor() const { return def_.anchor; }
    bool has_closed_mu() const { return static_cast<bool>(def_.mu_closed); }
    bool is_constant() const;

    double mass(double x) const;
    double u(double x) const;
    double u_prime(double x) const;
    double u_second(double x) const;
    // Mass potential  -U^2 U'^2 - U^3 U''/2.
    double mass_potential(double x) const;

    double mu(double x) const;
    // mu at ascending sample points; accumulates quadrature between neighbours.
    std::vector<double> mu_samples(const std::vector<double>& xs) const;
    MuImage image() const;
    // Inverse of mu; throws DomainError if mu is outside the image.
    double x_of_mu(double mu) const;

private:
    void check_domain(double x) const;
    double mu_quadrature(double from, double to) const;

    Definition def_;
    std::optional<MuImage> image_cache_;
    bool constant_ = false;
};

double u_of_x(const MassProfile& profile, double x);
double mu_of_x(const MassProfile& profile, double x);
MuImage mu_image(const MassProfile& profile);

} // namespace pdm
