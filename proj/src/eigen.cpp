#include "pdm/eigen.hpp"

#include "pdm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace pdm {

std::vector<double> TridiagonalSymmetric::apply(const std::vector<double>& v) const {
    const std::size_t n = diag.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = diag[i] * v[i];
        if (i > 0) s += offdiag[i - 1] * v[i - 1];
        if (i + 1 < n) s += offdiag[i] * v[i + 1];
        out[i] = s;
    }
    return out;
}

TridiagonalSymmetric build_divergence_hamiltonian(const SampledFunction& u4, const SampledFunction& v) {
    if (!(u4.grid == v.grid)) throw InputError("u4 and v live on different grids");
    const std::size_t n = u4.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!(u4.values[i].real() > 0.0))
            throw InputError("non-positive u4 sample at index " + std::to_string(i));
    }
    const double h = u4.grid.h();
    const double c = 1.0 / (2.0 * h * h);
    std::vector<double> half(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) half[i] = 0.5 * (u4.values[i].real() + u4.values[i + 1].real());

    TridiagonalSymmetric mat;
    mat.spacing = h;
    const std::size_t m = n - 2;
    mat.diag.resize(m);
    mat.offdiag.resize(m - 1);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t i = j + 1;
        const double vi = v.values[i].real();
        if (!std::isfinite(vi)) throw InputError("non-finite potential at interior index " + std::to_string(i));
        mat.diag[j] = (half[i - 1] + half[i]) * c + vi;
        if (j + 1 < m) mat.offdiag[j] = -half[i] * c;
    }
    return mat;
}

std::size_t sturm_count(const TridiagonalSymmetric& mat, double x) {
    const std::size_t n = mat.size();
    constexpr double pivmin = std::numeric_limits<double>::min() * 1e4;
    std::size_t count = 0;
    double q = mat.diag[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        const double e = mat.offdiag[i - 1];
        q = (mat.diag[i] - x) - e * e / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0) ++count;
    }
    return count;
}

namespace {

double bisect(const TridiagonalSymmetric& mat, std::size_t index, double lo, double hi) {
    // invariant: count(lo) <= index < count(hi)
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        if (sturm_count(mat, mid) > index) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Solves (T - sigma I) y = b with partial pivoting; the factorization has
// an upper band of width two after row swaps.
std::vector<double> shifted_solve(const TridiagonalSymmetric& mat, double sigma, std::vector<double> b,
                                  double tiny) {
    const std::size_t n = mat.size();
    std::vector<double> d(n), u1(n, 0.0), u2(n, 0.0), l(n, 0.0);
    std::vector<char> swapped(n, 0);
    // working rows: current row (d[i], u1[i], u2[i]) and next subdiagonal
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = mat.diag[i] - sigma;
        if (i + 1 < n) u1[i] = mat.offdiag[i];
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double sub = mat.offdiag[i];
        if (std::abs(sub) > std::abs(d[i])) {
            // swap rows i and i+1
            swapped[i] = 1;
            const double r_d = sub;
            const double r_u1 = d[i + 1];
            const double r_u2 = (i + 2 < n) ? mat.offdiag[i + 1] : 0.0;
            const double factor = d[i] / r_d;
            l[i] = factor;
            const double nd = u1[i] - factor * r_u1;
            const double nu1 = u2[i] - factor * r_u2;
            d[i] = r_d;
            u1[i] = r_u1;
            u2[i] = r_u2;
            d[i + 1] = nd;
            if (i + 1 < n - 1) u1[i + 1] = nu1;
            std::swap(b[i], b[i + 1]);
        } else {
            if (d[i] == 0.0) d[i] = tiny;
            const double factor = sub / d[i];
            l[i] = factor;
            d[i + 1] -= factor * u1[i];
            if (i + 1 < n - 1) u1[i + 1] -= factor * u2[i];
        }
        b[i + 1] -= l[i] * b[i];
    }
    if (d[n - 1] == 0.0) d[n - 1] = tiny;
    std::vector<double> y(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        if (ii + 1 < n) s -= u1[ii] * y[ii + 1];
        if (ii + 2 < n) s -= u2[ii] * y[ii + 2];
        const double piv = std::abs(d[ii]) < tiny ? (d[ii] < 0 ? -tiny : tiny) : d[ii];
        y[ii] = s / piv;
    }
    return y;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void scale_unit(std::vector<double>& v) {
    const double nrm = std::sqrt(dot(v, v));
    for (auto& x : v) x /= nrm;
}

} // namespace

std::vector<Eigenpair> lowest_eigenpairs(const TridiagonalSymmetric& mat, int k) {
    const std::size_t n = mat.size();
    if (n == 0) throw InputError("empty matrix");
    if (mat.offdiag.size() + 1 != n) throw InputError("offdiagonal length must be size-1");
    if (k < 1 || k > 10) throw InputError("lowest_eigenpairs supports 1 <= k <= 10");
    if (static_cast<std::size_t>(k) > n) throw InputError("k exceeds matrix size");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(mat.offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(mat.offdiag[i]);
        lo = std::min(lo, mat.diag[i] - r);
        hi = std::max(hi, mat.diag[i] + r);
        norm = std::max(norm, std::abs(mat.diag[i]) + r);
    }
    const double pad = 1e-10 * std::max(1.0, norm);
    lo -= pad;
    hi += pad;

    std::vector<double> values(k);
    for (int j = 0; j < k; ++j) values[j] = bisect(mat, static_cast<std::size_t>(j), lo, hi);

    const double eps = std::numeric_limits<double>::epsilon();
    const double tiny = eps * std::max(1.0, norm);
    const double cluster_gap = 1e-3 * std::max(1.0, norm);

    std::vector<Eigenpair> out;
    std::uint64_t state = 0x9E3779B97F4A7C15ULL;
    for (int j = 0; j < k; ++j) {
        const double lambda = values[j];
        std::vector<double> v(n);
        for (auto& x : v) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            x = 0.5 + static_cast<double>(state >> 11) / 9007199254740992.0;
        }
        scale_unit(v);
        double residual = std::numeric_limits<double>::infinity();
        const double target = std::max(1e-10 * std::max(1.0, std::abs(lambda)), 8.0 * eps * norm);
        for (int it = 0; it < 12 && residual > target; ++it) {
            v = shifted_solve(mat, lambda, v, tiny);
            for (const auto& prev : out) {
                if (std::abs(prev.value - lambda) > cluster_gap) continue;
                const double c = dot(prev.vector, v) * mat.spacing;
                for (std::size_t i = 0; i < n; ++i) v[i] -= c * prev.vector[i];
            }
            scale_unit(v);
            const auto av = mat.apply(v);
            double r2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) r2 += (av[i] - lambda * v[i]) * (av[i] - lambda * v[i]);
            residual = std::sqrt(r2);
        }
        if (!(residual <= 1e-8)) throw EigenSolverError("inverse iteration stagnated", j);
        std::size_t imax = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
        const double s = (v[imax] < 0 ? -1.0 : 1.0) / std::sqrt(mat.spacing);
        for (auto& x : v) x *= s;
        out.push_back({lambda, std::move(v)});
    }
    return out;
}

SampledFunction embed_dirichlet(const Eigenpair& pair, const Grid& grid) {
    if (pair.vector.size() + 2 != grid.n()) throw InputError("eigenvector does not match grid interior");
    SampledFunction out(grid);
    for (std::size_t i = 0; i < pair.vector.size(); ++i) out.values[i + 1] = pair.vector[i];
    return out;
}

} // namespace pdm
