#pragma once

#include "pdm/grid.hpp"

#include <vector>

namespace pdm {

struct TridiagonalSymmetric {
    std::vector<double> diag;
    std::vector<double> offdiag;  // length diag.size() - 1
    double spacing = 1.0;         // weight of the discrete L2 norm used for eigenvectors

    std::size_t size() const { return diag.size(); }
    std::vector<double> apply(const std::vector<double>& v) const;
};

// -1/2 d/dx u4 d/dx + v on the interior points of the grid (Dirichlet ends),
// with u4 averaged to half-points.
TridiagonalSymmetric build_divergence_hamiltonian(const SampledFunction& u4, const SampledFunction& v);

struct Eigenpair {
    double value;
    std::vector<double> vector;  // spacing * sum v^2 = 1, largest component positive
};

// k smallest eigenpairs by Sturm bisection and inverse iteration (k <= 10).
std::vector<Eigenpair> lowest_eigenpairs(const TridiagonalSymmetric& mat, int k);

// Number of eigenvalues strictly below x.
std::size_t sturm_count(const TridiagonalSymmetric& mat, double x);

// Eigenvector of a divergence Hamiltonian as a function on the full grid (zeros at the walls).
SampledFunction embed_dirichlet(const Eigenpair& pair, const Grid& grid);

} // namespace pdm
