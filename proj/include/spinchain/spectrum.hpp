#pragma once

#include <vector>

#include "spinchain/operator_matrix.hpp"

namespace spinchain {

/// Full spectrum of a Hermitian operator. Eigenvalues ascending;
/// eigenvectors are the matching columns. Degeneracy groups partition the
/// index range by |E_i - E_j| < tol_deg.
struct SpectrumResult {
    VectorXd eigenvalues;
    MatrixXcd eigenvectors; // empty when computed eigenvalues-only
    std::vector<std::vector<int>> degeneracy_groups;
    double tol_deg = 0.0;

    bool has_vectors() const { return eigenvectors.size() > 0; }
};

/// Dense Hermitian eigensolve (divide and conquer). tol_deg <= 0 selects
/// the default 1e-8 * max|E|.
SpectrumResult diagonalize(const OperatorMatrix& h, double tol_deg = 0.0,
                           bool with_vectors = true);

/// Eigenvalues only; cheaper at large dim.
VectorXd eigenvalues_only(const OperatorMatrix& h);

/// max_i ||H v_i - E_i v_i|| over all pairs (for tests and postconditions).
double spectrum_residual(const OperatorMatrix& h, const SpectrumResult& s);

/// Regroups sorted eigenvalues with the given tolerance.
std::vector<std::vector<int>> degeneracy_groups(const VectorXd& evals, double tol);

} // namespace spinchain
