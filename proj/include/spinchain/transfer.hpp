#pragma once

#include <vector>

#include "spinchain/operator_matrix.hpp"

namespace spinchain {

using Matrix4cd = Eigen::Matrix4cd;

/// Six-vertex R-matrix on auxiliary (x) quantum, basis {00,01,10,11}.
Matrix4cd r_matrix(cdouble u, const ModelParams& p);

/// Residuals of the R-matrix identity suite at the given sample points.
struct RPropertyReport {
    double initial_condition = 0.0;
    double unitarity = 0.0;
    double crossing = 0.0;
    double pt_symmetry = 0.0;
    double z2_symmetry = 0.0;
    double quasi_periodicity = 0.0;
    double fusion = 0.0;
    double yang_baxter = 0.0;

    double worst() const {
        double w = initial_condition;
        for (double v : {unitarity, crossing, pt_symmetry, z2_symmetry, quasi_periodicity, fusion, yang_baxter})
            w = std::max(w, v);
        return w;
    }
};

RPropertyReport r_property_suite(const ModelParams& p, const std::vector<cdouble>& samples);

/// Staggered inhomogeneities theta_j = (-1)^j i b, j = 1..2N.
std::vector<cdouble> staggered_theta(const ModelParams& p);

enum class TransferKind { T, THat };

/// Transfer matrix t(u) (or t_hat(u)) at the given inhomogeneities.
MatrixXcd transfer_matrix(cdouble u, const ModelParams& p, const std::vector<cdouble>& theta,
                          TransferKind kind = TransferKind::T);

/// Hamiltonian reconstructed from transfer matrices by central finite
/// differences (step h, Richardson-checked at h/2).
OperatorMatrix reconstruct_hamiltonian(const ModelParams& p, double h = 1e-5);

/// Two-site shift operator U = phi(2a)^{-N} t(a) t(-a); flagged unitary.
OperatorMatrix shift_operator(const ModelParams& p);

} // namespace spinchain
