#pragma once

#include <Eigen/Dense>

#include "spinchain/model_params.hpp"

namespace spinchain {

using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;
using VectorXd = Eigen::VectorXd;

enum class MatrixFlag { None, Hermitian, Unitary };

/// Dense complex operator on the full chain Hilbert space, carrying a
/// structural flag that can be verified against the matrix entries.
struct OperatorMatrix {
    MatrixXcd mat;
    MatrixFlag flag = MatrixFlag::None;

    long dim() const { return mat.rows(); }

    /// max |M - M^dag| entrywise, relative to maxabs(M).
    double hermiticity_defect() const {
        double scale = mat.cwiseAbs().maxCoeff();
        return (mat - mat.adjoint()).cwiseAbs().maxCoeff() / (scale > 0 ? scale : 1.0);
    }

    /// max |M M^dag - I| entrywise.
    double unitarity_defect() const {
        MatrixXcd d = mat * mat.adjoint() - MatrixXcd::Identity(dim(), dim());
        return d.cwiseAbs().maxCoeff();
    }

    /// Checks the flag invariant; throws numerical_error if violated.
    void verify_flag() const {
        if (flag == MatrixFlag::Hermitian && hermiticity_defect() >= 1e-12)
            throw numerical_error("matrix flagged hermitian violates invariant");
        if (flag == MatrixFlag::Unitary && unitarity_defect() >= 1e-10)
            throw numerical_error("matrix flagged unitary violates invariant");
    }
};

} // namespace spinchain
