#include "spinchain/spectrum.hpp"

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace spinchain {

namespace {

VectorXd zheevd(MatrixXcd& a, bool with_vectors) {
    const lapack_int n = lapack_int(a.rows());
    VectorXd w(n);
    // Column-major storage matches Eigen's default; a is overwritten with
    // eigenvectors when requested.
    lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, with_vectors ? 'V' : 'N', 'L', n,
                                     reinterpret_cast<lapack_complex_double*>(a.data()), n, w.data());
    if (info != 0)
        throw numerical_error("zheevd failed to converge, info=" + std::to_string(info));
    return w;
}

} // namespace

std::vector<std::vector<int>> degeneracy_groups(const VectorXd& evals, double tol) {
    std::vector<std::vector<int>> groups;
    int start = 0;
    for (int i = 1; i <= evals.size(); ++i) {
        if (i == evals.size() || evals[i] - evals[i - 1] > tol) {
            std::vector<int> g;
            for (int k = start; k < i; ++k) g.push_back(k);
            groups.push_back(std::move(g));
            start = i;
        }
    }
    return groups;
}

SpectrumResult diagonalize(const OperatorMatrix& h, double tol_deg, bool with_vectors) {
    if (h.flag != MatrixFlag::Hermitian)
        throw std::invalid_argument("diagonalize requires a Hermitian-flagged matrix");
    h.verify_flag();

    MatrixXcd a = h.mat;
    SpectrumResult s;
    s.eigenvalues = zheevd(a, with_vectors);
    if (with_vectors) s.eigenvectors = std::move(a);
    const double scale = std::max(std::abs(s.eigenvalues[0]), std::abs(s.eigenvalues[s.eigenvalues.size() - 1]));
    s.tol_deg = tol_deg > 0 ? tol_deg : 1e-8 * std::max(scale, 1.0);
    s.degeneracy_groups = degeneracy_groups(s.eigenvalues, s.tol_deg);

    if (with_vectors && h.dim() <= 1024) {
        const double res = spectrum_residual(h, s);
        if (res > 1e-9 * std::max(scale, 1.0))
            throw numerical_error("eigensolve residual too large: " + std::to_string(res));
    }
    return s;
}

VectorXd eigenvalues_only(const OperatorMatrix& h) {
    if (h.flag != MatrixFlag::Hermitian)
        throw std::invalid_argument("eigenvalues_only requires a Hermitian-flagged matrix");
    MatrixXcd a = h.mat;
    return zheevd(a, false);
}

double spectrum_residual(const OperatorMatrix& h, const SpectrumResult& s) {
    double worst = 0.0;
    for (int i = 0; i < s.eigenvalues.size(); ++i) {
        VectorXcd r = h.mat * s.eigenvectors.col(i) - s.eigenvalues[i] * s.eigenvectors.col(i);
        worst = std::max(worst, r.norm());
    }
    return worst;
}

} // namespace spinchain
