#include "spinchain/kink_basis.hpp"

#include "spinchain/pauli.hpp"

#include <cmath>

namespace spinchain {

KinkBasis kink_basis(const ModelParams& p, KinkKind kind) {
    const int two_n = p.two_n();
    long ref = 0;
    if (kind == KinkKind::Neel) {
        for (int s = 2; s <= two_n; s += 2) ref |= 1L << (two_n - s);
    }
    KinkBasis kb{kind, two_n, {}};
    kb.indices.reserve(std::size_t(2) * two_n);
    for (int j = 1; j <= 2 * two_n; ++j) {
        long idx = ref;
        for (int k = 1; k < j; ++k) {
            const int site = (k - 1) % two_n + 1;
            idx = flip_site(idx, site, two_n);
        }
        kb.indices.push_back(idx);
    }
    return kb;
}

TextureTable texture_projections(const SpectrumResult& spec, const KinkBasis& basis) {
    if (!spec.has_vectors())
        throw std::invalid_argument("texture_projections needs eigenvectors");
    if (spec.eigenvectors.rows() != basis.dim())
        throw std::invalid_argument("spectrum and kink basis dimensions differ");

    const int n_states = int(spec.eigenvectors.cols());
    const int n_kinks = basis.size();
    TextureTable t;
    t.alpha = MatrixXcd::Zero(n_states, n_kinks);
    t.delta = VectorXd::Zero(n_states);

    for (int i = 0; i < n_states; ++i) {
        VectorXcd psi = spec.eigenvectors.col(i);
        // phase convention: largest-modulus amplitude real positive
        Eigen::Index imax;
        psi.cwiseAbs().maxCoeff(&imax);
        const cdouble z = psi[imax];
        psi *= std::abs(z) / z;

        double overlap2 = 0.0;
        for (int j = 0; j < n_kinks; ++j) {
            const cdouble a = psi[basis.indices[j]]; // <F_j|psi> for unit basis vectors
            t.alpha(i, j) = a;
            overlap2 += std::norm(a);
        }
        t.delta[i] = std::sqrt(std::max(0.0, 1.0 - overlap2));
    }
    return t;
}

} // namespace spinchain
