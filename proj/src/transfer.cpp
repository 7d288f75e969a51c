#include "spinchain/transfer.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

namespace spinchain {

Matrix4cd r_matrix(cdouble u, const ModelParams& p) {
    const cdouble e = p.eta();
    const cdouble sh = std::sinh(e);
    if (std::abs(sh) < 1e-14) throw std::invalid_argument("r_matrix requires sinh(eta) != 0");
    const cdouble a1 = std::sinh(u + e) / sh;
    const cdouble b1 = std::sinh(u) / sh;
    Matrix4cd r = Matrix4cd::Zero();
    r(0, 0) = a1;
    r(1, 1) = b1;
    r(1, 2) = 1.0;
    r(2, 1) = 1.0;
    r(2, 2) = b1;
    r(3, 3) = a1;
    return r;
}

namespace {

const Eigen::Matrix2cd kPauli[3] = {
    (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(),
    (Eigen::Matrix2cd() << 0, cdouble(0, -1), cdouble(0, 1), 0).finished(),
    (Eigen::Matrix2cd() << 1, 0, 0, -1).finished(),
};

Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    return Eigen::kroneckerProduct(a, b);
}

Matrix4cd permutation4() {
    Matrix4cd pm = Matrix4cd::Zero();
    pm(0, 0) = pm(3, 3) = 1.0;
    pm(1, 2) = pm(2, 1) = 1.0;
    return pm;
}

// Partial transpose in the second (quantum) factor.
Matrix4cd transpose_second(const Matrix4cd& m) {
    Matrix4cd t;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int s = 0; s < 2; ++s)
                for (int q = 0; q < 2; ++q) t(a * 2 + s, b * 2 + q) = m(a * 2 + q, b * 2 + s);
    return t;
}

// R acting on spaces (j,l) of a 3-site chain 0,1,2 (dims 2^3).
Eigen::MatrixXcd embed3(const Matrix4cd& r, int j, int l) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
    for (int row = 0; row < 8; ++row) {
        const int rb[3] = {(row >> 2) & 1, (row >> 1) & 1, row & 1};
        for (int col = 0; col < 8; ++col) {
            const int cb[3] = {(col >> 2) & 1, (col >> 1) & 1, col & 1};
            bool same = true;
            for (int k = 0; k < 3; ++k)
                if (k != j && k != l && rb[k] != cb[k]) same = false;
            if (!same) continue;
            m(row, col) = r(rb[j] * 2 + rb[l], cb[j] * 2 + cb[l]);
        }
    }
    return m;
}

} // namespace

RPropertyReport r_property_suite(const ModelParams& p, const std::vector<cdouble>& samples) {
    RPropertyReport rep;
    const Matrix4cd perm = permutation4();
    const Matrix4cd vmat = kron2(cdouble(0, -1) * kPauli[1], Eigen::Matrix2cd::Identity());
    const cdouble e = p.eta();

    rep.initial_condition = (r_matrix(0.0, p) - perm).cwiseAbs().maxCoeff();
    rep.fusion = (r_matrix(-e, p) - (perm - Matrix4cd::Identity())).cwiseAbs().maxCoeff();

    for (cdouble u : samples) {
        const Matrix4cd r = r_matrix(u, p);

        // R_{0j}(u) R_{j0}(-u) = phi(u) id, with R_{j0} = P R P
        const Matrix4cd rj0 = perm * r_matrix(-u, p) * perm;
        rep.unitarity = std::max(rep.unitarity, (r * rj0 - p.phi(u) * Matrix4cd::Identity()).cwiseAbs().maxCoeff());

        // crossing: R(u) = V R^{t_j}(-u-eta) V
        const Matrix4cd cr = vmat * transpose_second(r_matrix(-u - e, p)) * vmat;
        rep.crossing = std::max(rep.crossing, (r - cr).cwiseAbs().maxCoeff());

        // PT symmetry: R_{0j} = R_{j0} = R^{t0 tj}
        rep.pt_symmetry = std::max(rep.pt_symmetry, (r - perm * r * perm).cwiseAbs().maxCoeff());
        rep.pt_symmetry = std::max(rep.pt_symmetry, (r - r.transpose()).cwiseAbs().maxCoeff());

        // Z2: [sigma^a (x) sigma^a, R] = 0
        for (const auto& s : kPauli) {
            const Matrix4cd ss = kron2(s, s);
            rep.z2_symmetry = std::max(rep.z2_symmetry, (ss * r - r * ss).cwiseAbs().maxCoeff());
        }

        // quasi-periodicity: R(u + i pi) = -sigma^z_0 R(u) sigma^z_0
        const Matrix4cd sz0 = kron2(kPauli[2], Eigen::Matrix2cd::Identity());
        rep.quasi_periodicity = std::max(
            rep.quasi_periodicity,
            (r_matrix(u + cdouble(0, std::numbers::pi), p) + sz0 * r * sz0).cwiseAbs().maxCoeff());
    }

    // Yang-Baxter on 3 sites at sample triples
    for (std::size_t k = 0; k + 2 < samples.size(); k += 3) {
        const cdouble u1 = samples[k], u2 = samples[k + 1], u3 = samples[k + 2];
        const auto r01 = embed3(r_matrix(u1 - u2, p), 0, 1);
        const auto r02 = embed3(r_matrix(u1 - u3, p), 0, 2);
        const auto r12 = embed3(r_matrix(u2 - u3, p), 1, 2);
        rep.yang_baxter = std::max(rep.yang_baxter, (r01 * r02 * r12 - r12 * r02 * r01).cwiseAbs().maxCoeff());
    }
    return rep;
}

std::vector<cdouble> staggered_theta(const ModelParams& p) {
    std::vector<cdouble> th(p.two_n());
    for (int j = 1; j <= p.two_n(); ++j) th[j - 1] = (j % 2 == 0 ? p.a() : -p.a());
    return th;
}

MatrixXcd transfer_matrix(cdouble u, const ModelParams& p, const std::vector<cdouble>& theta,
                          TransferKind kind) {
    const int two_n = p.two_n();
    if (int(theta.size()) != two_n) throw std::invalid_argument("theta size must equal two_n");
    if (two_n > 14) throw std::invalid_argument("transfer_matrix: two_n > 14 rejected");

    // 2x2 block representation over the auxiliary space; blocks act on the
    // growing quantum space.
    MatrixXcd blk[2][2];
    blk[0][0] = blk[1][1] = MatrixXcd::Identity(1, 1);
    blk[0][1] = blk[1][0] = MatrixXcd::Zero(1, 1);

    auto r_blocks = [&](cdouble arg, Eigen::Matrix2cd out[2][2]) {
        const Matrix4cd r = r_matrix(arg, p);
        for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c) out[a][c] = r.block<2, 2>(a * 2, c * 2);
    };

    if (kind == TransferKind::T) {
        for (int j = 1; j <= two_n; ++j) {
            Eigen::Matrix2cd r[2][2];
            r_blocks(u - theta[j - 1], r);
            MatrixXcd next[2][2];
            for (int a = 0; a < 2; ++a)
                for (int c = 0; c < 2; ++c)
                    next[a][c] = Eigen::kroneckerProduct(blk[a][0], r[0][c]) +
                                 Eigen::kroneckerProduct(blk[a][1], r[1][c]);
            for (int a = 0; a < 2; ++a)
                for (int c = 0; c < 2; ++c) blk[a][c] = std::move(next[a][c]);
        }
    } else {
        // t_hat: product runs from site 2N down to 1; the new site joins on
        // the left of the accumulated factors.
        for (int j = two_n; j >= 1; --j) {
            Eigen::Matrix2cd r[2][2];
            r_blocks(u + theta[j - 1], r);
            MatrixXcd next[2][2];
            for (int a = 0; a < 2; ++a)
                for (int c = 0; c < 2; ++c)
                    next[a][c] = Eigen::kroneckerProduct(r[0][c], blk[a][0]) +
                                 Eigen::kroneckerProduct(r[1][c], blk[a][1]);
            for (int a = 0; a < 2; ++a)
                for (int c = 0; c < 2; ++c) blk[a][c] = std::move(next[a][c]);
        }
    }
    // trace after the sigma^x twist in the auxiliary space
    return blk[1][0] + blk[0][1];
}

OperatorMatrix reconstruct_hamiltonian(const ModelParams& p, double h) {
    const auto theta = staggered_theta(p);
    const cdouble a = p.a();
    const double n = double(p.n());

    auto deriv = [&](cdouble at, double step) {
        return ((transfer_matrix(at + step, p, theta) - transfer_matrix(at - step, p, theta)) / (2.0 * step))
            .eval();
    };
    auto assemble = [&](double step) {
        MatrixXcd hm = transfer_matrix(-a, p, theta, TransferKind::THat) * deriv(a, step) +
                       transfer_matrix(a, p, theta, TransferKind::THat) * deriv(-a, step);
        hm *= -std::pow(p.phi2a(), cdouble(1.0 - n)) * std::sinh(p.eta());
        hm += p.e0() * MatrixXcd::Identity(p.dim(), p.dim());
        return hm;
    };

    MatrixXcd h1 = assemble(h);
    MatrixXcd h2 = assemble(h / 2);
    if ((h1 - h2).cwiseAbs().maxCoeff() > 1e-6)
        throw numerical_error("finite-difference step cancellation in reconstruction");

    OperatorMatrix out;
    out.mat = std::move(h2);
    out.flag = MatrixFlag::Hermitian;
    return out;
}

OperatorMatrix shift_operator(const ModelParams& p) {
    const auto theta = staggered_theta(p);
    const cdouble a = p.a();
    OperatorMatrix u;
    u.mat = std::pow(p.phi2a(), cdouble(-double(p.n()))) *
            (transfer_matrix(a, p, theta) * transfer_matrix(-a, p, theta));
    u.flag = MatrixFlag::Unitary;
    u.verify_flag();
    return u;
}

} // namespace spinchain
