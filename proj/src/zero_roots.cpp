#include "spinchain/zero_roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spinchain {

namespace {
constexpr double kPi = std::numbers::pi;
}

cdouble canonical_strip(cdouble z) {
    double im = std::remainder(z.imag() + kPi / 2, kPi) - kPi / 2 + (std::remainder(z.imag() + kPi / 2, kPi) < 0 ? kPi : 0);
    // std::remainder returns in [-pi/2, pi/2]; shift into [-pi/2, pi/2)
    im = z.imag();
    im = im - kPi * std::floor((im + kPi / 2) / kPi);
    if (im >= kPi / 2 - 1e-9) im -= kPi;
    return {z.real(), im};
}

void canonical_order(std::vector<cdouble>& roots) {
    std::sort(roots.begin(), roots.end(), [](cdouble a, cdouble b) {
        if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

double root_distance(cdouble a, cdouble b) {
    const cdouble d = a - b;
    double best = std::abs(d);
    best = std::min(best, std::abs(d + cdouble(0, kPi)));
    best = std::min(best, std::abs(d - cdouble(0, kPi)));
    return best;
}

double root_set_distance(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<cdouble> rest(b);
    double worst = 0.0;
    for (cdouble z : a) {
        std::size_t bi = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < rest.size(); ++i) {
            const double d = root_distance(z, rest[i]);
            if (d < bd) {
                bd = d;
                bi = i;
            }
        }
        rest.erase(rest.begin() + long(bi));
        worst = std::max(worst, bd);
    }
    return worst;
}

double pairing_defect(const std::vector<cdouble>& roots) {
    double worst = 0.0;
    for (cdouble z : roots) {
        double best = std::numeric_limits<double>::infinity();
        for (cdouble w : roots) best = std::min(best, root_distance(-std::conj(z), w));
        worst = std::max(worst, best);
    }
    return worst;
}

MatrixXcd transfer_eigenbasis(const SpectrumResult& spec, const ModelParams& p, double u0) {
    if (!spec.has_vectors()) throw std::invalid_argument("transfer_eigenbasis needs eigenvectors");
    const auto theta = staggered_theta(p);
    const MatrixXcd t0 = transfer_matrix(u0, p, theta);

    MatrixXcd out(spec.eigenvectors.rows(), spec.eigenvectors.cols());
    for (const auto& g : spec.degeneracy_groups) {
        MatrixXcd v(spec.eigenvectors.rows(), g.size());
        for (std::size_t i = 0; i < g.size(); ++i) v.col(i) = spec.eigenvectors.col(g[i]);
        if (g.size() == 1) {
            out.col(g[0]) = v.col(0);
            continue;
        }
        MatrixXcd block = v.adjoint() * t0 * v;
        Eigen::ComplexEigenSolver<MatrixXcd> es(block);
        MatrixXcd vp = v * es.eigenvectors();
        for (std::size_t i = 0; i < g.size(); ++i) out.col(g[i]) = vp.col(i).normalized();
    }

    // off-diagonal residual of t(u0) in the resolved basis
    MatrixXcd tb = out.adjoint() * t0 * out;
    const double scale = tb.cwiseAbs().maxCoeff();
    tb.diagonal().setZero();
    if (tb.cwiseAbs().maxCoeff() > 1e-8 * std::max(scale, 1.0))
        throw numerical_error("transfer eigenbasis off-diagonal residual too large");
    return out;
}

std::vector<cdouble> lambda_on_state(const VectorXcd& state, const ModelParams& p,
                                     const std::vector<cdouble>& samples) {
    const auto theta = staggered_theta(p);
    std::vector<cdouble> vals;
    vals.reserve(samples.size());
    for (cdouble u : samples) {
        const MatrixXcd t = transfer_matrix(u, p, theta);
        const VectorXcd tpsi = t * state;
        const cdouble lam = state.dot(tpsi); // <psi| t |psi>
        // eigenvector check: ||t psi - lam psi|| relative to ||t psi||
        const double res = (tpsi - lam * state).norm();
        if (res > 1e-8 * std::max(1.0, tpsi.norm()))
            throw numerical_error("state is not an eigenvector of t(u) within tolerance");
        vals.push_back(lam);
    }
    return vals;
}

ZeroRootSet extract_zero_roots(const VectorXcd& state, const ModelParams& p) {
    const int two_n = p.two_n();
    const cdouble eta = p.eta();

    for (double offset : {0.37, 0.53, 0.29}) {
        std::vector<cdouble> us(two_n);
        for (int k = 0; k < two_n; ++k) us[k] = cdouble(offset, kPi * k / two_n);
        const auto lam = lambda_on_state(state, p, us);

        // Lambda(u) = sum_m c_m e^{(2N-1-2m)u}; Vandermonde-like system
        MatrixXcd v(two_n, two_n);
        for (int k = 0; k < two_n; ++k)
            for (int m = 0; m < two_n; ++m) v(k, m) = std::exp(double(two_n - 1 - 2 * m) * us[k]);
        Eigen::PartialPivLU<MatrixXcd> lu(v);
        const double cond = v.cwiseAbs().maxCoeff() * lu.inverse().cwiseAbs().maxCoeff();
        if (cond > 1e8) continue; // resample with a new offset

        VectorXcd c = lu.solve(Eigen::Map<const VectorXcd>(lam.data(), two_n));

        // roots of P(w) = sum_m c_m w^{2N-1-m} via the companion matrix
        const int deg = two_n - 1;
        MatrixXcd comp = MatrixXcd::Zero(deg, deg);
        for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
        for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[deg - i] / c[0];
        Eigen::ComplexEigenSolver<MatrixXcd> es(comp);

        ZeroRootSet zrs;
        zrs.roots.reserve(deg);
        for (int i = 0; i < deg; ++i) {
            const cdouble w = es.eigenvalues()[i];
            zrs.roots.push_back(canonical_strip(0.5 * std::log(w) + eta / 2.0));
        }
        canonical_order(zrs.roots);

        // Lambda0 from any sample point
        cdouble prod = 1.0;
        for (cdouble z : zrs.roots) prod *= std::sinh(us[0] - z + eta / 2.0);
        zrs.lambda0 = lam[0] / prod;

        tag_roots(zrs, p);
        return zrs;
    }
    throw numerical_error("extract_zero_roots: sample matrix ill-conditioned for all offsets");
}

void tag_roots(ZeroRootSet& zrs, const ModelParams& p, double tol_pair) {
    const int n = int(zrs.roots.size());
    const double eta_r = p.eta_real();
    zrs.tags.assign(n, RootTag::Unknown);
    zrs.pair_order.assign(n, 0);
    zrs.pairing.clear();

    // pair up roots under z -> -conj(z)
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        if (std::abs(zrs.roots[i].real()) < 100 * tol_pair) {
            used[i] = true;
            zrs.tags[i] = p.regime() == Regime::EtaPlusIPi ? RootTag::BoundaryString : RootTag::Imaginary;
            continue;
        }
        int best = -1;
        double bd = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            if (j == i || used[j]) continue;
            const double d = root_distance(-std::conj(zrs.roots[i]), zrs.roots[j]);
            if (d < bd) {
                bd = d;
                best = j;
            }
        }
        if (best >= 0 && bd < 1e3 * tol_pair) {
            used[i] = used[best] = true;
            zrs.pairing.emplace_back(i, best);
            // cluster |Re| at n eta/2, n = 1, 2, ...; first within 0.1 eta wins
            const double re = std::abs(zrs.roots[i].real());
            int order = 0;
            for (int cand = 1; cand <= 2 * int(re / eta_r) + 4; ++cand) {
                if (std::abs(re - cand * eta_r / 2) < 0.1 * eta_r) {
                    order = cand;
                    break;
                }
            }
            const RootTag tag = order > 0 ? RootTag::ConjugatePair : RootTag::Unknown;
            zrs.tags[i] = zrs.tags[best] = tag;
            zrs.pair_order[i] = zrs.pair_order[best] = order;
        } else {
            used[i] = true; // unpaired off-axis root
        }
    }
}

double energy_from_roots(const ZeroRootSet& zrs, const ModelParams& p) {
    const cdouble a = p.a();
    const cdouble eta = p.eta();
    cdouble s = 0.0;
    for (cdouble z : zrs.roots) {
        const cdouble x1 = z - a - eta / 2.0;
        const cdouble x2 = z + a - eta / 2.0;
        for (cdouble x : {x1, x2})
            if (std::abs(std::sinh(x)) < 1e-12)
                throw numerical_error("energy_from_roots: root at a coth pole");
        s += 1.0 / std::tanh(x1) + 1.0 / std::tanh(x2);
    }
    const cdouble e = p.phi2a() * std::sinh(eta) * s + p.e0();
    if (std::abs(e.imag()) > 1e-8 * std::max(1.0, std::abs(e.real())))
        throw numerical_error("energy_from_roots: imaginary residue " + std::to_string(e.imag()));
    return e.real();
}

double wrap_angle(double k) {
    double w = std::fmod(k + kPi, 2 * kPi);
    if (w < 0) w += 2 * kPi;
    return w - kPi;
}

double momentum_from_roots(const ZeroRootSet& zrs, const ModelParams& p) {
    const cdouble a = p.a();
    const cdouble eta = p.eta();
    cdouble k = 0.0;
    for (cdouble z : zrs.roots) {
        const cdouble num = std::sinh(a + z - eta / 2.0);
        const cdouble den = std::sinh(a - z - eta / 2.0);
        if (std::abs(num) < 1e-12 || std::abs(den) < 1e-12)
            throw numerical_error("momentum_from_roots: logarithm at a branch point");
        k += cdouble(0, -1) * std::log(num / den);
    }
    if (std::abs(k.imag()) > 1e-8)
        throw numerical_error("momentum_from_roots: imaginary residue " + std::to_string(k.imag()));
    return wrap_angle(k.real());
}

} // namespace spinchain
