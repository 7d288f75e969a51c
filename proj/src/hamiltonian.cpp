#include "spinchain/hamiltonian.hpp"

namespace spinchain {

namespace {

// Wraps a site index past the boundary; the twist flips the sign of
// sigma^y and sigma^z while sigma^x is unchanged.
std::pair<int, double> wrap_site(int j, Axis axis, int two_n) {
    if (j <= two_n) return {j, 1.0};
    return {j - two_n, axis == Axis::X ? 1.0 : -1.0};
}

// Levi-Civita triples (alpha, beta, gamma, sign) with nonzero sign.
constexpr struct {
    Axis a, b, c;
    double s;
} kEps[6] = {
    {Axis::X, Axis::Y, Axis::Z, 1},  {Axis::Y, Axis::Z, Axis::X, 1},  {Axis::Z, Axis::X, Axis::Y, 1},
    {Axis::X, Axis::Z, Axis::Y, -1}, {Axis::Z, Axis::Y, Axis::X, -1}, {Axis::Y, Axis::X, Axis::Z, -1},
};

} // namespace

std::vector<PauliTerm> hamiltonian_terms(const ModelParams& p) {
    const int two_n = p.two_n();
    const cdouble j1[3] = {p.j1x(), p.j1x(), p.j1z()};
    const cdouble j3[3] = {p.j3x(), p.j3x(), p.j3z()};

    std::vector<PauliTerm> terms;
    terms.reserve(std::size_t(two_n) * 12);
    for (int j = 1; j <= two_n; ++j) {
        for (int ax = 0; ax < 3; ++ax) {
            const Axis al = Axis(ax);
            auto [s1, g1] = wrap_site(j, al, two_n);
            auto [s2, g2] = wrap_site(j + 1, al, two_n);
            terms.push_back({-j1[ax] * g1 * g2, {{s1, al}, {s2, al}}});
            auto [t2, h2] = wrap_site(j + 2, al, two_n);
            terms.push_back({-p.j2() * g1 * h2, {{s1, al}, {t2, al}}});
        }
        const double stag = (j % 2 == 0) ? 1.0 : -1.0;
        for (const auto& e : kEps) {
            auto [sm, gm] = wrap_site(j + 1, e.a, two_n);
            auto [sb, gb] = wrap_site(j, e.b, two_n);
            auto [sg, gg] = wrap_site(j + 2, e.c, two_n);
            terms.push_back({-stag * j3[int(e.a)] * e.s * gm * gb * gg, {{sm, e.a}, {sb, e.b}, {sg, e.c}}});
        }
    }
    return terms;
}

OperatorMatrix build_hamiltonian(const ModelParams& p) {
    const int two_n = p.two_n();
    const long dim = p.dim();
    const auto terms = hamiltonian_terms(p);

    OperatorMatrix h;
    h.mat = MatrixXcd::Zero(dim, dim);
    for (long col = 0; col < dim; ++col) {
        for (const auto& t : terms) {
            long row = col;
            cdouble amp = t.coeff;
            for (auto [site, axis] : t.factors) {
                const int bit = site_bit(row, site, two_n);
                auto [nb, a] = pauli_bit(axis, bit);
                if (nb != bit) row = flip_site(row, site, two_n);
                amp *= a;
            }
            h.mat(row, col) += amp;
        }
    }
    h.flag = MatrixFlag::Hermitian;
    h.verify_flag();
    return h;
}

} // namespace spinchain
