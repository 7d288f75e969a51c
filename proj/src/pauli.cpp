#include "spinchain/pauli.hpp"

namespace spinchain {

MatrixXcd site_operator(Axis axis, int j, int two_n) {
    const long dim = 1L << two_n;
    MatrixXcd m = MatrixXcd::Zero(dim, dim);
    for (long col = 0; col < dim; ++col) {
        auto [nb, amp] = pauli_bit(axis, site_bit(col, j, two_n));
        long row = (nb != site_bit(col, j, two_n)) ? flip_site(col, j, two_n) : col;
        m(row, col) += amp;
    }
    return m;
}

MatrixXcd translation_twist(int two_n) {
    const long dim = 1L << two_n;
    MatrixXcd m = MatrixXcd::Zero(dim, dim);
    for (long col = 0; col < dim; ++col) {
        long row = 0;
        for (int j = 1; j <= two_n - 2; ++j)
            row |= long(site_bit(col, j + 2, two_n)) << (two_n - j);
        row |= long(1 - site_bit(col, 1, two_n)) << 1;
        row |= long(1 - site_bit(col, 2, two_n));
        m(row, col) = 1.0;
    }
    return m;
}

} // namespace spinchain
