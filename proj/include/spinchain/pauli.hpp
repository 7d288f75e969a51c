#pragma once

#include "spinchain/operator_matrix.hpp"

namespace spinchain {

/// Pauli axis label.
enum class Axis { X = 0, Y = 1, Z = 2 };

/// Action of sigma^axis on a single bit (0 = up, 1 = down):
/// returns {flipped bit, amplitude}.
inline std::pair<int, cdouble> pauli_bit(Axis axis, int bit) {
    switch (axis) {
    case Axis::X: return {1 - bit, cdouble(1, 0)};
    case Axis::Y: return {1 - bit, bit == 0 ? cdouble(0, 1) : cdouble(0, -1)};
    default: return {bit, bit == 0 ? cdouble(1, 0) : cdouble(-1, 0)};
    }
}

/// Bit of site j (1-based) in basis index idx; site 1 is the leftmost
/// tensor factor and therefore the most significant bit.
inline int site_bit(long idx, int j, int two_n) { return int((idx >> (two_n - j)) & 1L); }

inline long flip_site(long idx, int j, int two_n) { return idx ^ (1L << (two_n - j)); }

/// Dense sigma^axis_j on two_n sites (identity elsewhere). For tests and
/// small operator assembly; dim grows as 2^two_n.
MatrixXcd site_operator(Axis axis, int j, int two_n);

/// Two-site translation composed with the antiperiodic boundary twist,
/// built directly on basis states: spins shift left by two sites and the
/// two that wrap get flipped.
MatrixXcd translation_twist(int two_n);

} // namespace spinchain
