#pragma once

#include <vector>

#include "spinchain/spectrum.hpp"

namespace spinchain {

enum class KinkKind { Ferro, Neel };

/// 4N computational-basis vectors built by cyclic successive spin flips
/// from |up...up> (Ferro) or |up down ... up down> (Neel). Stored as the
/// basis-state indices; each vector has a single unit amplitude.
struct KinkBasis {
    KinkKind kind;
    int two_n;
    std::vector<long> indices; // 4N entries

    long dim() const { return 1L << two_n; }
    int size() const { return int(indices.size()); }
};

KinkBasis kink_basis(const ModelParams& p, KinkKind kind);

/// Projection table of eigenstates onto a kink basis:
/// alpha(i,j) = <F_j|psi_i> and delta_i = ||psi_i - sum_j alpha_ij F_j||.
/// Eigenvector phases are fixed by making the largest-modulus amplitude
/// real positive before projecting.
struct TextureTable {
    MatrixXcd alpha; // rows: eigenstates, cols: kink vectors
    VectorXd delta;
};

TextureTable texture_projections(const SpectrumResult& spec, const KinkBasis& basis);

} // namespace spinchain
