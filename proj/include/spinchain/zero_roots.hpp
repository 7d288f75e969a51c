#pragma once

#include <optional>
#include <vector>

#include "spinchain/spectrum.hpp"
#include "spinchain/transfer.hpp"

namespace spinchain {

enum class RootTag { Imaginary, ConjugatePair, BoundaryString, Unknown };

/// Lambda0 and the 2N-1 zero roots of a transfer-matrix eigenvalue,
/// canonically ordered (Re ascending, then Im) with Im(z) in [-pi/2, pi/2).
struct ZeroRootSet {
    cdouble lambda0{};
    std::vector<cdouble> roots;
    std::vector<std::pair<int, int>> pairing; // indices with z_i ~ -conj(z_j)
    std::vector<RootTag> tags;
    std::vector<int> pair_order; // fitted n per root (ConjugatePair only, else 0)
};

/// Maps Im(z) into [-pi/2, pi/2); values within 1e-9 of pi/2 snap to -pi/2.
cdouble canonical_strip(cdouble z);

/// Sorts into the canonical order (Re ascending with 1e-9 ties, then Im).
void canonical_order(std::vector<cdouble>& roots);

/// Distance between roots modulo the i*pi periodicity.
double root_distance(cdouble a, cdouble b);

/// Worst-case greedy assignment distance between two root multisets.
double root_set_distance(const std::vector<cdouble>& a, const std::vector<cdouble>& b);

/// max over roots of min distance to the mirrored set {-conj(z)}; the
/// pairing defect of the z -> -z* closure.
double pairing_defect(const std::vector<cdouble>& roots);

/// Simultaneous eigenbasis of H and t(u0): within each H-degeneracy group
/// the small t(u0) block is rediagonalized. Columns replace the input
/// eigenvectors; off-diagonal residual of t(u0) in the new basis is checked.
MatrixXcd transfer_eigenbasis(const SpectrumResult& spec, const ModelParams& p, double u0 = 0.37);

/// Lambda(u_k) = <psi|t(u_k)|psi> at the sample points. The state must be
/// a simultaneous eigenvector (see transfer_eigenbasis); the off-diagonal
/// residual against other states is the caller's responsibility, but the
/// expectation itself is checked to be an eigenvalue within 1e-8.
std::vector<cdouble> lambda_on_state(const VectorXcd& state, const ModelParams& p,
                                     const std::vector<cdouble>& samples);

/// Zero roots of Lambda(u) for one state: samples Lambda at 2N points,
/// solves for the Laurent coefficients, roots the companion polynomial in
/// w = e^{2u}, and maps back into the canonical strip.
ZeroRootSet extract_zero_roots(const VectorXcd& state, const ModelParams& p);

/// Tags roots as Imaginary / ConjugatePair(n) / BoundaryString by
/// clustering real parts at 0 and +-n eta/2 (n tried in order 1,2,3,...;
/// first within 0.1 eta wins). Fills pairing, tags, pair_order.
void tag_roots(ZeroRootSet& zrs, const ModelParams& p, double tol_pair = 1e-6);

/// E from roots at staggered theta; imaginary part must fall below 1e-8.
double energy_from_roots(const ZeroRootSet& zrs, const ModelParams& p);

/// Topological momentum from roots, reduced mod 2pi to [-pi, pi).
double momentum_from_roots(const ZeroRootSet& zrs, const ModelParams& p);

/// Wraps an angle to [-pi, pi).
double wrap_angle(double k);

} // namespace spinchain
