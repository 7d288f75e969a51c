#pragma once

#include <vector>

#include "spinchain/operator_matrix.hpp"
#include "spinchain/pauli.hpp"

namespace spinchain {

/// One multi-site Pauli product term: coeff * prod_k sigma^{axis_k}_{site_k},
/// sites already wrapped into 1..two_n with twist signs absorbed into coeff.
struct PauliTerm {
    cdouble coeff;
    std::vector<std::pair<int, Axis>> factors;
};

/// The antiperiodic chain Hamiltonian as a term list (wrap rule applied).
std::vector<PauliTerm> hamiltonian_terms(const ModelParams& p);

/// Dense Hamiltonian assembled from the term list; flagged Hermitian.
OperatorMatrix build_hamiltonian(const ModelParams& p);

} // namespace spinchain
