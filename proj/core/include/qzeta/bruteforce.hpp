#pragma once

#include "qzeta/series.hpp"

#include <vector>

namespace qzeta {

// Unreduced Tr q^n a_{w_1} ... a_{w_k} over the scalar Fock space spanned by
// partitions, where a_{-m} adds a part m and a_m removes one with factor
// m * multiplicity. Basis states are summed up to size N.
RSeries fock_trace_bruteforce(const std::vector<int>& word, int N);

// The same for every word of length <= max_len over the parts
// +-1, ..., +-max_part, in one pass per basis state.
std::vector<std::pair<std::vector<int>, RSeries>> fock_trace_bruteforce_all(int max_part, int max_len, int N);

struct GammaCommutationReport {
    bool plus_minus = false;   // Gamma_+(L, x) Gamma_-(L', y) = (1 - y/x)^c Gamma_-(L', y) Gamma_+(L, x)
    bool minus_minus = false;  // Gamma_-(x) Gamma_-(y) = Gamma_-(y) Gamma_-(x)
    bool plus_plus = false;    // Gamma_+(L, x) Gamma_+(L, y) = Gamma_+(L, y) Gamma_+(L, x)

    bool ok() const { return plus_minus && minus_minus && plus_plus; }
};

// Matrix identities on every basis state of size <= max_state, with the
// creation side truncated at total degree <= window. The pairing c = <L, L'>
// is realised as a_{-n}(L') = b_{-n} and a_n(L) = -c b_n in a scalar Heisenberg
// algebra [b_m, b_n] = m delta_{m,-n}.
GammaCommutationReport gamma_commutation_check(int pairing, int max_state, int window);

}  // namespace qzeta
