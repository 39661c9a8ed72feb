#pragma once

#include "qzeta/lambert.hpp"
#include "qzeta/operators.hpp"

#include <stdexcept>
#include <vector>

namespace qzeta {

struct TraceOptions {
    // Skip words whose total bidegree is nonzero (projective, homogeneous classes only).
    bool bidegree_filter = true;
};

class TraceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reduced trace Tr q^n prod_i A_i divided by Tr q^n; the empty word gives 1.
// Exact as a Lambert sum for every coefficient up to q^cap.
PLambertSum trace_product_terms(const OperatorWord& word, const SurfaceModel& surface, int cap,
                                const TraceOptions& options = {});
PSeries trace_product(const OperatorWord& word, const SurfaceModel& surface, int N, const TraceOptions& options = {});

// Reduced Tr q^n W(L_1, z) prod_i A_i at z^0. Words with nonzero total size
// give 0.
PSeries vertex_trace(const OperatorWord& word, const SurfaceModel& surface, int N);
PSeries vertex_trace(const WordSum& words, const SurfaceModel& surface, int N);

// Reduced Tr q^n Gamma_-(z)^m Gamma_+(z)^{-m} prod_i A_i on the point model,
// as the coefficients of m^0, m^1, ... (trailing zero coefficients trimmed,
// at least one entry).
std::vector<RSeries> gamma_trace_coefficients(const WordSum& words, int N);
RSeries gamma_trace(long m, const WordSum& words, int N);
RSeries gamma_trace(long m, const OperatorWord& word, int N);

// Evaluates a polynomial in m with series coefficients.
RSeries eval_m_polynomial(const std::vector<RSeries>& coeffs, long m);

}  // namespace qzeta
