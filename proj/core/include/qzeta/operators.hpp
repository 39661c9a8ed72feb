#pragma once

#include "qzeta/partition.hpp"
#include "qzeta/surface.hpp"

#include <map>
#include <vector>

namespace qzeta {

// a_lambda(alpha), or a_lambda(alpha) / lambda! when normalized. The parts act
// in ascending order. An empty partition stands for the scalar integral of
// the class.
struct DecoratedOp {
    GenPartition partition;
    CohClass cls;
    bool normalized = false;

    // 1 or 1/lambda!
    Rational normalization() const;
};

struct OpTerm {
    Rational coeff;
    DecoratedOp op;
};

using OpSum = std::vector<OpTerm>;
using OperatorWord = std::vector<DecoratedOp>;

// Weighted sum of words; the product of operator sums expands into this.
using WordSum = std::vector<std::pair<Rational, OperatorWord>>;

// Rewrites a product of parts with a common class into ascending order; each
// swap of a_n a_{-n} (n > 0) leaves a contraction with class e * alpha.
// Results are unnormalized.
OpSum canonicalize(const std::vector<int>& parts, const CohClass& cls, const Rational& coeff,
                   const SurfaceModel& surface);

// [A, B] as a sum of canonical unnormalized operators.
OpSum commutator(const DecoratedOp& a, const DecoratedOp& b, const SurfaceModel& surface);

// Folds coefficients and normalization into the classes and merges equal
// partitions; zero classes are dropped. Two sums are equal as operators when
// their collected forms are equal.
std::map<GenPartition, CohClass> collect(const OpSum& sum);

// Chern character operators of a projective surface for k in {0, 1}, with
// parts bounded by N in absolute value. Throws std::invalid_argument otherwise.
OpSum chern_op(int k, const CohClass& alpha, const SurfaceModel& surface, int N);

// Coefficient c_lambda of a_lambda / lambda! in the equivariant operator G_k.
Rational equiv_chern_coefficient(int k, const GenPartition& lambda);

// Equivariant G_k on the point model: every lambda with l(lambda) <= k + 2,
// |lambda| = 0 and parts bounded by N, as normalized operators.
OpSum equiv_chern_op(int k, const SurfaceModel& point, int N);

// Distributes a product of operator sums into weighted words.
WordSum expand_product(const std::vector<OpSum>& factors);

}  // namespace qzeta
