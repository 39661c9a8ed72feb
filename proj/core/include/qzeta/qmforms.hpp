#pragma once

#include "qzeta/series.hpp"

#include <string>
#include <variant>
#include <vector>

namespace qzeta {

// Z(2)^a Z(4)^b Z(6)^c
struct QMMonomial {
    int a = 0, b = 0, c = 0;

    int weight() const { return 2 * a + 4 * b + 6 * c; }
    std::string name() const;
    friend bool operator==(const QMMonomial&, const QMMonomial&) = default;
};

// Ordered by weight, then by decreasing power of Z(2); for W = 6 this is
// 1, Z(2), Z(2)^2, Z(4), Z(2)^3, Z(2)Z(4), Z(6).
struct QMBasis {
    int weight_bound = 0;
    std::vector<QMMonomial> monomials;
    std::vector<RSeries> series;
};

constexpr int qm_safety_margin = 10;

// Throws std::invalid_argument for odd or negative W, or N < |basis| + margin.
QMBasis qm_basis(int W, int N);

struct QMDecomposition {
    int weight_bound = 0;
    int verified_to = 0;
    std::vector<QMMonomial> basis;
    std::vector<Rational> coeffs;

    // Largest weight carrying a nonzero coefficient (0 for the zero form).
    int weight() const;
    Rational coefficient(const QMMonomial& m) const;
};

struct NotInSpan {
    int degree = 0;
    Rational expected, reconstructed;
};

using DecomposeResult = std::variant<QMDecomposition, NotInSpan>;

DecomposeResult decompose(const RSeries& f, int W, int N);

struct SliceDecomposition {
    Monomial monomial = 0;
    DecomposeResult result;
};

// Independent decomposition of every polynomial-coefficient slice.
std::vector<SliceDecomposition> decompose_mpoly(const PSeries& f, int W, int N);

}  // namespace qzeta
