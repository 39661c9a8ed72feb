#pragma once

#include "qzeta/lambert.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qzeta {

// Nonnegative integer linear form c_0 + sum_i a_i n_i in the summation indices.
struct LinearForm {
    std::vector<int> coef;
    int constant = 0;

    long eval(const std::vector<int>& idx) const;
};

// Polynomial in the indices with rational coefficients; an empty list means 1.
struct IndexPoly {
    std::vector<std::pair<std::vector<unsigned>, Rational>> terms;

    Rational eval(const std::vector<int>& idx) const;
};

// scale * coefficient(n) * q^{numerator(n)} / prod (1 - q^{form(n)})^{power}
struct SumTerm {
    Rational scale = 1;
    IndexPoly coefficient;
    LinearForm numerator;
    std::vector<std::pair<LinearForm, int>> denominators;
};

enum class SumConstraint {
    Free,       // every index >= 1
    Chain,      // n_0 > n_1 > ... > n_{k-1} >= 1
    EqualSums,  // every index >= 1 and sum over lhs == sum over rhs
};

struct NestedSum {
    std::string name;
    int indices = 0;
    SumConstraint constraint = SumConstraint::Free;
    std::vector<int> lhs, rhs;
    std::vector<SumTerm> terms;
};

class NestedSumError : public std::invalid_argument {
public:
    NestedSumError(const std::string& what, int index) : std::invalid_argument(what), index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

// Throws NestedSumError naming the first index not bounded by the numerator
// exponent (directly, through the chain, or through the equality constraint).
void check_termination(const NestedSum& sum);

// Exact symbolic accumulation of every admissible tuple whose numerator
// exponent is <= N.
RLambertSum nested_sum_terms(const NestedSum& sum, int N);
RSeries eval_nested_sum(const NestedSum& sum, int N);

// Named catalog. A name may stand for a sum of several specs when the
// displayed expression mixes constraint modes (h11_4).
const std::map<std::string, std::vector<NestedSum>>& builtin_sums();
// Throws std::invalid_argument for unknown names.
const std::vector<NestedSum>& builtin_sum(const std::string& name);
RSeries eval_builtin(const std::string& name, int N);

}  // namespace qzeta
