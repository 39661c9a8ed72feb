#pragma once

#include <random>
#include <string>

namespace qzeta::testing {

// Random expressions over the whole grammar. With evaluable set, every
// divisor has constant term 1 so the expression can be expanded.
class ExprGen {
public:
    ExprGen(unsigned seed, bool evaluable) : rng_(seed), evaluable_(evaluable) {}

    std::string gen(int depth)
    {
        int pick = depth <= 0 ? uniform(0, 5) : uniform(0, 11);
        switch (pick) {
        case 0: return std::to_string(uniform(0, 30));
        case 1: return std::to_string(uniform(1, 9)) + "/" + std::to_string(uniform(1, 9));
        case 2: return "Z(" + index_list(2, 4) + ")";
        case 3: return "B[" + index_list(1, 4) + "]";
        case 4: return "G(" + std::to_string(2 * uniform(1, 3)) + ")";
        case 5: return "EulerPow(" + std::to_string(uniform(-3, 3)) + ")";
        case 6: return "D(" + gen(depth - 1) + ")";
        case 7: return "-" + gen(depth - 1);
        case 8: return "(" + gen(depth - 1) + (uniform(0, 1) ? " + " : " - ") + gen(depth - 1) + ")";
        case 9: return "(" + gen(depth - 1) + " * " + gen(depth - 1) + ")";
        case 10: return "(" + gen(depth - 1) + " / " + divisor(depth - 1) + ")";
        default: return "(" + gen(depth - 1) + ")^" + std::to_string(uniform(0, 3));
        }
    }

private:
    // With evaluable set, only divisors whose constant term is 1.
    std::string divisor(int depth)
    {
        if (!evaluable_) return gen(depth);
        return uniform(0, 1) ? "EulerPow(" + std::to_string(uniform(-2, 2)) + ")" : "(1 + Z(2))";
    }

    std::string index_list(int lo, int hi)
    {
        std::string s = std::to_string(uniform(lo, hi));
        for (int k = uniform(0, 2); k > 0; --k) s += "," + std::to_string(uniform(lo, hi));
        return s;
    }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::mt19937 rng_;
    bool evaluable_;
};

}  // namespace qzeta::testing
