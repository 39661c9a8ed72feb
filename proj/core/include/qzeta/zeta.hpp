#pragma once

#include "qzeta/series.hpp"

#include <vector>

namespace qzeta {

// Coefficients of t*P_{s-1}(t), indexed by the power of t.
std::vector<Integer> eulerian(int s);

// Q^E_s(t) = t P_{s-1}(t) / (s-1)!  and  Q^O_s(t) (t^{s/2}, or t^{(s-1)/2}(1+t) for odd s).
std::vector<Rational> bracket_numerator(int s);
std::vector<Rational> okounkov_numerator(int s);

// Sum over n_1 > ... > n_l >= 1 of prod Q_i(q^{n_i}) / (1 - q^{n_i})^{s_i}.
// Requires Q_i(0) = 0 so every chain contributes from degree n_1 + ... + n_l on.
RSeries z_q(const std::vector<std::vector<Rational>>& numerators, const std::vector<int>& s, int N);

// Bracket [s_1,...,s_l]; every s_i >= 1.
RSeries bracket(const std::vector<int>& idx, int N);
// Okounkov series Z(s_1,...,s_l); every s_i >= 2.
RSeries okounkov_z(const std::vector<int>& idx, int N);

// Generating function t/(e^t - 1), so B_1 = -1/2.
Rational bernoulli(int i);

Integer divisor_sigma(int k, long n);

// G_{2k} = -B_{2k}/(4k (2k-1)!) + sum_n sigma_{2k-1}(n)/(2k-1)! q^n.
RSeries eisenstein(int weight, int N);

}  // namespace qzeta
