#include "qzeta/nested_sum.hpp"

#include <algorithm>

namespace qzeta {

long LinearForm::eval(const std::vector<int>& idx) const
{
    long v = constant;
    for (std::size_t i = 0; i < coef.size(); ++i) v += static_cast<long>(coef[i]) * idx[i];
    return v;
}

Rational IndexPoly::eval(const std::vector<int>& idx) const
{
    if (terms.empty()) return 1;
    Rational total = 0;
    for (const auto& [exps, c] : terms) {
        Integer m = 1;
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (unsigned e = 0; e < exps[i]; ++e) m *= idx[i];
        total += c * Rational(m);
    }
    return total;
}

namespace {

int coef_of(const LinearForm& f, int i) { return i < static_cast<int>(f.coef.size()) ? f.coef[i] : 0; }

bool contains(const std::vector<int>& v, int i) { return std::find(v.begin(), v.end(), i) != v.end(); }

bool all_bounded(const std::vector<int>& side, const std::vector<bool>& bounded)
{
    return std::all_of(side.begin(), side.end(), [&](int i) { return bounded[i]; });
}

std::vector<bool> bounded_indices(const NestedSum& sum, const SumTerm& term)
{
    const int k = sum.indices;
    std::vector<bool> bounded(k);
    for (int i = 0; i < k; ++i) bounded[i] = coef_of(term.numerator, i) > 0;
    if (sum.constraint == SumConstraint::Chain) {
        for (int t = 1; t < k; ++t) bounded[t] = bounded[t] || bounded[t - 1];
    } else if (sum.constraint == SumConstraint::EqualSums) {
        if (all_bounded(sum.lhs, bounded))
            for (int i : sum.rhs) bounded[i] = true;
        if (all_bounded(sum.rhs, bounded))
            for (int i : sum.lhs) bounded[i] = true;
    }
    return bounded;
}

void validate_shape(const NestedSum& sum)
{
    const int k = sum.indices;
    auto form_ok = [k](const LinearForm& f) {
        if (static_cast<int>(f.coef.size()) > k || f.constant < 0) return false;
        return std::all_of(f.coef.begin(), f.coef.end(), [](int a) { return a >= 0; });
    };
    for (const auto& t : sum.terms) {
        if (!form_ok(t.numerator)) throw NestedSumError("nested sum '" + sum.name + "': invalid numerator form", -1);
        for (const auto& [f, p] : t.denominators) {
            bool positive = f.constant > 0 || std::any_of(f.coef.begin(), f.coef.end(), [](int a) { return a > 0; });
            if (!form_ok(f) || !positive || p < 1)
                throw NestedSumError("nested sum '" + sum.name + "': denominator form must be positive", -1);
        }
    }
    if (sum.constraint == SumConstraint::EqualSums) {
        if (sum.lhs.empty() || sum.rhs.empty())
            throw NestedSumError("nested sum '" + sum.name + "': equality constraint needs two sides", -1);
        for (int i : sum.lhs)
            if (contains(sum.rhs, i) || i < 0 || i >= k)
                throw NestedSumError("nested sum '" + sum.name + "': malformed equality constraint", i);
        for (int i : sum.rhs)
            if (i < 0 || i >= k) throw NestedSumError("nested sum '" + sum.name + "': malformed equality constraint", i);
    }
}

class Enumerator {
public:
    Enumerator(const NestedSum& sum, const SumTerm& term, int N, RLambertSum& out)
        : sum_(sum), term_(term), N_(N), out_(out), idx_(sum.indices, 0)
    {
        const int k = sum.indices;
        for (int i = 0; i < k; ++i)
            min_.push_back(sum.constraint == SumConstraint::Chain ? k - i : 1);
        if (sum.constraint == SumConstraint::EqualSums) {
            auto positive = [&](const std::vector<int>& side) {
                return std::all_of(side.begin(), side.end(), [&](int i) { return coef_of(term.numerator, i) > 0; });
            };
            first_ = positive(sum.lhs) || !positive(sum.rhs) ? sum.lhs : sum.rhs;
            second_ = first_ == sum.lhs ? sum.rhs : sum.lhs;
            for (int i = 0; i < k; ++i)
                if (!contains(sum.lhs, i) && !contains(sum.rhs, i)) order_.push_back(i);
            order_.insert(order_.end(), first_.begin(), first_.end());
            order_.insert(order_.end(), second_.begin(), second_.end());
        } else {
            for (int i = 0; i < k; ++i) order_.push_back(i);
        }
        rest_.assign(order_.size() + 1, 0);
        for (int p = static_cast<int>(order_.size()) - 1; p >= 0; --p)
            rest_[p] = rest_[p + 1] + static_cast<long>(coef_of(term.numerator, order_[p])) * min_[order_[p]];
    }

    void run() { visit(0, term_.numerator.constant); }

private:
    void visit(std::size_t pos, long partial)
    {
        if (pos == order_.size()) {
            emit(partial);
            return;
        }
        const int i = order_[pos];
        const long a = coef_of(term_.numerator, i);
        long hi = -1;  // -1: no structural bound
        long lo = min_[i];
        if (sum_.constraint == SumConstraint::Chain && i > 0) hi = idx_[i - 1] - 1;
        if (sum_.constraint == SumConstraint::EqualSums && contains(second_, i)) {
            long target = side_sum(first_);
            long assigned = 0;
            int left = 0;
            for (int j : second_) {
                if (j == i) break;
                assigned += idx_[j];
            }
            bool after = false;
            for (int j : second_) {
                if (after) ++left;
                if (j == i) after = true;
            }
            long remaining = target - assigned;
            if (left == 0) {
                lo = remaining;
                hi = remaining;
            } else {
                hi = remaining - left;
            }
            if (lo < 1) return;
        }
        if (a == 0 && hi < 0) throw NestedSumError("nested sum '" + sum_.name + "': index " + std::to_string(i) + " is unbounded", i);
        for (long v = lo; hi < 0 || v <= hi; ++v) {
            long p = partial + a * v;
            if (p + rest_[pos + 1] > N_) break;
            idx_[i] = static_cast<int>(v);
            visit(pos + 1, p);
        }
        idx_[i] = 0;
    }

    long side_sum(const std::vector<int>& side) const
    {
        long s = 0;
        for (int j : side) s += idx_[j];
        return s;
    }

    void emit(long num)
    {
        Rational c = term_.scale * term_.coefficient.eval(idx_);
        if (sgn(c) == 0) return;
        LTerm t = LTerm::monomial(static_cast<int>(num));
        for (const auto& [f, p] : term_.denominators) t *= LTerm::geometric(0, static_cast<int>(f.eval(idx_)), p);
        out_.add(t, c);
    }

    const NestedSum& sum_;
    const SumTerm& term_;
    int N_;
    RLambertSum& out_;
    std::vector<int> idx_;
    std::vector<long> min_;
    std::vector<int> order_, first_, second_;
    std::vector<long> rest_;
};

}  // namespace

void check_termination(const NestedSum& sum)
{
    validate_shape(sum);
    for (const auto& term : sum.terms) {
        auto bounded = bounded_indices(sum, term);
        for (int i = 0; i < sum.indices; ++i)
            if (!bounded[i])
                throw NestedSumError("nested sum '" + sum.name + "': index " + std::to_string(i) + " is unbounded", i);
    }
}

RLambertSum nested_sum_terms(const NestedSum& sum, int N)
{
    check_termination(sum);
    RLambertSum out(N);
    for (const auto& term : sum.terms) Enumerator(sum, term, N, out).run();
    return out;
}

RSeries eval_nested_sum(const NestedSum& sum, int N) { return nested_sum_terms(sum, N).expand(N); }

namespace {

LinearForm lf(std::vector<int> coef, int constant = 0) { return LinearForm{std::move(coef), constant}; }

IndexPoly poly(std::vector<std::pair<std::vector<unsigned>, Rational>> terms) { return IndexPoly{std::move(terms)}; }

SumTerm term(Rational scale, IndexPoly c, LinearForm num, std::vector<std::pair<LinearForm, int>> den)
{
    return SumTerm{std::move(scale), std::move(c), std::move(num), std::move(den)};
}

std::map<std::string, std::vector<NestedSum>> make_catalog()
{
    std::map<std::string, std::vector<NestedSum>> cat;
    auto put = [&cat](NestedSum s) { cat[s.name].push_back(std::move(s)); };
    const Rational one = 1;

    {
        // ij(i+j) q^{i+j} / ((1-q^i)(1-q^j)(1-q^{i+j}))
        NestedSum s{"h11_0", 2, SumConstraint::Free, {}, {}, {}};
        s.terms.push_back(term(one, poly({{{2, 1}, 1}, {{1, 2}, 1}}), lf({1, 1}),
                               {{lf({1, 0}), 1}, {lf({0, 1}), 1}, {lf({1, 1}), 1}}));
        put(s);
    }
    {
        NestedSum s{"h11_2", 2, SumConstraint::Free, {}, {}, {}};
        // -j(i+j)(q^{i+j} + q^{2i+j}) / ((1-q^i)^2 (1-q^j)(1-q^{i+j}))
        auto c1 = poly({{{1, 1}, 1}, {{0, 2}, 1}});
        std::vector<std::pair<LinearForm, int>> d1{{lf({1, 0}), 2}, {lf({0, 1}), 1}, {lf({1, 1}), 1}};
        s.terms.push_back(term(-1, c1, lf({1, 1}), d1));
        s.terms.push_back(term(-1, c1, lf({2, 1}), d1));
        // -(1/2) ij(q^{i+j} + q^{2i+2j}) / ((1-q^i)(1-q^j)(1-q^{i+j})^2)
        auto c2 = poly({{{1, 1}, 1}});
        std::vector<std::pair<LinearForm, int>> d2{{lf({1, 0}), 1}, {lf({0, 1}), 1}, {lf({1, 1}), 2}};
        s.terms.push_back(term(make_rational(-1, 2), c2, lf({1, 1}), d2));
        s.terms.push_back(term(make_rational(-1, 2), c2, lf({2, 2}), d2));
        put(s);
    }
    {
        // Index order (i, j, k, l) with i + j = k + l.
        NestedSum s{"h11_4_equal", 4, SumConstraint::EqualSums, {0, 1}, {2, 3}, {}};
        auto c = poly({{{1, 0, 0, 0}, 1}, {{0, 1, 0, 0}, 1}});
        std::vector<std::pair<LinearForm, int>> d{{lf({1, 0, 0, 0}), 1}, {lf({0, 1, 0, 0}), 1}, {lf({0, 0, 1, 0}), 1},
                                                  {lf({0, 0, 0, 1}), 1}, {lf({1, 1, 0, 0}), 1}};
        s.terms.push_back(term(make_rational(1, 4), c, lf({1, 1, 0, 0}), d));
        s.terms.push_back(term(make_rational(1, 4), c, lf({2, 2, 0, 0}), d));
        put(s);
    }
    {
        NestedSum s{"h11_4_free", 3, SumConstraint::Free, {}, {}, {}};
        // -(i+j) q^{i+j+k}(1+q^{i+j}) / ((1-q^i)(1-q^j)(1-q^k)(1-q^{i+j})(1-q^{i+j+k}))
        auto c1 = poly({{{1, 0, 0}, 1}, {{0, 1, 0}, 1}});
        std::vector<std::pair<LinearForm, int>> d1{{lf({1, 0, 0}), 1}, {lf({0, 1, 0}), 1}, {lf({0, 0, 1}), 1},
                                                   {lf({1, 1, 0}), 1}, {lf({1, 1, 1}), 1}};
        s.terms.push_back(term(-1, c1, lf({1, 1, 1}), d1));
        s.terms.push_back(term(-1, c1, lf({2, 2, 1}), d1));
        // k q^{i+j+k}(1+q^k) / ((1-q^i)(1-q^j)(1-q^k)(1-q^{i+k})(1-q^{j+k}))
        auto c2 = poly({{{0, 0, 1}, 1}});
        std::vector<std::pair<LinearForm, int>> d2{{lf({1, 0, 0}), 1}, {lf({0, 1, 0}), 1}, {lf({0, 0, 1}), 1},
                                                   {lf({1, 0, 1}), 1}, {lf({0, 1, 1}), 1}};
        s.terms.push_back(term(one, c2, lf({1, 1, 1}), d2));
        s.terms.push_back(term(one, c2, lf({1, 1, 2}), d2));
        put(s);
    }
    {
        // sum_{n>m>0} q^n(1+q^n)/(1-q^n)^3 * (n - nm + m^2)/(1-q^m)
        NestedSum s{"k2_double", 2, SumConstraint::Chain, {}, {}, {}};
        auto c = poly({{{1, 0}, 1}, {{1, 1}, -1}, {{0, 2}, 1}});
        std::vector<std::pair<LinearForm, int>> d{{lf({1, 0}), 3}, {lf({0, 1}), 1}};
        s.terms.push_back(term(one, c, lf({1, 0}), d));
        s.terms.push_back(term(one, c, lf({2, 0}), d));
        put(s);
    }
    {
        // 2 sum_{n>m>l>0} n q^n(1+q^n)/(1-q^n)^3 * 1/(1-q^m) * 1/(1-q^l)
        NestedSum s{"k2_triple_n", 3, SumConstraint::Chain, {}, {}, {}};
        auto c = poly({{{1, 0, 0}, 1}});
        std::vector<std::pair<LinearForm, int>> d{{lf({1, 0, 0}), 3}, {lf({0, 1, 0}), 1}, {lf({0, 0, 1}), 1}};
        s.terms.push_back(term(2, c, lf({1, 0, 0}), d));
        s.terms.push_back(term(2, c, lf({2, 0, 0}), d));
        put(s);
    }
    {
        // 2 sum_{n>m>l>0} q^n/(1-q^n)^2 * m q^m/(1-q^m)^2 * 1/(1-q^l)
        NestedSum s{"k2_triple_m", 3, SumConstraint::Chain, {}, {}, {}};
        s.terms.push_back(term(2, poly({{{0, 1, 0}, 1}}), lf({1, 1, 0}),
                               {{lf({1, 0, 0}), 2}, {lf({0, 1, 0}), 2}, {lf({0, 0, 1}), 1}}));
        put(s);
    }
    {
        NestedSum s{"bra1cor4_lhs", 2, SumConstraint::Chain, {}, {}, {}};
        s.terms.push_back(term(one, {}, lf({1, 0}), {{lf({1, 0}), 2}, {lf({0, 1}), 1}}));
        put(s);
    }
    {
        NestedSum s{"bra1cor4_rhs", 1, SumConstraint::Free, {}, {}, {}};
        s.terms.push_back(term(one, {}, lf({2}), {{lf({1}), 3}}));
        put(s);
    }
    {
        // sum_n n q^n / (1 - q^n)
        NestedSum s{"divisor_sum", 1, SumConstraint::Free, {}, {}, {}};
        s.terms.push_back(term(one, poly({{{1}, 1}}), lf({1}), {{lf({1}), 1}}));
        put(s);
    }
    {
        // sum_{n>m>0} q^n/(1-q^n)^2 * m q^m/(1-q^m)^2 + (n q^{2n} + n q^n)/(1-q^n)^3 * 1/(1-q^m)
        NestedSum s{"a_tilde", 2, SumConstraint::Chain, {}, {}, {}};
        s.terms.push_back(term(one, poly({{{0, 1}, 1}}), lf({1, 1}), {{lf({1, 0}), 2}, {lf({0, 1}), 2}}));
        auto c = poly({{{1, 0}, 1}});
        std::vector<std::pair<LinearForm, int>> d{{lf({1, 0}), 3}, {lf({0, 1}), 1}};
        s.terms.push_back(term(one, c, lf({2, 0}), d));
        s.terms.push_back(term(one, c, lf({1, 0}), d));
        put(s);
    }
    cat["h11_4"] = {cat.at("h11_4_equal")[0], cat.at("h11_4_free")[0]};
    for (const auto& [name, parts] : cat)
        for (const auto& s : parts) check_termination(s);
    return cat;
}

}  // namespace

const std::map<std::string, std::vector<NestedSum>>& builtin_sums()
{
    static const auto catalog = make_catalog();
    return catalog;
}

const std::vector<NestedSum>& builtin_sum(const std::string& name)
{
    const auto& cat = builtin_sums();
    auto it = cat.find(name);
    if (it == cat.end()) throw std::invalid_argument("unknown named sum '" + name + "'");
    return it->second;
}

RSeries eval_builtin(const std::string& name, int N)
{
    RLambertSum acc(N);
    for (const auto& s : builtin_sum(name)) acc.add_all(nested_sum_terms(s, N));
    return acc.expand(N);
}

}  // namespace qzeta
