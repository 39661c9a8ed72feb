#include "qzeta/trace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace qzeta {

namespace {

struct RawOp {
    std::vector<int> parts;  // ascending
    CohClass cls;
};

using RawWord = std::vector<RawOp>;

class Engine {
public:
    Engine(const SurfaceModel& surface, int cap, const TraceOptions& options)
        : s_(surface), cap_(cap), options_(options)
    {
    }

    void run(RawWord word, const LTerm& prefix, MPoly coeff, PLambertSum& acc)
    {
        if (prefix.num > cap_ || coeff.is_zero()) return;
        // Empty operators are scalars.
        for (auto it = word.begin(); it != word.end();) {
            if (it->parts.empty()) {
                coeff *= s_.integrate(it->cls);
                if (coeff.is_zero()) return;
                it = word.erase(it);
            } else if (it->cls.is_zero()) {
                return;
            } else {
                ++it;
            }
        }
        if (word.empty()) {
            acc.add(prefix, coeff);
            return;
        }
        if (!balanced(word) || !bidegree_ok(word)) return;

        std::size_t i0 = word.size();
        int n0 = 0;
        for (std::size_t i = 0; i < word.size(); ++i) {
            int sz = std::accumulate(word[i].parts.begin(), word[i].parts.end(), 0);
            if (sz < 0) {
                i0 = i;
                n0 = -sz;
                break;
            }
        }
        if (i0 == word.size()) {
            wick(word, prefix, coeff, acc);
            return;
        }

        // Commuting A_{i0} once around the trace:
        // r > i0 contributes q^{n0}/(1-q^{n0}) [A_r, A_{i0}], r < i0 contributes 1/(1-q^{n0}) [A_r, A_{i0}].
        const DecoratedOp a0{GenPartition(word[i0].parts), word[i0].cls, false};
        for (std::size_t r = 0; r < word.size(); ++r) {
            if (r == i0) continue;
            LTerm factor = LTerm::geometric(r > i0 ? n0 : 0, n0, 1);
            LTerm next_prefix = prefix * factor;
            if (next_prefix.num > cap_) continue;
            const DecoratedOp ar{GenPartition(word[r].parts), word[r].cls, false};
            for (const auto& t : commutator(ar, a0, s_)) {
                RawWord next;
                next.reserve(word.size() - 1);
                for (std::size_t u = 0; u < word.size(); ++u) {
                    if (u == i0) continue;
                    if (u == r)
                        next.push_back(RawOp{t.op.partition.parts(), t.op.cls});
                    else
                        next.push_back(word[u]);
                }
                run(std::move(next), next_prefix, coeff * MPoly(t.coeff), acc);
            }
        }
    }

private:
    static bool balanced(const RawWord& word)
    {
        std::map<int, int> count;
        for (const auto& op : word)
            for (int p : op.parts) count[p > 0 ? p : -p] += p > 0 ? 1 : -1;
        return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 0; });
    }

    bool bidegree_ok(const RawWord& word) const
    {
        if (!options_.bidegree_filter || s_.is_point()) return true;
        int total = 0;
        for (const auto& op : word) {
            int d = op.cls.degree();
            if (d < 0) return true;
            total += 2 * (static_cast<int>(op.parts.size()) - 2) + d;
        }
        return total == 0;
    }

    // Every operator has size 0: thermal Wick contractions of the flattened
    // parts, with the Kunneth classes joined along the contraction graph.
    void wick(const RawWord& word, const LTerm& prefix, const MPoly& coeff, PLambertSum& acc)
    {
        std::vector<int> flat, group;
        for (std::size_t g = 0; g < word.size(); ++g)
            for (int p : word[g].parts) {
                flat.push_back(p);
                group.push_back(static_cast<int>(g));
            }
        std::vector<char> used(flat.size(), 0);
        std::vector<std::pair<int, int>> pairs;
        const int sign = s_.comm_sign();

        auto finish = [&](const LTerm& lt, const Rational& c) {
            const std::size_t G = word.size();
            std::vector<std::size_t> parent(G);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](std::size_t x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (auto [p, r] : pairs) parent[find(static_cast<std::size_t>(group[p]))] = find(static_cast<std::size_t>(group[r]));
            std::map<std::size_t, std::pair<int, int>> ve;  // root -> (vertices, edges)
            std::map<std::size_t, CohClass> prod;
            for (std::size_t g = 0; g < G; ++g) {
                std::size_t root = find(g);
                ve[root].first++;
                auto [it, inserted] = prod.try_emplace(root, word[g].cls);
                if (!inserted) it->second = s_.mul(it->second, word[g].cls);
            }
            for (auto [p, r] : pairs) ve[find(static_cast<std::size_t>(group[p]))].second++;
            MPoly value(c);
            for (auto& [root, cls] : prod) {
                auto [v, e] = ve[root];
                CohClass x = cls;
                for (int k = 0; k < e - v + 1; ++k) x = s_.mul(x, s_.euler());
                value *= s_.integrate(x);
                if (value.is_zero()) return;
            }
            acc.add(prefix * lt, coeff * value);
        };

        std::function<void(const LTerm&, const Rational&)> rec = [&](const LTerm& lt, const Rational& c) {
            if (prefix.num + lt.num > cap_) return;
            std::size_t p = 0;
            while (p < flat.size() && used[p]) ++p;
            if (p == flat.size()) {
                finish(lt, c);
                return;
            }
            used[p] = 1;
            for (std::size_t r = p + 1; r < flat.size(); ++r) {
                if (used[r] || flat[r] != -flat[p]) continue;
                used[r] = 1;
                pairs.emplace_back(static_cast<int>(p), static_cast<int>(r));
                const int n = flat[p] < 0 ? -flat[p] : flat[p];
                // <a_{-n} a_n> = s n q^n/(1-q^n), <a_n a_{-n}> = s n/(1-q^n)
                LTerm f = LTerm::geometric(flat[p] < 0 ? n : 0, n, 1);
                rec(lt * f, c * sign * n);
                pairs.pop_back();
                used[r] = 0;
            }
            used[p] = 0;
        };
        rec(LTerm::monomial(0), Rational(1));
    }

    const SurfaceModel& s_;
    int cap_;
    TraceOptions options_;
};

RawWord to_raw(const OperatorWord& word, Rational& scale)
{
    RawWord raw;
    for (const auto& op : word) {
        scale *= op.normalization();
        raw.push_back(RawOp{op.partition.parts(), op.cls});
    }
    return raw;
}

// One way of absorbing part of an operator into the vertex operator.
struct Absorption {
    std::vector<int> rest;  // ascending parts left inside the trace
    int shift = 0;          // |absorbed|
    int positives = 0;      // number of absorbed positive parts
    int count = 0;          // number of absorbed parts
    LTerm lt;
    Rational coeff;         // includes the normalization of op and of the rest
};

enum class Weights { Vertex, Gamma };

std::vector<Absorption> absorptions(const DecoratedOp& op, Weights w)
{
    std::vector<Absorption> out;
    const Rational base = op.normalized ? Rational(1) : Rational(op.partition.mult_factorial());
    for (const auto& sub : op.partition.sub_partitions()) {
        Absorption a;
        a.lt = LTerm::monomial(0);
        a.coeff = base;
        for (auto [p, m] : sub.multiplicities()) {
            const int n = p > 0 ? p : -p;
            a.count += m;
            a.coeff /= factorial(static_cast<unsigned>(m));
            if (p > 0) {
                a.positives += m;
                a.lt *= LTerm::geometric(n * m, n, m);
                if (w == Weights::Vertex && (m % 2)) a.coeff = -a.coeff;
            } else {
                a.lt *= LTerm::geometric(0, n, m);
                if (w == Weights::Gamma && (m % 2)) a.coeff = -a.coeff;
            }
        }
        a.shift = sub.size();
        GenPartition rest = op.partition - sub;
        a.coeff /= Rational(rest.mult_factorial());
        a.rest = rest.parts();
        out.push_back(std::move(a));
    }
    return out;
}

// Enumerates one absorption per operator with total shift 0.
template <class F>
void for_each_absorption(const std::vector<std::vector<Absorption>>& choices, F&& f)
{
    std::vector<const Absorption*> pick(choices.size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int shift) {
        if (i == choices.size()) {
            if (shift == 0) f(pick);
            return;
        }
        for (const auto& a : choices[i]) {
            pick[i] = &a;
            rec(i + 1, shift + a.shift);
        }
    };
    rec(0, 0);
}

void vertex_accumulate(const OperatorWord& word, const Rational& weight, const SurfaceModel& s, Engine& engine,
                       PLambertSum& acc)
{
    int total = 0;
    for (const auto& op : word) total += op.partition.size();
    if (total != 0) return;
    std::vector<std::vector<Absorption>> choices;
    for (const auto& op : word) choices.push_back(absorptions(op, Weights::Vertex));
    const CohClass twist = s.one() - s.canonical();
    std::vector<CohClass> twist_pow{s.one()};
    for_each_absorption(choices, [&](const std::vector<const Absorption*>& pick) {
        RawWord raw;
        LTerm lt = LTerm::monomial(0);
        Rational c = weight;
        for (std::size_t i = 0; i < pick.size(); ++i) {
            const Absorption& a = *pick[i];
            while (twist_pow.size() <= static_cast<std::size_t>(a.positives))
                twist_pow.push_back(s.mul(twist_pow.back(), twist));
            CohClass cls = a.positives ? s.mul(twist_pow[static_cast<std::size_t>(a.positives)], word[i].cls) : word[i].cls;
            raw.push_back(RawOp{a.rest, std::move(cls)});
            lt *= a.lt;
            c *= a.coeff;
        }
        engine.run(std::move(raw), lt, MPoly(c), acc);
    });
}

}  // namespace

PLambertSum trace_product_terms(const OperatorWord& word, const SurfaceModel& surface, int cap,
                                const TraceOptions& options)
{
    PLambertSum acc(cap);
    Engine engine(surface, cap, options);
    Rational scale = 1;
    RawWord raw = to_raw(word, scale);
    engine.run(std::move(raw), LTerm::monomial(0), MPoly(scale), acc);
    return acc;
}

PSeries trace_product(const OperatorWord& word, const SurfaceModel& surface, int N, const TraceOptions& options)
{
    return trace_product_terms(word, surface, N, options).expand(N);
}

PSeries vertex_trace(const OperatorWord& word, const SurfaceModel& surface, int N)
{
    return vertex_trace(WordSum{{Rational(1), word}}, surface, N);
}

PSeries vertex_trace(const WordSum& words, const SurfaceModel& surface, int N)
{
    if (surface.is_point()) throw std::invalid_argument("vertex_trace needs a projective surface");
    PLambertSum acc(N);
    Engine engine(surface, N, TraceOptions{});
    for (const auto& [w, word] : words) vertex_accumulate(word, w, surface, engine, acc);
    return acc.expand(N);
}

std::vector<RSeries> gamma_trace_coefficients(const WordSum& words, int N)
{
    const SurfaceModel point = SurfaceModel::equivariant_point();
    Engine engine(point, N, TraceOptions{});
    std::vector<PLambertSum> acc;
    for (const auto& [w, word] : words) {
        int total = 0;
        for (const auto& op : word) total += op.partition.size();
        if (total != 0) continue;
        std::vector<std::vector<Absorption>> choices;
        for (const auto& op : word) choices.push_back(absorptions(op, Weights::Gamma));
        for_each_absorption(choices, [&](const std::vector<const Absorption*>& pick) {
            RawWord raw;
            LTerm lt = LTerm::monomial(0);
            Rational c = w;
            std::size_t power = 0;
            for (std::size_t i = 0; i < pick.size(); ++i) {
                raw.push_back(RawOp{pick[i]->rest, word[i].cls});
                lt *= pick[i]->lt;
                c *= pick[i]->coeff;
                power += static_cast<std::size_t>(pick[i]->count);
            }
            while (acc.size() <= power) acc.emplace_back(N);
            engine.run(std::move(raw), lt, MPoly(c), acc[power]);
        });
    }
    std::vector<RSeries> out;
    for (const auto& a : acc) {
        PSeries p = a.expand(N);
        RSeries r(N);
        for (int n = 0; n <= N; ++n) r[n] = p[n].constant_term();
        out.push_back(std::move(r));
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    if (out.empty()) out.emplace_back(N);
    return out;
}

RSeries eval_m_polynomial(const std::vector<RSeries>& coeffs, long m)
{
    RSeries r(coeffs.at(0).order());
    Rational mp = 1;
    for (const auto& c : coeffs) {
        r += c * mp;
        mp *= m;
    }
    return r;
}

RSeries gamma_trace(long m, const WordSum& words, int N) { return eval_m_polynomial(gamma_trace_coefficients(words, N), m); }

RSeries gamma_trace(long m, const OperatorWord& word, int N)
{
    return gamma_trace(m, WordSum{{Rational(1), word}}, N);
}

}  // namespace qzeta
