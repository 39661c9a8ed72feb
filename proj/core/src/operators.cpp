#include "qzeta/operators.hpp"

#include <stdexcept>

namespace qzeta {

Rational DecoratedOp::normalization() const
{
    if (!normalized) return 1;
    return Rational(1) / Rational(partition.mult_factorial());
}

namespace {

void canonicalize_into(std::vector<int> seq, const CohClass& cls, const Rational& coeff, const SurfaceModel& s,
                       OpSum& out)
{
    if (sgn(coeff) == 0 || cls.is_zero()) return;
    for (;;) {
        std::size_t i = 0;
        while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
        if (i + 1 >= seq.size()) {
            out.push_back(OpTerm{coeff, DecoratedOp{GenPartition(seq), cls, false}});
            return;
        }
        if (seq[i] == -seq[i + 1]) {
            std::vector<int> rest = seq;
            rest.erase(rest.begin() + static_cast<long>(i), rest.begin() + static_cast<long>(i) + 2);
            canonicalize_into(std::move(rest), s.mul(s.euler(), cls), coeff * s.comm_sign() * seq[i], s, out);
        }
        std::swap(seq[i], seq[i + 1]);
    }
}

}  // namespace

OpSum canonicalize(const std::vector<int>& parts, const CohClass& cls, const Rational& coeff,
                   const SurfaceModel& surface)
{
    OpSum out;
    canonicalize_into(parts, cls, coeff, surface, out);
    return out;
}

OpSum commutator(const DecoratedOp& a, const DecoratedOp& b, const SurfaceModel& surface)
{
    OpSum out;
    const std::vector<int> m = a.partition.parts(), n = b.partition.parts();
    const Rational norm = a.normalization() * b.normalization();
    CohClass ab;
    bool have_ab = false;
    for (std::size_t j = 0; j < m.size(); ++j) {
        for (std::size_t t = 0; t < n.size(); ++t) {
            if (m[j] != -n[t]) continue;
            if (!have_ab) {
                ab = surface.mul(a.cls, b.cls);
                have_ab = true;
            }
            std::vector<int> merged(m.begin(), m.begin() + static_cast<long>(j));
            for (std::size_t u = 0; u < n.size(); ++u)
                if (u != t) merged.push_back(n[u]);
            merged.insert(merged.end(), m.begin() + static_cast<long>(j) + 1, m.end());
            canonicalize_into(std::move(merged), ab, norm * surface.comm_sign() * m[j], surface, out);
        }
    }
    return out;
}

std::map<GenPartition, CohClass> collect(const OpSum& sum)
{
    std::map<GenPartition, CohClass> out;
    for (const auto& t : sum) {
        CohClass c = t.op.cls * MPoly(t.coeff * t.op.normalization());
        auto [it, inserted] = out.try_emplace(t.op.partition, c);
        if (!inserted) it->second += c;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

OpSum chern_op(int k, const CohClass& alpha, const SurfaceModel& surface, int N)
{
    if (surface.is_point()) throw std::invalid_argument("chern_op needs a projective surface");
    if (k != 0 && k != 1) throw std::invalid_argument("chern_op is available for k = 0 and k = 1 only");
    OpSum out;
    if (k == 0) {
        for (int m = 1; m <= N; ++m) out.push_back(OpTerm{-1, DecoratedOp{GenPartition({-m, m}), alpha, false}});
        return out;
    }
    for (auto& lambda : balanced_partitions(3, N)) out.push_back(OpTerm{-1, DecoratedOp{lambda, alpha, true}});
    const CohClass k_alpha = surface.mul(surface.canonical(), alpha);
    if (k_alpha.is_zero()) return out;
    for (int n = 2; n <= N; ++n)
        out.push_back(OpTerm{make_rational(1 - n, 2), DecoratedOp{GenPartition({-n, n}), k_alpha, false}});
    return out;
}

namespace {

// Truncated power series in z, coefficients of z^0..z^D.
using ZSeries = std::vector<Rational>;

ZSeries zmul(const ZSeries& a, const ZSeries& b)
{
    ZSeries r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// (e^{cz} - 1) / (cz) = sum_j c^j z^j / (j+1)!
ZSeries exp_quotient(int c, std::size_t len)
{
    ZSeries r(len);
    Rational p = 1;
    for (std::size_t j = 0; j < len; ++j) {
        r[j] = p / factorial(static_cast<unsigned>(j + 1));
        p *= c;
    }
    return r;
}

}  // namespace

Rational equiv_chern_coefficient(int k, const GenPartition& lambda)
{
    if (k < 0) throw std::invalid_argument("equivariant Chern operators need k >= 0");
    const int D = k + 2 - lambda.length();
    if (D < 0) return 0;
    const std::size_t len = static_cast<std::size_t>(D) + 1;
    // (x - 1)(1 - x^{-1}) = z^2 * sum_j 2 z^{2j} / (2j+2)!
    ZSeries w(len);
    for (std::size_t j = 0; 2 * j < len; ++j) w[2 * j] = Rational(2) / factorial(static_cast<unsigned>(2 * j + 2));
    ZSeries inv(len);
    inv[0] = 1;
    for (std::size_t n = 1; n < len; ++n) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= n; ++i) acc += w[i] * inv[n - i];
        inv[n] = -acc;
    }
    ZSeries prod = inv;
    for (auto [p, m] : lambda.multiplicities()) {
        // (x^n - 1)/n for the part -n and (1 - x^{-n})/n for the part n, each z times a unit.
        ZSeries u = exp_quotient(-p, len);
        for (int i = 0; i < m; ++i) prod = zmul(prod, u);
    }
    return prod[static_cast<std::size_t>(D)];
}

OpSum equiv_chern_op(int k, const SurfaceModel& point, int N)
{
    if (!point.is_point()) throw std::invalid_argument("equiv_chern_op needs the equivariant point model");
    OpSum out;
    for (int l = 0; l <= k + 2; ++l) {
        for (auto& lambda : balanced_partitions(l, N)) {
            Rational c = equiv_chern_coefficient(k, lambda);
            if (sgn(c) != 0) out.push_back(OpTerm{c, DecoratedOp{lambda, point.one(), true}});
        }
    }
    return out;
}

WordSum expand_product(const std::vector<OpSum>& factors)
{
    WordSum out{{Rational(1), OperatorWord{}}};
    for (const auto& f : factors) {
        WordSum next;
        next.reserve(out.size() * f.size());
        for (const auto& [c, w] : out)
            for (const auto& t : f) {
                OperatorWord nw = w;
                nw.push_back(t.op);
                next.emplace_back(c * t.coeff, std::move(nw));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace qzeta
