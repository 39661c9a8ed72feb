#include "qzeta/partition.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace qzeta {

GenPartition::GenPartition(const std::vector<int>& parts)
{
    for (int p : parts) {
        if (p == 0) throw std::invalid_argument("a generalized partition has no zero parts");
        ++mult_[p];
    }
}

GenPartition GenPartition::from_multiplicities(const std::map<int, int>& mult)
{
    GenPartition g;
    for (auto [p, m] : mult) {
        if (m < 0) throw std::invalid_argument("negative multiplicity");
        if (m == 0) continue;
        if (p == 0) throw std::invalid_argument("a generalized partition has no zero parts");
        g.mult_[p] = m;
    }
    return g;
}

int GenPartition::multiplicity(int part) const
{
    auto it = mult_.find(part);
    return it == mult_.end() ? 0 : it->second;
}

int GenPartition::length() const
{
    int l = 0;
    for (auto [p, m] : mult_) l += m;
    return l;
}

int GenPartition::size() const
{
    int s = 0;
    for (auto [p, m] : mult_) s += p * m;
    return s;
}

int GenPartition::positive_size() const
{
    int s = 0;
    for (auto [p, m] : mult_)
        if (p > 0) s += p * m;
    return s;
}

long GenPartition::square_sum() const
{
    long s = 0;
    for (auto [p, m] : mult_) s += static_cast<long>(p) * p * m;
    return s;
}

Integer GenPartition::mult_factorial() const
{
    Integer r = 1;
    for (auto [p, m] : mult_) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
        r *= f;
    }
    return r;
}

std::vector<int> GenPartition::parts() const
{
    std::vector<int> out;
    for (auto [p, m] : mult_) out.insert(out.end(), static_cast<std::size_t>(m), p);
    return out;
}

bool GenPartition::contains(const GenPartition& mu) const
{
    for (auto [p, m] : mu.mult_)
        if (multiplicity(p) < m) return false;
    return true;
}

GenPartition GenPartition::operator-(const GenPartition& mu) const
{
    if (!contains(mu)) throw std::invalid_argument("partition difference needs mu <= lambda");
    GenPartition r = *this;
    for (auto [p, m] : mu.mult_) {
        auto it = r.mult_.find(p);
        it->second -= m;
        if (it->second == 0) r.mult_.erase(it);
    }
    return r;
}

GenPartition GenPartition::operator+(const GenPartition& mu) const
{
    GenPartition r = *this;
    for (auto [p, m] : mu.mult_) r.mult_[p] += m;
    return r;
}

GenPartition GenPartition::negated() const
{
    GenPartition r;
    for (auto [p, m] : mult_) r.mult_[-p] = m;
    return r;
}

std::vector<GenPartition> GenPartition::sub_partitions() const
{
    std::vector<std::pair<int, int>> items(mult_.begin(), mult_.end());
    std::vector<GenPartition> out;
    GenPartition cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == items.size()) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= items[i].second; ++k) {
            if (k > 0) cur.mult_[items[i].first] = k;
            rec(i + 1);
        }
        cur.mult_.erase(items[i].first);
    };
    rec(0);
    return out;
}

std::string GenPartition::to_string() const
{
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int p : parts()) {
        if (!first) os << ",";
        first = false;
        os << p;
    }
    os << ")";
    return os.str();
}

std::vector<GenPartition> balanced_partitions(int length, int max_part)
{
    std::vector<GenPartition> out;
    std::vector<int> cur;
    // Nondecreasing sequences over [-max_part, max_part] \ {0}.
    std::function<void(int, int)> rec = [&](int lo, int sum) {
        int left = length - static_cast<int>(cur.size());
        if (left == 0) {
            if (sum == 0) out.emplace_back(cur);
            return;
        }
        // The remaining parts lie in [lo, max_part]; prune impossible sums.
        if (sum + static_cast<long>(left) * max_part < 0 || sum + static_cast<long>(left) * lo > 0) return;
        for (int p = lo; p <= max_part; ++p) {
            if (p == 0) continue;
            cur.push_back(p);
            rec(p, sum + p);
            cur.pop_back();
        }
    };
    rec(-max_part, 0);
    return out;
}

}  // namespace qzeta
