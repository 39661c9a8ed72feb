#pragma once

#include "qzeta/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace qzeta {

// Multiset of nonzero integer parts. Invariant: no zero part, every stored
// multiplicity is positive.
class GenPartition {
public:
    GenPartition() = default;
    // Throws std::invalid_argument on a zero part.
    explicit GenPartition(const std::vector<int>& parts);
    static GenPartition from_multiplicities(const std::map<int, int>& mult);

    const std::map<int, int>& multiplicities() const { return mult_; }
    int multiplicity(int part) const;
    bool empty() const { return mult_.empty(); }

    int length() const;
    // Signed size |lambda|.
    int size() const;
    // Sum of the positive parts.
    int positive_size() const;
    long square_sum() const;
    // prod_i m_i!
    Integer mult_factorial() const;

    // Ascending, so creation operators come first.
    std::vector<int> parts() const;

    // mu <= lambda componentwise.
    bool contains(const GenPartition& mu) const;
    // Throws std::invalid_argument unless contains(mu).
    GenPartition operator-(const GenPartition& mu) const;
    GenPartition operator+(const GenPartition& mu) const;
    GenPartition negated() const;
    // Every mu <= lambda, including the empty partition and lambda itself.
    std::vector<GenPartition> sub_partitions() const;

    std::string to_string() const;

    friend bool operator==(const GenPartition& a, const GenPartition& b) { return a.mult_ == b.mult_; }
    friend bool operator!=(const GenPartition& a, const GenPartition& b) { return !(a == b); }
    friend bool operator<(const GenPartition& a, const GenPartition& b) { return a.mult_ < b.mult_; }

private:
    std::map<int, int> mult_;
};

// Every generalized partition with the given length, size 0 and parts bounded
// by max_part in absolute value.
std::vector<GenPartition> balanced_partitions(int length, int max_part);

}  // namespace qzeta
