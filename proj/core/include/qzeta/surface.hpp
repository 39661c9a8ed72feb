#pragma once

#include "qzeta/mpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qzeta {

// Cohomology class of a surface with coefficients in the pairing symbols:
// c0 * 1 + sum_a c2[a] * D_a + c4 * pt. The point model stores only c0.
struct CohClass {
    MPoly c0;
    std::vector<MPoly> c2;
    MPoly c4;

    bool is_zero() const;
    // Real degree 0, 2 or 4 for a homogeneous nonzero class, otherwise -1.
    int degree() const;

    CohClass& operator+=(const CohClass& o);
    CohClass& operator-=(const CohClass& o);
    CohClass& operator*=(const MPoly& c);
    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
    friend CohClass operator*(CohClass a, const MPoly& c) { return a *= c; }
    friend CohClass operator*(const MPoly& c, CohClass a) { return a *= c; }
    friend bool operator==(const CohClass& a, const CohClass& b);
    friend bool operator!=(const CohClass& a, const CohClass& b) { return !(a == b); }
};

// Either a projective surface with formal intersection numbers or the
// equivariant point, whose Fock space is the scalar Heisenberg module.
class SurfaceModel {
public:
    enum class Kind { Projective, EquivariantPoint };

    // Divisors other than K; pairing symbols are named "K2", "KL1", "L1L2", ...
    // With K_trivial every pairing involving K is 0 and has no symbol.
    // A fixed chi replaces the symbol "chi" by that integer.
    static SurfaceModel projective(std::vector<std::string> divisors = {"L1", "L2"}, bool K_trivial = false,
                                   std::optional<long> chi = std::nullopt);
    static SurfaceModel equivariant_point();

    Kind kind() const { return kind_; }
    bool is_point() const { return kind_ == Kind::EquivariantPoint; }
    bool K_trivial() const { return K_trivial_; }
    // [a_m(x), a_n(y)] = comm_sign() * m * delta_{m,-n} * <x, y>
    int comm_sign() const { return kind_ == Kind::Projective ? -1 : 1; }
    const SymbolTablePtr& table() const { return table_; }
    // Index 0 is K.
    const std::vector<std::string>& divisors() const { return divisors_; }

    MPoly chi() const;
    MPoly pairing(std::size_t a, std::size_t b) const;
    // Symbol name for the pairing of two divisors, independent of K_trivial.
    static std::string pairing_name(const std::string& a, const std::string& b);

    CohClass zero() const;
    CohClass scalar(const MPoly& c) const;
    CohClass one() const { return scalar(MPoly(1)); }
    CohClass canonical() const;
    // Throws std::invalid_argument for unknown divisors.
    CohClass divisor(const std::string& name) const;
    CohClass point() const;
    CohClass euler() const;
    // Accepts 1X, K, e, pt and divisor names.
    CohClass named(const std::string& name) const;

    CohClass mul(const CohClass& a, const CohClass& b) const;
    CohClass pow(const CohClass& a, unsigned e) const;
    MPoly integrate(const CohClass& a) const;
    MPoly pair(const CohClass& a, const CohClass& b) const { return integrate(mul(a, b)); }

    std::string to_string(const CohClass& a) const;

private:
    Kind kind_ = Kind::Projective;
    bool K_trivial_ = false;
    std::optional<long> chi_value_;
    std::vector<std::string> divisors_;
    SymbolTablePtr table_;
    // pairing_[a][b] for a, b over divisors_
    std::vector<std::vector<MPoly>> pairing_;
};

}  // namespace qzeta
