#pragma once

#include "soergel/poly.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace soergel {

/// Sign of eps_S * eps_T = sign * eps_{S u T} in an exterior algebra; 0 if S and T meet.
int exterior_sign(std::uint32_t s, std::uint32_t t);

/// Element of k[X, Y] (x) Lambda(eps_1..eps_r): a polynomial coefficient for every
/// exterior monomial eps_T = eps_{t_1} eps_{t_2} ... (t_1 < t_2 < ...).
/// Each eps has internal degree 2.
class SuperPoly {
public:
    using PartMap = std::map<std::uint32_t, MultiPoly>;

    SuperPoly() = default;
    SuperPoly(std::size_t strands, const CoeffRing& ring, std::size_t odd);

    static SuperPoly even(const MultiPoly& f, std::size_t odd);
    /// f * eps_T
    static SuperPoly term(const MultiPoly& f, std::size_t odd, std::uint32_t mask);
    /// eps_a, 1-based.
    static SuperPoly epsilon(std::size_t strands, const CoeffRing& ring, std::size_t odd, std::size_t a);

    std::size_t strands() const { return n_; }
    const CoeffRing& ring() const { return ring_; }
    std::size_t odd() const { return odd_; }
    const PartMap& parts() const { return parts_; }
    MultiPoly part(std::uint32_t mask) const;
    bool is_zero() const { return parts_.empty(); }

    void add(std::uint32_t mask, const MultiPoly& f);
    SuperPoly& operator+=(const SuperPoly& o);
    SuperPoly& operator-=(const SuperPoly& o);
    SuperPoly operator+(const SuperPoly& o) const;
    SuperPoly operator-(const SuperPoly& o) const;
    SuperPoly operator-() const;
    /// Graded-commutative product.
    SuperPoly operator*(const SuperPoly& o) const;
    SuperPoly scaled(const mpq_class& c) const;
    SuperPoly change_ring(const CoeffRing& ring) const;

    /// Component of the given internal degree (eps counted with degree 2).
    SuperPoly component(int degree) const;
    /// Terms with exactly `count` exterior factors.
    SuperPoly exterior_part(unsigned count) const;
    int degree() const;

    std::string str() const;

    friend bool operator==(const SuperPoly& a, const SuperPoly& b)
    {
        return a.n_ == b.n_ && a.odd_ == b.odd_ && a.ring_ == b.ring_ && a.parts_ == b.parts_;
    }
    friend bool operator!=(const SuperPoly& a, const SuperPoly& b) { return !(a == b); }

private:
    void check_compatible(const SuperPoly& o) const;

    std::size_t n_ = 0;
    CoeffRing ring_;
    std::size_t odd_ = 0;
    PartMap parts_;
};

}  // namespace soergel
