#pragma once

#include "soergel/coeff.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace soergel {

/// Variable slots per monomial: X_1..X_n occupy [0, n), Y_1..Y_n occupy [n, 2n).
inline constexpr std::size_t kMaxVars = 16;
inline constexpr std::size_t kMaxStrands = kMaxVars / 2;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> exp{};

    unsigned total() const
    {
        unsigned s = 0;
        for (auto e : exp)
            s += e;
        return s;
    }
    /// Internal (cohomological) degree: every variable has degree 2.
    int degree() const { return 2 * static_cast<int>(total()); }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exp != b.exp; }
};

/// Graded lexicographic order: total degree first, then lexicographic with X_1 largest.
struct GrLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        auto ta = a.total(), tb = b.total();
        if (ta != tb)
            return ta < tb;
        return a.exp > b.exp;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (auto e : m.exp)
            h = (h ^ e) * 1099511628211ull;
        return h;
    }
};

/// Exact polynomial in X_1..X_n, Y_1..Y_n over a CoeffRing, kept in canonical
/// form (no zero coefficients, graded-lex ordered terms).
class MultiPoly {
public:
    using TermMap = std::map<Monomial, mpq_class, GrLexLess>;

    MultiPoly() = default;
    MultiPoly(std::size_t strands, const CoeffRing& ring);

    static MultiPoly constant(std::size_t strands, const CoeffRing& ring, const mpq_class& c);
    static MultiPoly monomial(std::size_t strands, const CoeffRing& ring, const Monomial& m,
                              const mpq_class& c = 1);
    /// X_i, 1-based.
    static MultiPoly x(std::size_t strands, const CoeffRing& ring, std::size_t i);
    /// Y_i, 1-based.
    static MultiPoly y(std::size_t strands, const CoeffRing& ring, std::size_t i);
    static MultiPoly variable(std::size_t strands, const CoeffRing& ring, std::size_t slot);

    std::size_t strands() const { return n_; }
    const CoeffRing& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    mpq_class constant_term() const;
    mpq_class coefficient(const Monomial& m) const;
    /// Largest internal degree of a term, -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool uses_y() const;
    bool uses_x() const;

    void add_term(const Monomial& m, const mpq_class& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const mpq_class& c) const;
    MultiPoly scaled(const Coefficient& c) const;
    MultiPoly times_monomial(const Monomial& m) const;
    MultiPoly pow(unsigned k) const;

    /// Homogeneous component of the given internal degree.
    MultiPoly component(int degree) const;
    /// Partial derivative with respect to a variable slot.
    MultiPoly derivative(std::size_t slot) const;
    /// Ring homomorphism sending the variable in slot s to images[s].
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    /// Renames variables: slot s goes to slot perm[s].
    MultiPoly permute(const std::vector<std::size_t>& perm) const;
    /// Same terms over another ring (values re-normalized).
    MultiPoly change_ring(const CoeffRing& ring) const;
    /// Moves Y_j to X_j (used when viewing a right factor as a left one).
    MultiPoly y_to_x() const;
    MultiPoly x_to_y() const;

    std::string str() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        return a.n_ == b.n_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

private:
    void check_compatible(const MultiPoly& o) const;

    std::size_t n_ = 0;
    CoeffRing ring_;
    TermMap terms_;
};

/// Slot of X_i / Y_i (1-based) in an n-strand monomial.
inline std::size_t x_slot(std::size_t, std::size_t i) { return i - 1; }
inline std::size_t y_slot(std::size_t n, std::size_t i) { return n + i - 1; }

/// Simple reflection s_i: swaps X_i and X_{i+1}.
MultiPoly reflect(std::size_t i, const MultiPoly& f);

/// Demazure operator (f - s_i f) / (X_i - X_{i+1}); f must be in X variables only.
MultiPoly demazure(std::size_t i, const MultiPoly& f);

/// pi_k(u, v) = u^k + u^{k-1} v + ... + v^k for variable slots u, v.
MultiPoly pi_k(unsigned k, std::size_t strands, const CoeffRing& ring, std::size_t u_slot,
               std::size_t v_slot);

/// All monomials in the given variable slots with total exponent `total`, graded-lex order.
std::vector<Monomial> monomials_of_total(const std::vector<std::size_t>& slots, unsigned total);

/// Number of monomials of given total exponent in `vars` variables.
std::uint64_t monomial_count(unsigned vars, unsigned total);

}  // namespace soergel
