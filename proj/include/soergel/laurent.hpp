#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace soergel {

/// Integer Laurent polynomial in two variables u, v; terms keyed by (exp_u, exp_v).
class Laurent2 {
public:
    using Key = std::pair<int, int>;

    Laurent2() = default;
    static Laurent2 monomial(const mpz_class& c, int eu, int ev);
    static Laurent2 constant(const mpz_class& c) { return monomial(c, 0, 0); }

    const std::map<Key, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coefficient(int eu, int ev) const;

    void add_term(int eu, int ev, const mpz_class& c);
    Laurent2& operator+=(const Laurent2& o);
    Laurent2& operator-=(const Laurent2& o);
    Laurent2 operator+(const Laurent2& o) const;
    Laurent2 operator-(const Laurent2& o) const;
    Laurent2 operator*(const Laurent2& o) const;
    Laurent2 operator-() const;
    Laurent2 pow(unsigned k) const;
    /// Multiplication by c u^eu v^ev.
    Laurent2 shifted(int eu, int ev, const mpz_class& c = 1) const;
    /// Terms with exp_v <= max_v.
    Laurent2 truncated(int max_v) const;
    /// Smallest exp_v present (requires nonzero).
    int min_v() const;
    /// Coefficient of v^ev as a Laurent polynomial in u (stored with exp_v = 0).
    Laurent2 v_coefficient(int ev) const;

    std::string str(const std::string& u, const std::string& v) const;

    friend bool operator==(const Laurent2& a, const Laurent2& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent2& a, const Laurent2& b) { return !(a == b); }

private:
    std::map<Key, mpz_class> terms_;
};

/// Power series in v: (1 - v)^{-m} truncated to v^order.
Laurent2 inverse_one_minus_v(unsigned m, int order);

}  // namespace soergel
