#include "soergel/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace soergel {

Laurent2 Laurent2::monomial(const mpz_class& c, int eu, int ev)
{
    Laurent2 r;
    r.add_term(eu, ev, c);
    return r;
}

mpz_class Laurent2::coefficient(int eu, int ev) const
{
    auto it = terms_.find({eu, ev});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void Laurent2::add_term(int eu, int ev, const mpz_class& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace({eu, ev}, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Laurent2& Laurent2::operator+=(const Laurent2& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k.first, k.second, c);
    return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k.first, k.second, -c);
    return *this;
}

Laurent2 Laurent2::operator+(const Laurent2& o) const
{
    Laurent2 r = *this;
    return r += o;
}

Laurent2 Laurent2::operator-(const Laurent2& o) const
{
    Laurent2 r = *this;
    return r -= o;
}

Laurent2 Laurent2::operator*(const Laurent2& o) const
{
    Laurent2 r;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            r.add_term(a.first + b.first, a.second + b.second, ca * cb);
    return r;
}

Laurent2 Laurent2::operator-() const
{
    Laurent2 r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, -c);
    return r;
}

Laurent2 Laurent2::pow(unsigned k) const
{
    Laurent2 r = constant(1);
    for (unsigned e = 0; e < k; ++e)
        r = r * *this;
    return r;
}

Laurent2 Laurent2::shifted(int eu, int ev, const mpz_class& c) const
{
    Laurent2 r;
    for (const auto& [k, v] : terms_)
        r.add_term(k.first + eu, k.second + ev, v * c);
    return r;
}

Laurent2 Laurent2::truncated(int max_v) const
{
    Laurent2 r;
    for (const auto& [k, v] : terms_)
        if (k.second <= max_v)
            r.terms_.emplace(k, v);
    return r;
}

int Laurent2::min_v() const
{
    if (terms_.empty())
        throw std::logic_error("min_v of zero Laurent polynomial");
    int m = terms_.begin()->first.second;
    for (const auto& [k, v] : terms_)
        m = std::min(m, k.second);
    return m;
}

Laurent2 Laurent2::v_coefficient(int ev) const
{
    Laurent2 r;
    for (const auto& [k, v] : terms_)
        if (k.second == ev)
            r.terms_.emplace(std::make_pair(k.first, 0), v);
    return r;
}

std::string Laurent2::str(const std::string& u, const std::string& v) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        mpz_class a = abs(c);
        if (!first)
            os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0)
            os << "-";
        first = false;
        bool unit = (a == 1) && (k.first != 0 || k.second != 0);
        if (!unit)
            os << a.get_str();
        auto var = [&](const std::string& name, int e, bool& need_mul) {
            if (e == 0)
                return;
            if (need_mul)
                os << "*";
            os << name;
            if (e != 1)
                os << "^" << e;
            need_mul = true;
        };
        bool need_mul = !unit;
        var(u, k.first, need_mul);
        var(v, k.second, need_mul);
    }
    return os.str();
}

Laurent2 inverse_one_minus_v(unsigned m, int order)
{
    // (1 - v)^{-m} = sum_k binom(m + k - 1, k) v^k
    Laurent2 r;
    if (m == 0)
        return Laurent2::constant(1);
    for (int k = 0; k <= order; ++k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), m + static_cast<unsigned>(k) - 1, static_cast<unsigned>(k));
        r.add_term(0, k, b);
    }
    return r;
}

}  // namespace soergel
