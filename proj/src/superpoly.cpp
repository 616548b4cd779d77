#include "soergel/superpoly.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace soergel {

int exterior_sign(std::uint32_t s, std::uint32_t t)
{
    if (s & t)
        return 0;
    // Each t-factor moves left past the s-factors with larger index.
    int swaps = 0;
    for (std::uint32_t rest = t; rest; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        swaps += std::popcount(s & ~((bit << 1) - 1));
    }
    return swaps % 2 ? -1 : 1;
}

SuperPoly::SuperPoly(std::size_t strands, const CoeffRing& ring, std::size_t odd)
    : n_(strands), ring_(ring), odd_(odd)
{
    if (odd > 31)
        throw std::invalid_argument("too many odd generators");
}

SuperPoly SuperPoly::even(const MultiPoly& f, std::size_t odd) { return term(f, odd, 0); }

SuperPoly SuperPoly::term(const MultiPoly& f, std::size_t odd, std::uint32_t mask)
{
    SuperPoly r(f.strands(), f.ring(), odd);
    r.add(mask, f);
    return r;
}

SuperPoly SuperPoly::epsilon(std::size_t strands, const CoeffRing& ring, std::size_t odd, std::size_t a)
{
    if (a < 1 || a > odd)
        throw std::out_of_range("odd generator index out of range");
    return term(MultiPoly::constant(strands, ring, 1), odd, std::uint32_t{1} << (a - 1));
}

MultiPoly SuperPoly::part(std::uint32_t mask) const
{
    auto it = parts_.find(mask);
    return it == parts_.end() ? MultiPoly(n_, ring_) : it->second;
}

void SuperPoly::add(std::uint32_t mask, const MultiPoly& f)
{
    if (f.is_zero())
        return;
    if (f.strands() != n_ || f.ring() != ring_)
        throw std::invalid_argument("SuperPoly: incompatible coefficient polynomial");
    if (odd_ < 32 && (mask >> odd_) != 0)
        throw std::out_of_range("SuperPoly: exterior mask out of range");
    auto [it, inserted] = parts_.try_emplace(mask, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero())
            parts_.erase(it);
    }
}

void SuperPoly::check_compatible(const SuperPoly& o) const
{
    if (n_ != o.n_ || odd_ != o.odd_)
        throw std::invalid_argument("SuperPoly: shape mismatch");
    if (ring_ != o.ring_)
        throw CoefficientError("SuperPoly: coefficient mismatch");
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o)
{
    check_compatible(o);
    for (const auto& [m, f] : o.parts_)
        add(m, f);
    return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o)
{
    check_compatible(o);
    for (const auto& [m, f] : o.parts_)
        add(m, -f);
    return *this;
}

SuperPoly SuperPoly::operator+(const SuperPoly& o) const
{
    SuperPoly r = *this;
    return r += o;
}

SuperPoly SuperPoly::operator-(const SuperPoly& o) const
{
    SuperPoly r = *this;
    return r -= o;
}

SuperPoly SuperPoly::operator-() const
{
    SuperPoly r(n_, ring_, odd_);
    for (const auto& [m, f] : parts_)
        r.parts_.emplace(m, -f);
    return r;
}

SuperPoly SuperPoly::operator*(const SuperPoly& o) const
{
    check_compatible(o);
    SuperPoly r(n_, ring_, odd_);
    for (const auto& [s, f] : parts_)
        for (const auto& [t, g] : o.parts_) {
            int sign = exterior_sign(s, t);
            if (sign == 0)
                continue;
            MultiPoly p = f * g;
            r.add(s | t, sign > 0 ? p : -p);
        }
    return r;
}

SuperPoly SuperPoly::scaled(const mpq_class& c) const
{
    SuperPoly r(n_, ring_, odd_);
    for (const auto& [m, f] : parts_)
        r.add(m, f.scaled(c));
    return r;
}

SuperPoly SuperPoly::change_ring(const CoeffRing& ring) const
{
    SuperPoly r(n_, ring, odd_);
    for (const auto& [m, f] : parts_)
        r.add(m, f.change_ring(ring));
    return r;
}

SuperPoly SuperPoly::component(int degree) const
{
    SuperPoly r(n_, ring_, odd_);
    for (const auto& [m, f] : parts_)
        r.add(m, f.component(degree - 2 * std::popcount(m)));
    return r;
}

SuperPoly SuperPoly::exterior_part(unsigned count) const
{
    SuperPoly r(n_, ring_, odd_);
    for (const auto& [m, f] : parts_)
        if (static_cast<unsigned>(std::popcount(m)) == count)
            r.parts_.emplace(m, f);
    return r;
}

int SuperPoly::degree() const
{
    int d = -1;
    for (const auto& [m, f] : parts_)
        d = std::max(d, f.degree() + 2 * std::popcount(m));
    return d;
}

std::string SuperPoly::str() const
{
    if (parts_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, f] : parts_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << f.str() << ")";
        for (std::size_t a = 0; a < odd_; ++a)
            if (m & (std::uint32_t{1} << a))
                os << "*e" << a + 1;
    }
    return os.str();
}

}  // namespace soergel
