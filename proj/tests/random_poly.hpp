#pragma once

#include "soergel/poly.hpp"

#include <random>

namespace soergel::testing {

/// Random polynomial in the given slots with small integer coefficients and
/// total exponent at most max_total.
inline MultiPoly random_poly(std::mt19937& rng, std::size_t strands, const CoeffRing& ring,
                             const std::vector<std::size_t>& slots, unsigned max_total, int terms = 6)
{
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<unsigned> deg(0, max_total);
    std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
    MultiPoly f(strands, ring);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        unsigned d = deg(rng);
        for (unsigned e = 0; e < d; ++e)
            ++m.exp[slots[pick(rng)]];
        f.add_term(m, coef(rng));
    }
    return f;
}

inline std::vector<std::size_t> x_slots(std::size_t n)
{
    std::vector<std::size_t> s;
    for (std::size_t i = 1; i <= n; ++i)
        s.push_back(x_slot(n, i));
    return s;
}

inline std::vector<std::size_t> xy_slots(std::size_t n)
{
    std::vector<std::size_t> s;
    for (std::size_t i = 1; i <= n; ++i)
        s.push_back(x_slot(n, i));
    for (std::size_t i = 1; i <= n; ++i)
        s.push_back(y_slot(n, i));
    return s;
}

}  // namespace soergel::testing
