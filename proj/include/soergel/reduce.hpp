#pragma once

#include "soergel/poly.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace soergel {

/// Grading of a generator: homological degree k, Hochschild degree i, internal degree j.
struct Cell {
    int k = 0;
    int i = 0;
    int j = 0;

    friend bool operator==(const Cell& a, const Cell& b) { return a.k == b.k && a.i == b.i && a.j == b.j; }
};

/// Scalars of a module-level complex: polynomials, with constant +-1 as the only pivots.
struct PolyTraits {
    using Scalar = MultiPoly;
    static bool is_zero(const Scalar& s) { return s.is_zero(); }
    static bool is_unit(const Scalar& s)
    {
        if (!s.is_constant() || s.is_zero())
            return false;
        mpq_class c = s.constant_term();
        return c == 1 || c == -1;
    }
    static Scalar unit_inverse(const Scalar& s) { return s; }
    static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
    static Scalar neg(const Scalar& a) { return -a; }
    static void sub_assign(Scalar& a, const Scalar& b) { a -= b; }
};

/// Integers with pivots +-1.
struct IntTraits {
    using Scalar = mpz_class;
    static bool is_zero(const Scalar& s) { return sgn(s) == 0; }
    static bool is_unit(const Scalar& s) { return s == 1 || s == -1; }
    static Scalar unit_inverse(const Scalar& s) { return s; }
    static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
    static Scalar neg(const Scalar& a) { return -a; }
    static void sub_assign(Scalar& a, const Scalar& b) { a -= b; }
};

/// F_p with canonical representatives 0..p-1 (p < 2^31).
struct ModTraits {
    using Scalar = std::uint64_t;
    std::uint64_t p = 2;

    bool is_zero(Scalar s) const { return s == 0; }
    bool is_unit(Scalar s) const { return s != 0; }
    Scalar unit_inverse(Scalar s) const
    {
        Scalar r = 1, b = s % p, e = p - 2;
        while (e) {
            if (e & 1)
                r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }
    Scalar mul(Scalar a, Scalar b) const { return a * b % p; }
    Scalar neg(Scalar a) const { return (p - a) % p; }
    void sub_assign(Scalar& a, Scalar b) const { a = (a + p - b) % p; }
};

/// Which differential components may serve as pivots during elimination.
enum class PivotRule {
    /// Any unit entry (plain complexes).
    Any,
    /// Only entries that keep the homological degree (the Koszul direction of a
    /// bicomplex); components raising k by two or more are discarded.
    Vertical,
    /// Only entries raising k by one; components raising k by two or more are discarded.
    Horizontal,
};

/// Sparse complex d(x) = sum_y out[x][y] * y with Gaussian elimination along unit
/// entries. Elimination of a -> b (unit u) replaces d(x -> y) by
/// d(x -> y) - d(x -> b) u^{-1} d(a -> y) and deletes a and b.
template <class Traits>
class SparseReducer {
public:
    using Scalar = typename Traits::Scalar;

    explicit SparseReducer(Traits traits = Traits{}) : traits_(traits) {}

    std::size_t add_cell(const Cell& c)
    {
        cells_.push_back(c);
        alive_.push_back(true);
        out_.emplace_back();
        in_.emplace_back();
        return cells_.size() - 1;
    }

    void add_entry(std::size_t from, std::size_t to, const Scalar& value)
    {
        if (traits_.is_zero(value))
            return;
        auto it = out_[from].find(to);
        if (it == out_[from].end()) {
            out_[from].emplace(to, value);
            in_[to].insert(from);
            return;
        }
        traits_.sub_assign(it->second, traits_.neg(value));
        if (traits_.is_zero(it->second)) {
            out_[from].erase(it);
            in_[to].erase(from);
        }
    }

    /// Eliminates pivots until none is left; returns the number of eliminated pairs.
    std::size_t reduce(PivotRule rule)
    {
        std::size_t count = 0;
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t a = 0; a < cells_.size(); ++a) {
                if (!alive_[a])
                    continue;
                std::size_t best = npos;
                std::size_t best_cost = 0;
                for (const auto& [b, v] : out_[a]) {
                    if (!pivot_allowed(rule, a, b) || !traits_.is_unit(v))
                        continue;
                    std::size_t cost = in_[b].size();
                    if (best == npos || cost < best_cost) {
                        best = b;
                        best_cost = cost;
                    }
                }
                if (best != npos) {
                    eliminate(a, best, rule);
                    ++count;
                    progress = true;
                }
            }
        }
        return count;
    }

    const std::vector<Cell>& cells() const { return cells_; }
    bool alive(std::size_t c) const { return alive_[c]; }
    const std::map<std::size_t, Scalar>& out(std::size_t c) const { return out_[c]; }
    const std::set<std::size_t>& in(std::size_t c) const { return in_[c]; }
    const Traits& traits() const { return traits_; }

    std::vector<std::size_t> alive_cells() const
    {
        std::vector<std::size_t> r;
        for (std::size_t c = 0; c < cells_.size(); ++c)
            if (alive_[c])
                r.push_back(c);
        return r;
    }

    /// True when some surviving entry keeps the homological degree.
    bool has_vertical_entries() const
    {
        for (std::size_t a = 0; a < cells_.size(); ++a)
            if (alive_[a])
                for (const auto& [b, v] : out_[a])
                    if (cells_[b].k == cells_[a].k)
                        return true;
        return false;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool pivot_allowed(PivotRule rule, std::size_t a, std::size_t b) const
    {
        switch (rule) {
        case PivotRule::Any:
            return true;
        case PivotRule::Vertical:
            return cells_[b].k == cells_[a].k;
        case PivotRule::Horizontal:
            return cells_[b].k == cells_[a].k + 1;
        }
        return false;
    }

    bool keep(PivotRule rule, std::size_t x, std::size_t y) const
    {
        return rule == PivotRule::Any || cells_[y].k - cells_[x].k <= 1;
    }

    void eliminate(std::size_t a, std::size_t b, PivotRule rule)
    {
        const Scalar uinv = traits_.unit_inverse(out_[a].at(b));
        const std::vector<std::size_t> sources(in_[b].begin(), in_[b].end());
        const std::vector<std::pair<std::size_t, Scalar>> targets(out_[a].begin(), out_[a].end());
        for (std::size_t x : sources) {
            if (x == a)
                continue;
            const Scalar lambda = traits_.mul(out_[x].at(b), uinv);
            for (const auto& [y, v] : targets) {
                if (y == b || !keep(rule, x, y))
                    continue;
                Scalar delta = traits_.mul(lambda, v);
                auto it = out_[x].find(y);
                if (it == out_[x].end()) {
                    out_[x].emplace(y, traits_.neg(delta));
                    in_[y].insert(x);
                } else {
                    traits_.sub_assign(it->second, delta);
                    if (traits_.is_zero(it->second)) {
                        out_[x].erase(it);
                        in_[y].erase(x);
                    }
                }
            }
        }
        for (std::size_t c : {a, b}) {
            for (const auto& [y, v] : out_[c])
                if (y != a && y != b)
                    in_[y].erase(c);
            for (std::size_t x : in_[c])
                if (x != a && x != b)
                    out_[x].erase(c);
            out_[c].clear();
            in_[c].clear();
            alive_[c] = false;
        }
    }

    Traits traits_;
    std::vector<Cell> cells_;
    std::vector<bool> alive_;
    std::vector<std::map<std::size_t, Scalar>> out_;
    std::vector<std::set<std::size_t>> in_;
};

}  // namespace soergel
