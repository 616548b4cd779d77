#include "soergel/operators.hpp"

#include "soergel/linalg.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace soergel {

namespace {

using Trunc = std::vector<mpq_class>;  // coefficients of X^0 .. X^{N+1}

Trunc trunc_mul(const Trunc& a, const Trunc& b, const CoeffRing& ring)
{
    Trunc r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; i + j < r.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    for (auto& v : r)
        v = ring.normalize(v);
    return r;
}

Trunc as_trunc(const std::vector<mpq_class>& b)
{
    Trunc t(b.size() + 1, 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        t[i + 1] = b[i];
    return t;
}

// sum_i c_i g^{i+1}
Trunc substitute_series(const std::vector<mpq_class>& c, const Trunc& g, const CoeffRing& ring)
{
    Trunc r(g.size(), 0), power = g;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t t = 0; t < r.size(); ++t)
            r[t] += c[i] * power[t];
        power = trunc_mul(power, g, ring);
    }
    for (auto& v : r)
        v = ring.normalize(v);
    return r;
}

std::vector<mpq_class> from_trunc(const Trunc& t) { return std::vector<mpq_class>(t.begin() + 1, t.end()); }

void check_leading(const CoeffRing& ring, const mpq_class& b0)
{
    if (!ring.is_unit(b0))
        throw CoefficientError("leading coefficient of a formal series must be a unit");
}

}  // namespace

FormalSeries::FormalSeries(const CoeffRing& ring, std::vector<mpq_class> b) : ring_(ring), b_(std::move(b))
{
    if (b_.empty())
        throw std::invalid_argument("formal series needs b_0");
    for (auto& v : b_)
        v = ring_.normalize(v);
    check_leading(ring_, b_[0]);
}

FormalSeries FormalSeries::identity(const CoeffRing& ring, std::size_t order)
{
    std::vector<mpq_class> b(order + 1, 0);
    b[0] = 1;
    return FormalSeries(ring, std::move(b));
}

FormalSeries FormalSeries::compose(const FormalSeries& g) const
{
    if (g.order() != order())
        throw std::invalid_argument("series truncated at different orders");
    if (g.ring_ != ring_)
        throw CoefficientError("series over different rings");
    return FormalSeries(ring_, from_trunc(substitute_series(b_, as_trunc(g.b_), ring_)));
}

FormalSeries FormalSeries::inverse() const
{
    const mpq_class inv = ring_.inverse(b_[0]);
    std::vector<mpq_class> g(b_.size(), 0);
    g[0] = inv;
    for (std::size_t k = 1; k < g.size(); ++k) {
        Trunc h = substitute_series(b_, as_trunc(g), ring_);
        g[k] = ring_.normalize(-h[k + 1] * inv);
    }
    return FormalSeries(ring_, std::move(g));
}

std::string FormalSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < b_.size(); ++i) {
        if (sgn(b_[i]) == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << b_[i] << "*X^" << i + 1;
    }
    os << " + O(X^" << b_.size() + 1 << ")";
    return os.str();
}

FormalSeries series_compose(const FormalSeries& f, const FormalSeries& g) { return f.compose(g); }

SuperSeries::SuperSeries(const CoeffRing& ring, std::vector<mpq_class> b, std::vector<mpq_class> a)
    : ring_(ring), b_(std::move(b)), a_(std::move(a))
{
    if (b_.empty() || a_.size() != b_.size())
        throw std::invalid_argument("super series needs matching even and odd coefficient lists");
    for (auto& v : b_)
        v = ring_.normalize(v);
    for (auto& v : a_)
        v = ring_.normalize(v);
    check_leading(ring_, b_[0]);
}

SuperSeries SuperSeries::identity(const CoeffRing& ring, std::size_t order)
{
    std::vector<mpq_class> b(order + 1, 0), a(order + 1, 0);
    b[0] = 1;
    return SuperSeries(ring, std::move(b), std::move(a));
}

SuperSeries SuperSeries::compose(const SuperSeries& g) const
{
    if (g.order() != order())
        throw std::invalid_argument("series truncated at different orders");
    if (g.ring_ != ring_)
        throw CoefficientError("series over different rings");
    // f(B + theta A) = sum b_i B^{i+1} + theta (sum a_i B^{i+1} + sum (i+1) b_i A B^i)
    const Trunc big_b = as_trunc(g.b_), big_a = as_trunc(g.a_);
    Trunc even = substitute_series(b_, big_b, ring_);
    Trunc odd = substitute_series(a_, big_b, ring_);
    Trunc power(big_b.size(), 0);
    power[0] = 1;
    for (std::size_t i = 0; i < b_.size(); ++i) {
        Trunc t = trunc_mul(big_a, power, ring_);
        for (std::size_t s = 0; s < odd.size(); ++s)
            odd[s] += mpq_class(static_cast<long>(i + 1)) * b_[i] * t[s];
        power = trunc_mul(power, big_b, ring_);
    }
    for (auto& v : odd)
        v = ring_.normalize(v);
    return SuperSeries(ring_, from_trunc(even), from_trunc(odd));
}

SuperSeries SuperSeries::inverse() const
{
    const mpq_class inv = ring_.inverse(b_[0]);
    std::vector<mpq_class> b = FormalSeries(ring_, b_).inverse().coefficients();
    std::vector<mpq_class> a(b.size(), 0);
    // Same iteration on the odd part: the theta-coefficient of X^{k+1} is b_0 a_k + (lower terms).
    for (std::size_t k = 0; k < a.size(); ++k) {
        SuperSeries trial(ring_, b, a);
        auto h = compose(trial).odd();
        a[k] = ring_.normalize(-h[k] * inv);
    }
    return SuperSeries(ring_, std::move(b), std::move(a));
}

SuperSeries series_compose(const SuperSeries& f, const SuperSeries& g) { return f.compose(g); }

MultiPoly dual_pair_act(const DualIndex& index, const MultiPoly& f)
{
    std::vector<unsigned> ms, bound;
    for (const auto& [m, e] : index) {
        if (m == 0)
            throw std::invalid_argument("s_0 is specialized to 1 and has no dual monomial");
        if (e == 0)
            continue;
        ms.push_back(m);
        bound.push_back(e);
    }
    const std::size_t n = f.strands();
    const CoeffRing& ring = f.ring();
    MultiPoly out(n, ring);
    for (const auto& [mono, c] : f.terms()) {
        // s-exponent vector -> coefficient polynomial
        std::map<std::vector<unsigned>, MultiPoly> acc;
        acc.emplace(std::vector<unsigned>(ms.size(), 0), MultiPoly::constant(n, ring, c));
        for (std::size_t slot = 0; slot < 2 * n; ++slot) {
            const MultiPoly x = MultiPoly::variable(n, ring, slot);
            for (unsigned rep = 0; rep < mono.exp[slot]; ++rep) {
                std::map<std::vector<unsigned>, MultiPoly> next;
                auto push = [&](std::vector<unsigned> key, const MultiPoly& v) {
                    auto it = next.find(key);
                    if (it == next.end())
                        next.emplace(std::move(key), v);
                    else
                        it->second += v;
                };
                for (const auto& [key, v] : acc) {
                    push(key, v * x);
                    for (std::size_t q = 0; q < ms.size(); ++q) {
                        if (key[q] == bound[q])
                            continue;
                        auto k2 = key;
                        ++k2[q];
                        push(std::move(k2), v * x.pow(ms[q] + 1));
                    }
                }
                acc = std::move(next);
            }
        }
        auto it = acc.find(bound);
        if (it != acc.end())
            out += it->second;
    }
    return out;
}

SuperPoly OperatorAction::operator()(const SuperPoly& v) const
{
    const std::size_t n = v.strands();
    const std::size_t r = v.odd();
    const CoeffRing& ring = v.ring();
    const MultiPoly one = MultiPoly::constant(n, ring, 1);
    std::vector<SuperPoly> xs, es;
    for (std::size_t s = 0; s < 2 * n; ++s)
        xs.push_back(on_variable(s));
    for (std::size_t a = 1; a <= r; ++a)
        es.push_back(on_epsilon(a));

    SuperPoly out(n, ring, r);
    if (rule == Extension::Multiplicative) {
        std::vector<MultiPoly> images;
        for (const auto& x : xs) {
            if (x.parts().size() > 1 || (!x.is_zero() && x.parts().begin()->first != 0))
                throw std::invalid_argument(name + ": multiplicative extension needs even images of variables");
            images.push_back(x.part(0));
        }
        for (const auto& [mask, f] : v.parts()) {
            SuperPoly t = SuperPoly::even(f.substitute(images), r);
            for (std::uint32_t rest = mask; rest; rest &= rest - 1)
                t = t * es[static_cast<std::size_t>(std::countr_zero(rest))];
            out += t;
        }
        return out;
    }
    for (const auto& [mask, f] : v.parts()) {
        const SuperPoly eps = SuperPoly::term(one, r, mask);
        for (std::size_t s = 0; s < 2 * n; ++s) {
            if (xs[s].is_zero())
                continue;
            MultiPoly df = f.derivative(s);
            if (!df.is_zero())
                out += SuperPoly::even(df, r) * xs[s] * eps;
        }
        int l = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1, ++l) {
            const auto t = static_cast<unsigned>(std::countr_zero(rest));
            const std::uint32_t bit = std::uint32_t{1} << t;
            if (es[t].is_zero())
                continue;
            SuperPoly term = SuperPoly::term(f, r, mask & (bit - 1)) * es[t] *
                             SuperPoly::term(one, r, mask & ~((bit << 1) - 1));
            out += (odd() && l % 2) ? -term : term;
        }
    }
    return out;
}

namespace {

SuperPoly zero_super(std::size_t n, const CoeffRing& ring) { return SuperPoly(n, ring, n); }

MultiPoly x_of(std::size_t n, const CoeffRing& ring, std::size_t a) { return MultiPoly::x(n, ring, a); }
MultiPoly y_of(std::size_t n, const CoeffRing& ring, std::size_t a) { return MultiPoly::y(n, ring, a); }

MultiPoly pi_of(unsigned m, std::size_t n, const CoeffRing& ring, std::size_t a)
{
    return pi_k(m, n, ring, x_slot(n, a), y_slot(n, a));
}

void check_koszul_shape(const SuperPoly& v)
{
    if (v.odd() != v.strands())
        throw std::invalid_argument("Koszul rep elements need one eps per strand");
}

void check_steenrod_ring(std::uint64_t p, const CoeffRing& ring)
{
    if (!is_prime(p))
        throw std::invalid_argument("Steenrod powers need a prime, got " + std::to_string(p));
    if (ring.kind() != CoeffKind::PrimeField || ring.prime() != p)
        throw CoefficientError("Steenrod powers for p = " + std::to_string(p) + " need coefficients F_" +
                               std::to_string(p) + ", got " + ring.name());
}

}  // namespace

OperatorAction L_op(unsigned m, std::size_t n, const CoeffRing& ring, Rep rep)
{
    OperatorAction op;
    op.name = "L_" + std::to_string(m);
    op.rep = rep;
    op.rule = Extension::EvenDerivation;
    op.degree_shift = 2 * static_cast<int>(m);
    op.on_variable = [=](std::size_t s) {
        return SuperPoly::even(MultiPoly::variable(n, ring, s).pow(m + 1), n);
    };
    op.on_epsilon = [=](std::size_t) { return zero_super(n, ring); };
    return op;
}

OperatorAction G_op(unsigned m, std::size_t n, const CoeffRing& ring, Rep rep)
{
    OperatorAction op;
    op.name = "G_" + std::to_string(m);
    op.rep = rep;
    op.rule = Extension::OddDerivation;
    op.degree_shift = 2 * static_cast<int>(m);
    op.on_variable = [=](std::size_t) { return zero_super(n, ring); };
    op.on_epsilon = [=](std::size_t a) {
        MultiPoly v = x_of(n, ring, a).pow(m + 1);
        if (rep == Rep::Koszul)
            v -= y_of(n, ring, a).pow(m + 1);
        return SuperPoly::even(v, n);
    };
    return op;
}

OperatorAction lambda_op(unsigned m, std::size_t n, const CoeffRing& ring)
{
    OperatorAction op;
    op.name = "lambda_" + std::to_string(m);
    op.rule = Extension::EvenDerivation;
    op.degree_shift = 2 * static_cast<int>(m);
    op.on_variable = [=](std::size_t) { return zero_super(n, ring); };
    op.on_epsilon = [=](std::size_t a) {
        return SuperPoly::epsilon(n, ring, n, a) * SuperPoly::even(pi_of(m, n, ring, a), n);
    };
    return op;
}

OperatorAction lambda_op(unsigned m, unsigned k, std::size_t n, const CoeffRing& ring)
{
    OperatorAction op;
    op.name = "lambda_" + std::to_string(m) + "," + std::to_string(k);
    op.rule = Extension::EvenDerivation;
    op.degree_shift = 2 * static_cast<int>(m + k);
    op.on_variable = [=](std::size_t) { return zero_super(n, ring); };
    op.on_epsilon = [=](std::size_t a) {
        return SuperPoly::epsilon(n, ring, n, a) *
               SuperPoly::even(pi_of(m, n, ring, a) * pi_of(k, n, ring, a), n);
    };
    return op;
}

OperatorAction twisted_L_op(unsigned m, std::size_t n, const CoeffRing& ring)
{
    OperatorAction op = L_op(m, n, ring);
    op.name = "L~_" + std::to_string(m);
    op.on_epsilon = lambda_op(m, n, ring).on_epsilon;
    return op;
}

OperatorAction steenrod_op(std::uint64_t p, std::size_t n, const CoeffRing& ring)
{
    check_steenrod_ring(p, ring);
    const auto e = static_cast<unsigned>(p);
    OperatorAction op;
    op.name = "P";
    op.rule = Extension::Multiplicative;
    op.on_variable = [=](std::size_t s) {
        MultiPoly x = MultiPoly::variable(n, ring, s);
        return SuperPoly::even(x + x.pow(e), n);
    };
    op.on_epsilon = [=](std::size_t a) {
        MultiPoly w = MultiPoly::constant(n, ring, 1) + (x_of(n, ring, a) - y_of(n, ring, a)).pow(e - 1);
        return SuperPoly::epsilon(n, ring, n, a) * SuperPoly::even(w, n);
    };
    return op;
}

SuperPoly commutator(const OperatorAction& a, const OperatorAction& b, const SuperPoly& v)
{
    SuperPoly ab = a(b(v)), ba = b(a(v));
    return (a.odd() && b.odd()) ? ab + ba : ab - ba;
}

MultiPoly virasoro_L(unsigned m, const MultiPoly& f)
{
    MultiPoly out(f.strands(), f.ring());
    for (std::size_t s = 0; s < 2 * f.strands(); ++s) {
        MultiPoly df = f.derivative(s);
        if (!df.is_zero())
            out += df * MultiPoly::variable(f.strands(), f.ring(), s).pow(m + 1);
    }
    return out;
}

SuperPoly super_G_lambda(SuperKind kind, unsigned m, unsigned n, const SuperPoly& v)
{
    check_koszul_shape(v);
    switch (kind) {
    case SuperKind::G:
        return G_op(m, v.strands(), v.ring())(v);
    case SuperKind::Lambda:
        return lambda_op(m, v.strands(), v.ring())(v);
    case SuperKind::Lambda2:
        return lambda_op(m, n, v.strands(), v.ring())(v);
    }
    throw std::invalid_argument("unknown operator kind");
}

SuperPoly twisted_L(unsigned m, const SuperPoly& v)
{
    check_koszul_shape(v);
    return twisted_L_op(m, v.strands(), v.ring())(v);
}

SuperPoly steenrod_total(std::uint64_t p, const SuperPoly& v)
{
    check_koszul_shape(v);
    return steenrod_op(p, v.strands(), v.ring())(v);
}

SuperPoly steenrod_power(unsigned i, std::uint64_t p, const SuperPoly& v)
{
    check_koszul_shape(v);
    const OperatorAction op = steenrod_op(p, v.strands(), v.ring());
    std::set<int> degrees;
    for (const auto& [mask, f] : v.parts())
        for (const auto& [m, c] : f.terms())
            degrees.insert(m.degree() + 2 * std::popcount(mask));
    SuperPoly out(v.strands(), v.ring(), v.odd());
    const int shift = 2 * static_cast<int>(i) * static_cast<int>(p - 1);
    for (int d : degrees)
        out += op(v.component(d)).component(d + shift);
    return out;
}

BSElement bs_virasoro(unsigned m, const BSBimodule& b, const BSElement& v)
{
    BSElement out = b.zero();
    for (std::size_t s = 0; s < v.size(); ++s) {
        if (v[s].is_zero())
            continue;
        auto factors = b.basis_factors(s);
        factors[0] = v[s];
        for (std::size_t t = 0; t < factors.size(); ++t) {
            MultiPoly lt = virasoro_L(m, factors[t]);
            if (lt.is_zero())
                continue;
            auto f2 = factors;
            f2[t] = std::move(lt);
            out = add(out, b.normal_form(std::move(f2)));
        }
    }
    return out;
}

BSElement bs_steenrod(std::uint64_t p, const BSBimodule& b, const BSElement& v)
{
    check_steenrod_ring(p, b.ring());
    const std::size_t n = b.strands();
    std::vector<MultiPoly> images;
    for (std::size_t s = 0; s < 2 * n; ++s) {
        MultiPoly x = MultiPoly::variable(n, b.ring(), s);
        images.push_back(x + x.pow(static_cast<unsigned>(p)));
    }
    BSElement out = b.zero();
    for (std::size_t s = 0; s < v.size(); ++s) {
        if (v[s].is_zero())
            continue;
        auto factors = b.basis_factors(s);
        factors[0] = v[s];
        for (auto& f : factors)
            f = f.substitute(images);
        out = add(out, b.normal_form(std::move(factors)));
    }
    return out;
}

BSElement thom_twist_action(unsigned n, const BSBimodule& bi, const BSElement& b)
{
    if (bi.length() != 1)
        throw std::invalid_argument("the Thom-twisted rep is defined on a single B_i");
    if (!bi.ring().is_unit(2))
        throw CoefficientError("the Thom twist needs 2 inverted; " + bi.ring().name() + " does not invert 2");
    const std::size_t s = bi.strands();
    const auto i = static_cast<std::size_t>(bi.word()[0]);
    const CoeffRing& ring = bi.ring();
    MultiPoly ax = MultiPoly::x(s, ring, i) - MultiPoly::x(s, ring, i + 1);
    MultiPoly ay = MultiPoly::y(s, ring, i) - MultiPoly::y(s, ring, i + 1);
    MultiPoly w = (ax.pow(n) + ay.pow(n)).scaled(mpq_class(-1, 2));
    return add(bs_virasoro(n, bi, b), bi.act(w, b));
}

namespace {

std::vector<SuperPoly> rep_basis(std::size_t n, const CoeffRing& ring, const std::vector<std::size_t>& slots,
                                 unsigned max_total)
{
    std::vector<SuperPoly> out;
    for (unsigned t = 0; t <= max_total; ++t)
        for (const auto& m : monomials_of_total(slots, t))
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
                out.push_back(SuperPoly::term(MultiPoly::monomial(n, ring, m), n, mask));
    return out;
}

}  // namespace

RelationReport check_operator_relations(std::size_t n, unsigned max_index, unsigned max_total,
                                        const CoeffRing& ring)
{
    RelationReport rep;
    std::vector<std::size_t> xs, xys;
    for (std::size_t a = 1; a <= n; ++a)
        xs.push_back(x_slot(n, a));
    xys = xs;
    for (std::size_t a = 1; a <= n; ++a)
        xys.push_back(y_slot(n, a));
    const auto untwisted = rep_basis(n, ring, xs, max_total);
    const auto koszul = rep_basis(n, ring, xys, max_total);
    auto check = [&](const std::string& what, const std::vector<SuperPoly>& basis, auto&& lhs, auto&& rhs) {
        for (const auto& v : basis) {
            ++rep.checked;
            if (lhs(v) != rhs(v)) {
                rep.failures.push_back(what + " fails on " + v.str());
                return;
            }
        }
    };
    auto sc = [](long c, const SuperPoly& v) { return v.scaled(mpq_class(c)); };
    const auto g0 = G_op(0, n, ring);
    for (unsigned a = 0; a <= max_index; ++a) {
        const std::string sa = std::to_string(a);
        const auto la = twisted_L_op(a, n, ring);
        check("L~_" + sa + " G_0 = G_0 L~_" + sa, koszul, [&](const SuperPoly& v) { return la(g0(v)); },
              [&](const SuperPoly& v) { return g0(la(v)); });
        const auto lam = lambda_op(a, n, ring);
        const auto ga = G_op(a, n, ring);
        check("G_" + sa + " = [G_0, lambda_" + sa + "]", koszul, [&](const SuperPoly& v) { return ga(v); },
              [&](const SuperPoly& v) { return commutator(g0, lam, v); });
        for (unsigned b = 0; b <= max_index; ++b) {
            const std::string sb = std::to_string(b), ab = std::to_string(a + b);
            const long nm = static_cast<long>(b) - static_cast<long>(a);
            const auto lu_a = L_op(a, n, ring, Rep::Untwisted), lu_b = L_op(b, n, ring, Rep::Untwisted);
            const auto lu_ab = L_op(a + b, n, ring, Rep::Untwisted);
            const auto gu_b = G_op(b, n, ring, Rep::Untwisted), gu_a = G_op(a, n, ring, Rep::Untwisted);
            const auto gu_ab = G_op(a + b, n, ring, Rep::Untwisted);
            check("[L_" + sa + ", L_" + sb + "] = " + std::to_string(nm) + " L_" + ab, untwisted,
                  [&](const SuperPoly& v) { return commutator(lu_a, lu_b, v); },
                  [&](const SuperPoly& v) { return sc(nm, lu_ab(v)); });
            check("[L_" + sa + ", G_" + sb + "] = " + std::to_string(b + 1) + " G_" + ab, untwisted,
                  [&](const SuperPoly& v) { return commutator(lu_a, gu_b, v); },
                  [&](const SuperPoly& v) { return sc(b + 1, gu_ab(v)); });
            check("{G_" + sa + ", G_" + sb + "} = 0", untwisted,
                  [&](const SuperPoly& v) { return commutator(gu_a, gu_b, v); },
                  [&](const SuperPoly&) { return SuperPoly(n, ring, n); });

            const auto lb = twisted_L_op(b, n, ring), lab = twisted_L_op(a + b, n, ring);
            const auto gb = G_op(b, n, ring), gab = G_op(a + b, n, ring);
            const auto lam2 = lambda_op(a, b, n, ring);
            check("[L~_" + sa + ", L~_" + sb + "] = " + std::to_string(nm) + " L~_" + ab, koszul,
                  [&](const SuperPoly& v) { return commutator(la, lb, v); },
                  [&](const SuperPoly& v) { return sc(nm, lab(v)); });
            check("[L~_" + sa + ", G_" + sb + "] = " + std::to_string(b + 1) + " G_" + ab + " - [G_0, lambda_" + sa +
                      "," + sb + "]",
                  koszul, [&](const SuperPoly& v) { return commutator(la, gb, v); },
                  [&](const SuperPoly& v) { return sc(b + 1, gab(v)) - commutator(g0, lam2, v); });
        }
    }
    return rep;
}

namespace {

void accumulate(HochschildChain& out, std::size_t g, const MultiPoly& v)
{
    if (v.is_zero())
        return;
    auto it = out.find(g);
    if (it == out.end()) {
        out.emplace(g, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero())
        out.erase(it);
}

template <typename F>
HochschildChain map_summandwise(const ChainComplex& c, const HochschildComplex& h, const HochschildChain& x,
                                F&& f)
{
    HochschildChain out;
    for (const auto& [g, coeff] : x) {
        const auto& gen = h.generators.at(g);
        const BSBimodule& m = c.term(gen.k).at(gen.summand);
        BSElement b = m.zero();
        b[gen.basis] = coeff;
        BSElement r = f(m, b, gen.mask);
        for (std::size_t s = 0; s < r.size(); ++s)
            accumulate(out, h.index(gen.k, gen.summand, s, gen.mask), r[s]);
    }
    return out;
}

}  // namespace

HochschildChain apply_differential(const FreeComplex& f, const HochschildChain& x)
{
    HochschildChain out;
    for (const auto& [g, p] : x)
        for (const auto& [y, q] : f.d.at(g))
            accumulate(out, y, p * q);
    return out;
}

HochschildChain hochschild_twisted_L(unsigned m, const ChainComplex& c, const HochschildComplex& h,
                                     const HochschildChain& x)
{
    const std::size_t n = c.strands();
    return map_summandwise(c, h, x, [&](const BSBimodule& mod, const BSElement& b, std::uint32_t mask) {
        BSElement r = bs_virasoro(m, mod, b);
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            const std::size_t a = static_cast<std::size_t>(std::countr_zero(rest)) + 1;
            r = add(r, mod.act(pi_of(m, n, mod.ring(), a), b));
        }
        return r;
    });
}

HochschildChain hochschild_steenrod(std::uint64_t p, const ChainComplex& c, const HochschildComplex& h,
                                    const HochschildChain& x)
{
    const std::size_t n = c.strands();
    check_steenrod_ring(p, c.ring());
    return map_summandwise(c, h, x, [&](const BSBimodule& mod, const BSElement& b, std::uint32_t mask) {
        BSElement r = bs_steenrod(p, mod, b);
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            const std::size_t a = static_cast<std::size_t>(std::countr_zero(rest)) + 1;
            MultiPoly w = MultiPoly::constant(n, mod.ring(), 1) +
                          (x_of(n, mod.ring(), a) - y_of(n, mod.ring(), a)).pow(static_cast<unsigned>(p - 1));
            r = mod.act(w, r);
        }
        return r;
    });
}

HochschildChain hochschild_product(const ChainComplex& c, const HochschildComplex& h, const HochschildChain& x,
                                   const HochschildChain& y)
{
    HochschildChain out;
    for (const auto& [g1, f1] : x)
        for (const auto& [g2, f2] : y) {
            const auto& a = h.generators.at(g1);
            const auto& b = h.generators.at(g2);
            if (a.k != b.k || a.summand != b.summand)
                throw std::invalid_argument("product of chains from different summands");
            const int sign = exterior_sign(a.mask, b.mask);
            if (sign == 0)
                continue;
            const BSBimodule& m = c.term(a.k).at(a.summand);
            BSElement u = m.zero(), v = m.zero();
            u[a.basis] = f1;
            v[b.basis] = f2;
            BSElement r = m.multiply(u, v);
            for (std::size_t s = 0; s < r.size(); ++s)
                accumulate(out, h.index(a.k, a.summand, s, a.mask | b.mask), sign > 0 ? r[s] : -r[s]);
        }
    return out;
}

bool chains_equal(const HochschildChain& a, const HochschildChain& b)
{
    HochschildChain d = a;
    for (const auto& [g, v] : b)
        accumulate(d, g, -v);
    return d.empty();
}

namespace {

/// Z-basis of the part of a Hochschild complex in one (i, j, k): generator times monomial.
struct Strip {
    std::vector<std::pair<std::size_t, Monomial>> basis;
    std::map<std::size_t, std::map<Monomial, std::size_t, GrLexLess>> index;

    std::size_t size() const { return basis.size(); }

    std::vector<mpz_class> vector(const HochschildChain& x) const
    {
        std::vector<mpz_class> v(basis.size());
        for (const auto& [g, f] : x) {
            auto it = index.find(g);
            if (it == index.end())
                throw std::logic_error("chain leaves its strip");
            for (const auto& [m, c] : f.terms()) {
                auto jt = it->second.find(m);
                if (jt == it->second.end() || c.get_den() != 1)
                    throw std::logic_error("chain leaves its strip");
                v[jt->second] = c.get_num();
            }
        }
        return v;
    }

    HochschildChain chain(const std::vector<mpz_class>& v, std::size_t n, const CoeffRing& ring) const
    {
        HochschildChain x;
        for (std::size_t t = 0; t < v.size(); ++t)
            if (v[t] != 0)
                accumulate(x, basis[t].first, MultiPoly::monomial(n, ring, basis[t].second, mpq_class(v[t])));
        return x;
    }
};

Strip make_strip(const FreeComplex& f, int i, int j, int k)
{
    Strip s;
    for (std::size_t g = 0; g < f.cells.size(); ++g) {
        const Cell& c = f.cells[g];
        if (c.i != i || c.k != k || c.j > j || (j - c.j) % 2)
            continue;
        for (const auto& m : monomials_of_total(f.slots, static_cast<unsigned>((j - c.j) / 2))) {
            s.index[g].emplace(m, s.basis.size());
            s.basis.emplace_back(g, m);
        }
    }
    return s;
}

IntMatrix strip_matrix(const FreeComplex& d, const Strip& src, const Strip& tgt, const CoeffRing& ring)
{
    IntMatrix a(tgt.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
        HochschildChain x;
        x.emplace(src.basis[col].first, MultiPoly::monomial(d.strands, ring, src.basis[col].second));
        auto v = tgt.vector(apply_differential(d, x));
        for (std::size_t row = 0; row < v.size(); ++row)
            a(row, col) = v[row];
    }
    return a;
}

bool in_column_span(const IntMatrix& a, const std::vector<mpz_class>& v)
{
    if (a.cols() == 0 || a.rows() == 0) {
        for (const auto& x : v)
            if (x != 0)
                return false;
        return true;
    }
    return in_image(a, v);
}

}  // namespace

DescentReport check_descent(const ChainComplex& c, unsigned m, int max_degree, std::uint64_t seed)
{
    if (c.ring() != CoeffRing::integers())
        throw CoefficientError("descent is checked over Z");
    const CoeffRing& z = c.ring();
    const std::size_t n = c.strands();
    auto h = hochschild_bicomplex(c);
    const FreeComplex dk = h.component(0);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-2, 2);

    std::set<std::pair<int, int>> ik;
    int jmin = 0;
    for (const auto& cell : dk.cells) {
        ik.emplace(cell.i, cell.k);
        jmin = std::min(jmin, cell.j);
    }
    if (jmin % 2)
        --jmin;
    const int shift = 2 * static_cast<int>(m);

    DescentReport rep;
    auto fail = [&](bool& flag, const std::string& what, int i, int j, int k) {
        if (flag)
            rep.failure = what + " at (i, j, k) = (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                          std::to_string(k) + ")";
        flag = false;
    };
    for (const auto& [i, k] : ik)
        for (int j = jmin; j + shift <= max_degree; j += 2) {
            Strip src = make_strip(dk, i, j, k);
            if (src.size() == 0)
                continue;
            ++rep.bidegrees;
            Strip below = make_strip(dk, i - 1, j, k), above = make_strip(dk, i + 1, j, k);
            Strip tgt = make_strip(dk, i, j + shift, k), tgt_above = make_strip(dk, i + 1, j + shift, k);
            IntMatrix d_out = strip_matrix(dk, src, below, z);
            IntMatrix d_in = strip_matrix(dk, above, src, z);
            IntMatrix t_in = strip_matrix(dk, tgt_above, tgt, z);
            IntMatrix cycles = below.size() == 0 ? IntMatrix::identity(src.size()) : kernel_basis(d_out);

            auto lift = [&](const std::vector<mpz_class>& v) {
                return hochschild_twisted_L(m, c, h, src.chain(v, n, z));
            };
            for (std::size_t col = 0; col < cycles.cols(); ++col) {
                auto zc = cycles.column(col);
                HochschildChain image = lift(zc);
                if (!apply_differential(dk, image).empty())
                    fail(rep.cycles, "a cycle maps to a non-cycle", i, j, k);
                // second representative: z + d(random chain)
                std::vector<mpz_class> r(above.size());
                for (auto& x : r)
                    x = small(rng);
                auto z2 = zc;
                for (std::size_t row = 0; row < d_in.rows(); ++row)
                    for (std::size_t t = 0; t < r.size(); ++t)
                        z2[row] += d_in(row, t) * r[t];
                HochschildChain diff = image;
                for (const auto& [g, v] : lift(z2))
                    accumulate(diff, g, -v);
                if (!in_column_span(t_in, tgt.vector(diff)))
                    fail(rep.well_defined, "two representatives give different classes", i, j, k);
            }
            for (std::size_t col = 0; col < d_in.cols(); ++col)
                if (!in_column_span(t_in, tgt.vector(lift(d_in.column(col)))))
                    fail(rep.boundaries, "a boundary maps to a non-boundary", i, j, k);
        }
    return rep;
}

SteenrodReport check_steenrod(std::uint64_t p, const ChainComplex& c, std::size_t max_pairs)
{
    const auto& fp = c.ring();
    auto h = hochschild_bicomplex(c);
    auto dk = h.component(0), dr = h.component(1);
    const std::size_t n = c.strands();
    SteenrodReport r;
    auto fail = [&](bool& flag, const std::string& what) {
        if (flag && r.failure.empty())
            r.failure = what;
        flag = false;
    };
    for (std::size_t g = 0; g < h.generators.size(); ++g)
        for (const auto& f : {MultiPoly::constant(n, fp, 1), MultiPoly::x(n, fp, 1)}) {
            HochschildChain x{{g, f}};
            ++r.chains;
            auto px = hochschild_steenrod(p, c, h, x);
            if (r.koszul && !chains_equal(hochschild_steenrod(p, c, h, apply_differential(dk, x)), apply_differential(dk, px)))
                fail(r.koszul, "Koszul differential on generator " + std::to_string(g));
            if (r.rouquier && !chains_equal(hochschild_steenrod(p, c, h, apply_differential(dr, x)), apply_differential(dr, px)))
                fail(r.rouquier, "Rouquier differential on generator " + std::to_string(g));
            const auto& src = h.complex.cells[g];
            for (const auto& [g2, f2] : px) {
                const auto& dst = h.complex.cells[g2];
                for (const auto& [mono, coeff] : f2.terms()) {
                    const int shift = dst.j + mono.degree() - src.j - f.degree();
                    if (dst.i != src.i || dst.k != src.k || shift < 0 || shift % static_cast<int>(2 * (p - 1)))
                        fail(r.grading, "grading on generator " + std::to_string(g));
                }
            }
        }
    std::vector<std::pair<std::size_t, std::size_t>> eligible;
    for (std::size_t g1 = 0; g1 < h.generators.size(); ++g1)
        for (std::size_t g2 = 0; g2 < h.generators.size(); ++g2) {
            const auto &a = h.generators[g1], &b = h.generators[g2];
            if (a.k == b.k && a.summand == b.summand && !(a.mask & b.mask))
                eligible.emplace_back(g1, g2);
        }
    r.eligible_pairs = eligible.size();
    const std::size_t stride =
        max_pairs == 0 ? 1 : std::max<std::size_t>(1, (eligible.size() + max_pairs - 1) / max_pairs);
    for (std::size_t t = 0; t < eligible.size() && r.cartan; t += stride) {
        const auto [g1, g2] = eligible[t];
        HochschildChain x{{g1, MultiPoly::x(n, fp, 1)}}, y{{g2, MultiPoly::constant(n, fp, 1)}};
        ++r.pairs;
        if (!chains_equal(hochschild_steenrod(p, c, h, hochschild_product(c, h, x, y)),
                          hochschild_product(c, h, hochschild_steenrod(p, c, h, x), hochschild_steenrod(p, c, h, y))))
            fail(r.cartan, "Cartan formula on generators " + std::to_string(g1) + ", " + std::to_string(g2));
    }
    return r;
}

}  // namespace soergel
