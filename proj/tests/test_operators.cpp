#include <doctest.h>

#include "random_poly.hpp"
#include "soergel/operators.hpp"

#include <chrono>
#include <random>

using namespace soergel;
using soergel::testing::random_poly;
using soergel::testing::x_slots;
using soergel::testing::xy_slots;

namespace {

const CoeffRing Z = CoeffRing::integers();
const CoeffRing Q = CoeffRing::rationals();

std::vector<mpq_class> q(std::initializer_list<long> v) { return std::vector<mpq_class>(v.begin(), v.end()); }

FormalSeries random_series(std::mt19937& rng, const CoeffRing& ring, std::size_t order)
{
    std::uniform_int_distribution<int> c(-3, 3), sign(0, 1);
    std::vector<mpq_class> b(order + 1);
    b[0] = sign(rng) ? 1 : -1;
    for (std::size_t i = 1; i <= order; ++i)
        b[i] = c(rng);
    return FormalSeries(ring, b);
}

SuperSeries random_super(std::mt19937& rng, const CoeffRing& ring, std::size_t order)
{
    std::uniform_int_distribution<int> c(-3, 3);
    std::vector<mpq_class> a(order + 1);
    for (auto& x : a)
        x = c(rng);
    return SuperSeries(ring, random_series(rng, ring, order).coefficients(), a);
}

SuperPoly random_super_poly(std::mt19937& rng, std::size_t n, const CoeffRing& ring, unsigned max_total)
{
    SuperPoly v(n, ring, n);
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        v.add(m, random_poly(rng, n, ring, xy_slots(n), max_total, 3));
    return v;
}

MultiPoly X(std::size_t n, std::size_t i, const CoeffRing& r = Z) { return MultiPoly::x(n, r, i); }
MultiPoly Y(std::size_t n, std::size_t i, const CoeffRing& r = Z) { return MultiPoly::y(n, r, i); }
SuperPoly ev(const MultiPoly& f) { return SuperPoly::even(f, f.strands()); }
SuperPoly eps(std::size_t n, std::size_t a, const CoeffRing& r = Z) { return SuperPoly::epsilon(n, r, n, a); }

}  // namespace

TEST_CASE("series_compose examples")
{
    auto f = FormalSeries(Z, q({1, 1, 0, 0, 0, 0}));  // X + X^2
    auto g = FormalSeries(Z, q({1, 0, 1, 0, 0, 0}));  // X + X^3
    // (X + X^3) + (X + X^3)^2 = X + X^2 + X^3 + 2 X^4 + X^6
    CHECK(series_compose(f, g) == FormalSeries(Z, q({1, 1, 1, 2, 0, 1})));
    CHECK(f.compose(FormalSeries::identity(Z, 5)) == f);
    CHECK(FormalSeries::identity(Z, 5).compose(f) == f);
    // X / (1 - X) and X / (1 + X) are inverse.
    auto geo = FormalSeries(Z, q({1, 1, 1, 1, 1, 1}));
    CHECK(geo.inverse() == FormalSeries(Z, q({1, -1, 1, -1, 1, -1})));
    CHECK_THROWS_AS(FormalSeries(Z, q({2, 1})), CoefficientError);
    CHECK_NOTHROW(FormalSeries(Q, q({2, 1})));
    CHECK_THROWS_AS(f.compose(FormalSeries::identity(Z, 4)), std::invalid_argument);
}

TEST_CASE("formal series form a group up to truncation")
{
    std::mt19937 rng(3);
    for (auto ring : {Z, CoeffRing::prime_field(5)}) {
        for (int t = 0; t < 20; ++t) {
            auto f = random_series(rng, ring, 7), g = random_series(rng, ring, 7), h = random_series(rng, ring, 7);
            CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));
            CHECK(f.compose(f.inverse()) == FormalSeries::identity(ring, 7));
            CHECK(f.inverse().compose(f) == FormalSeries::identity(ring, 7));
            CHECK(f.compose(g).inverse() == g.inverse().compose(f.inverse()));
        }
    }
    auto f = FormalSeries(Q, q({3, 1, -2, 5}));
    CHECK(f.compose(f.inverse()) == FormalSeries::identity(Q, 3));
}

TEST_CASE("super series")
{
    // (X + theta X^2) o (X + X^2) = (X + X^2) + theta (X + X^2)^2
    auto f = SuperSeries(Z, q({1, 0, 0, 0}), q({0, 1, 0, 0}));
    auto g = SuperSeries(Z, q({1, 1, 0, 0}), q({0, 0, 0, 0}));
    CHECK(f.compose(g) == SuperSeries(Z, q({1, 1, 0, 0}), q({0, 1, 2, 1})));
    // X o (X + theta X^2): the odd part of the inner series is carried by b_0 = 1.
    auto id = SuperSeries::identity(Z, 3);
    CHECK(id.compose(f) == f);
    CHECK(f.compose(id) == f);
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        auto a = random_super(rng, Z, 6), b = random_super(rng, Z, 6), c = random_super(rng, Z, 6);
        CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
        CHECK(a.compose(a.inverse()) == SuperSeries::identity(Z, 6));
        CHECK(a.inverse().compose(a) == SuperSeries::identity(Z, 6));
        CHECK(a.compose(b).even_series() == a.even_series().compose(b.even_series()));
    }
}

TEST_CASE("dual_pair_act examples")
{
    const std::size_t n = 1;
    auto x = X(n, 1);
    for (unsigned m = 1; m <= 5; ++m)
        CHECK(dual_pair_act({{m, 1}}, x) == x.pow(m + 1));
    CHECK(dual_pair_act({{1, 1}}, x.pow(2)) == x.pow(3).scaled(2));
    CHECK(dual_pair_act({{1, 2}}, x).is_zero());
    CHECK(dual_pair_act({{1, 1}, {2, 1}}, x).is_zero());
    CHECK(dual_pair_act({{3, 2}}, x).is_zero());
    // The empty dual monomial is the unit.
    CHECK(dual_pair_act({}, x.pow(4)) == x.pow(4));
    CHECK_THROWS_AS(dual_pair_act({{0, 1}}, x), std::invalid_argument);
}

TEST_CASE("dual_pair_act pairs with evaluation at a series")
{
    // sum_I b^I (s^I)^*(X^k) = f(X)^k for f = X + sum b_m X^{m+1}.
    const std::size_t order = 4;
    const std::vector<long> b = {1, 2, -1, 3, 1};  // b_0 .. b_4
    auto x = X(1, 1);
    MultiPoly f(1, Z);
    for (std::size_t m = 0; m <= order; ++m)
        f += x.pow(static_cast<unsigned>(m + 1)).scaled(mpq_class(b[m]));
    // all multi-indices of weight sum m I_m <= order
    std::vector<DualIndex> indices = {{}};
    for (unsigned m = 1; m <= order; ++m) {
        std::vector<DualIndex> next;
        for (const auto& idx : indices) {
            unsigned w = 0;
            for (const auto& [mm, e] : idx)
                w += mm * e;
            for (unsigned e = 0; w + e * m <= order; ++e) {
                DualIndex d = idx;
                if (e)
                    d[m] = e;
                next.push_back(d);
            }
        }
        indices = std::move(next);
    }
    CHECK(indices.size() == 12);  // partitions of 0..4 into parts <= 4: 1+1+2+3+5
    for (unsigned k = 1; k <= 4; ++k) {
        MultiPoly sum(1, Z);
        for (const auto& idx : indices) {
            mpz_class coeff = 1;
            for (const auto& [m, e] : idx)
                for (unsigned t = 0; t < e; ++t)
                    coeff *= b[m];
            sum += dual_pair_act(idx, x.pow(k)).scaled(mpq_class(coeff));
        }
        const MultiPoly fk = f.pow(k);
        for (unsigned d = k; d <= k + order; ++d)
            CHECK(sum.component(2 * static_cast<int>(d)) == fk.component(2 * static_cast<int>(d)));
    }
}

TEST_CASE("primitive dual monomials agree with L_m")
{
    for (std::size_t n = 1; n <= 2; ++n) {
        const unsigned top = n == 1 ? 6 : 4;
        for (unsigned t = 0; t <= top; ++t)
            for (const auto& mono : monomials_of_total(xy_slots(n), t)) {
                auto f = MultiPoly::monomial(n, Z, mono);
                for (unsigned m = 1; m <= 4; ++m)
                    CHECK(dual_pair_act({{m, 1}}, f) == virasoro_L(m, f));
            }
    }
}

TEST_CASE("virasoro_L")
{
    auto x = X(1, 1);
    for (unsigned k = 0; k <= 6; ++k)
        CHECK(virasoro_L(0, x.pow(k)) == x.pow(k).scaled(mpq_class(k)));
    for (unsigned m = 0; m <= 5; ++m)
        CHECK(virasoro_L(m, x) == x.pow(m + 1));
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        auto f = random_poly(rng, 2, Z, xy_slots(2), 8);
        auto l12 = virasoro_L(1, virasoro_L(2, f)) - virasoro_L(2, virasoro_L(1, f));
        CHECK(l12 == virasoro_L(3, f));
        CHECK(virasoro_L(2, f).degree() == (f.is_zero() ? -1 : f.degree() + 4));
    }
}

TEST_CASE("super_G_lambda examples")
{
    const std::size_t n = 1;
    auto e = eps(n, 1);
    auto x = X(n, 1), y = Y(n, 1);
    CHECK(super_G_lambda(SuperKind::G, 0, 0, e) == ev(x - y));
    CHECK(super_G_lambda(SuperKind::Lambda, 1, 0, e) == e * ev(x + y));
    CHECK(super_G_lambda(SuperKind::Lambda2, 1, 1, e) == e * ev((x + y).pow(2)));
    auto g0 = G_op(0, n, Z), l2 = lambda_op(2, n, Z);
    CHECK(commutator(g0, l2, e) == ev(x.pow(3) - y.pow(3)));
    CHECK(commutator(g0, l2, e) == super_G_lambda(SuperKind::G, 2, 0, e));
    // G_0 is the Koszul differential.
    std::mt19937 rng(9);
    for (std::size_t s = 1; s <= 3; ++s) {
        auto k = koszul_resolution(s);
        for (int t = 0; t < 10; ++t) {
            auto v = random_super_poly(rng, s, Z, 4);
            CHECK(super_G_lambda(SuperKind::G, 0, 0, v) == k.differential(v));
        }
    }
    CHECK(G_op(3, 2, Z).degree_shift == 6);
    CHECK(G_op(0, 1, Z).odd());
    CHECK_FALSE(lambda_op(1, 1, Z).odd());
}

TEST_CASE("twisted_L examples")
{
    const std::size_t n = 1;
    auto e = eps(n, 1);
    auto x = X(n, 1), y = Y(n, 1);
    CHECK(twisted_L(1, e) == e * ev(x + y));
    CHECK(twisted_L(0, e) == e);
    auto g0 = G_op(0, n, Z);
    CHECK(twisted_L(1, g0(e)) == ev(x.pow(2) - y.pow(2)));
    CHECK(g0(twisted_L_op(1, n, Z)(e)) == ev(x.pow(2) - y.pow(2)));
    std::mt19937 rng(21);
    for (int t = 0; t < 20; ++t) {
        auto v = random_super_poly(rng, 2, Z, 5);
        auto a = twisted_L_op(1, 2, Z), b = twisted_L_op(2, 2, Z), c = twisted_L_op(3, 2, Z);
        CHECK(commutator(a, b, v) == c(v));
        CHECK(c(G_op(0, 2, Z)(v)) == G_op(0, 2, Z)(c(v)));
    }
}

TEST_CASE("operator relations on full bases")
{
    auto r1 = check_operator_relations(1, 4, 8, Z);
    CHECK_MESSAGE(r1.ok(), (r1.failures.empty() ? "" : r1.failures.front()));
    CHECK(r1.checked > 0);
    auto r2 = check_operator_relations(2, 4, 4, Z);
    CHECK_MESSAGE(r2.ok(), (r2.failures.empty() ? "" : r2.failures.front()));
}

TEST_CASE("the relation check detects a wrong identity")
{
    // L~_m does not satisfy the untwisted relation with G: [L~_1, G_1] != 2 G_2.
    auto l = twisted_L_op(1, 1, Z), g1 = G_op(1, 1, Z), g2 = G_op(2, 1, Z);
    auto e = eps(1, 1);
    CHECK(commutator(l, g1, e) != g2(e).scaled(2));
    // and {G_0, G_0} is zero only as an anticommutator
    auto g0 = G_op(0, 1, Z);
    auto v = e * ev(X(1, 1));
    CHECK(commutator(g0, g0, v).is_zero());
}

TEST_CASE("steenrod_total examples")
{
    for (std::uint64_t p : {2, 3, 5}) {
        const auto fp = CoeffRing::prime_field(p);
        const auto e = static_cast<unsigned>(p);
        auto x = X(1, 1, fp), y = Y(1, 1, fp);
        auto px = ev(x + x.pow(e));
        CHECK(steenrod_total(p, ev(x)) == px);
        for (unsigned k = 0; k <= 5; ++k)
            CHECK(steenrod_total(p, ev(x.pow(k))) == ev((x + x.pow(e)).pow(k)));
        auto ep = eps(1, 1, fp);
        CHECK(steenrod_total(p, ep) == ep * ev(MultiPoly::constant(1, fp, 1) + (x - y).pow(e - 1)));
        // chain map for the Koszul differential
        auto g0 = G_op(0, 1, fp);
        CHECK(g0(steenrod_total(p, ep)) == steenrod_total(p, g0(ep)));
        // P^0 is the identity and P^1 raises degree by 2(p - 1)
        CHECK(steenrod_power(0, p, ev(x.pow(3))) == ev(x.pow(3)));
        CHECK(steenrod_power(1, p, ev(x)) == ev(x.pow(e)));
    }
    // p = 3: (X - Y)^3 = X^3 - Y^3 mod 3
    const auto f3 = CoeffRing::prime_field(3);
    auto x = X(1, 1, f3), y = Y(1, 1, f3);
    CHECK(G_op(0, 1, f3)(steenrod_total(3, eps(1, 1, f3))) == ev(x - y + x.pow(3) - y.pow(3)));
    // p = 2: P^1 = Sq^2 is squaring on degree-2 classes
    const auto f2 = CoeffRing::prime_field(2);
    CHECK(steenrod_power(1, 2, ev(X(1, 1, f2))) == ev(X(1, 1, f2).pow(2)));
    CHECK_THROWS_AS(steenrod_total(4, eps(1, 1, f2)), std::invalid_argument);
    CHECK_THROWS_AS(steenrod_total(3, eps(1, 1)), CoefficientError);
    CHECK_THROWS_AS(steenrod_total(3, eps(1, 1, f2)), CoefficientError);
}

TEST_CASE("Steenrod total power: chain map, Cartan formula, grading")
{
    std::mt19937 rng(17);
    for (std::uint64_t p : {2, 3, 5}) {
        const auto fp = CoeffRing::prime_field(p);
        for (std::size_t n = 1; n <= 2; ++n) {
            auto k = koszul_resolution(n);
            for (int t = 0; t < 8; ++t) {
                auto u = random_super_poly(rng, n, fp, 3), v = random_super_poly(rng, n, fp, 3);
                CHECK(k.differential(steenrod_total(p, u)) == steenrod_total(p, k.differential(u)));
                CHECK(steenrod_total(p, u * v) == steenrod_total(p, u) * steenrod_total(p, v));
                // sum of the P^i recovers the total power on a homogeneous element
                auto h = u.component(6);
                SuperPoly sum(n, fp, n);
                for (unsigned i = 0; i <= 6; ++i) {
                    auto pi = steenrod_power(i, p, h);
                    if (!pi.is_zero()) {
                        CHECK(pi.degree() == 6 + 2 * static_cast<int>(i * (p - 1)));
                        for (unsigned c = 0; c <= n; ++c)
                            CHECK(pi.exterior_part(c).is_zero() == steenrod_total(p, h.exterior_part(c))
                                                                         .component(pi.degree())
                                                                         .is_zero());
                    }
                    sum += pi;
                }
                CHECK(sum == steenrod_total(p, h));
            }
        }
    }
}

TEST_CASE("operators on Bott-Samelson bimodules")
{
    std::mt19937 rng(23);
    const std::size_t n = 3;
    for (auto w : {std::vector<int>{1}, std::vector<int>{1, 2}, std::vector<int>{2, 1, 2}}) {
        auto b = make_bs(w, n, Z);
        auto rand_elem = [&](const BSBimodule& m) {
            BSElement e = m.zero();
            for (auto& c : e)
                c = random_poly(rng, n, m.ring(), x_slots(n), 2, 2);
            return e;
        };
        for (int t = 0; t < 4; ++t) {
            auto u = rand_elem(b), v = rand_elem(b);
            for (unsigned m = 0; m <= 2; ++m) {
                // derivation of the ring structure
                CHECK(elements_equal(bs_virasoro(m, b, b.multiply(u, v)),
                                     add(b.multiply(bs_virasoro(m, b, u), v), b.multiply(u, bs_virasoro(m, b, v)))));
                // compatible with both actions
                auto f = random_poly(rng, n, Z, xy_slots(n), 2, 3);
                CHECK(elements_equal(bs_virasoro(m, b, b.act(f, u)),
                                     add(b.act(virasoro_L(m, f), u), b.act(f, bs_virasoro(m, b, u)))));
            }
        }
        const auto f3 = CoeffRing::prime_field(3);
        auto b3 = make_bs(w, n, f3);
        for (int t = 0; t < 3; ++t) {
            auto u = rand_elem(b3), v = rand_elem(b3);
            CHECK(elements_equal(bs_steenrod(3, b3, b3.multiply(u, v)),
                                 b3.multiply(bs_steenrod(3, b3, u), bs_steenrod(3, b3, v))));
        }
    }
    // commutes with the multiplication map B_1 -> R
    auto b1 = make_bs({1}, 2, Z);
    auto br = counit_br(1, 2, Z);
    BSElement u = b1.zero();
    u[0] = X(2, 2).pow(2);
    u[1] = X(2, 1) + X(2, 2);
    auto r = make_bs({}, 2, Z);
    CHECK(elements_equal(br.apply(bs_virasoro(2, b1, u)), bs_virasoro(2, r, br.apply(u))));
}

TEST_CASE("thom_twist_action")
{
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t i = 1; i < n; ++i) {
            auto bi = make_bs({static_cast<int>(i)}, n, Q);
            auto th = bi.basis(0);
            CHECK(elements_equal(thom_twist_action(0, bi, th), scale(th, -1)));
            CHECK(elements_equal(thom_twist_action(1, bi, th), scale(unitary_thom_element(bi), -1)));
            for (unsigned k = 0; k <= 6; ++k) {
                auto v = thom_twist_action(k, bi, th);
                for (const auto& c : v)
                    for (const auto& [mono, coeff] : c.terms())
                        CHECK(coeff.get_den() == 1);
            }
        }
    CHECK_THROWS_AS(thom_twist_action(1, make_bs({1}, 2, Z), make_bs({1}, 2, Z).basis(0)), CoefficientError);
    auto f2 = make_bs({1}, 2, CoeffRing::prime_field(2));
    CHECK_THROWS_AS(thom_twist_action(1, f2, f2.basis(0)), CoefficientError);
    auto f3 = make_bs({1}, 2, CoeffRing::prime_field(3));
    CHECK_NOTHROW(thom_twist_action(1, f3, f3.basis(0)));
    auto b12 = make_bs({1, 2}, 3, Q);
    CHECK_THROWS_AS(thom_twist_action(1, b12, b12.basis(0)), std::invalid_argument);
}

namespace {

HochschildChain random_chain(std::mt19937& rng, const HochschildComplex& h, const CoeffRing& ring, int k, int terms)
{
    std::vector<std::size_t> gens;
    for (std::size_t g = 0; g < h.generators.size(); ++g)
        if (h.generators[g].k == k)
            gens.push_back(g);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    HochschildChain x;
    const std::size_t n = h.complex.strands;
    for (int t = 0; t < terms; ++t) {
        auto f = random_poly(rng, n, ring, x_slots(n), 2, 2);
        if (f.is_zero())
            continue;
        auto [it, ok] = x.emplace(gens[pick(rng)], f);
        if (!ok) {
            it->second += f;
            if (it->second.is_zero())
                x.erase(it);
        }
    }
    return x;
}

HochschildChain single_summand(const HochschildComplex& h, const HochschildChain& x, std::size_t summand)
{
    HochschildChain out;
    for (const auto& [g, f] : x)
        if (h.generators[g].summand == summand)
            out.emplace(g, f);
    return out;
}

}  // namespace

TEST_CASE("L~_m on the trefoil Hochschild complex commutes with both differentials")
{
    auto c = rouquier_complex_of_word({1, 1, 1}, 2, Z);
    auto h = hochschild_bicomplex(c);
    auto dk = h.component(0), dr = h.component(1);
    std::mt19937 rng(31);
    for (unsigned m = 0; m <= 3; ++m)
        for (int k = -3; k <= 0; ++k) {
            auto x = random_chain(rng, h, Z, k, 5);
            auto lx = hochschild_twisted_L(m, c, h, x);
            CHECK(chains_equal(hochschild_twisted_L(m, c, h, apply_differential(dk, x)), apply_differential(dk, lx)));
            CHECK(chains_equal(hochschild_twisted_L(m, c, h, apply_differential(dr, x)), apply_differential(dr, lx)));
        }
}

TEST_CASE("L~_m does not commute with the unit map of a negative crossing")
{
    auto c = rouquier_complex_of_word({-1}, 2, Z);
    auto h = hochschild_bicomplex(c);
    auto dr = h.component(1);
    HochschildChain one;
    one.emplace(h.index(0, 0, 0, 0), MultiPoly::constant(2, Z, 1));
    CHECK(hochschild_twisted_L(1, c, h, one).empty());
    CHECK_FALSE(hochschild_twisted_L(1, c, h, apply_differential(dr, one)).empty());
}

TEST_CASE("descent on the trefoil")
{
    auto c = rouquier_complex_of_word({1, 1, 1}, 2, Z);
    for (unsigned m = 1; m <= 2; ++m) {
        auto rep = check_descent(c, m, 10);
        CHECK_MESSAGE(rep.ok(), rep.failure);
        CHECK(rep.bidegrees > 20);
    }
    CHECK_THROWS_AS(check_descent(rouquier_complex_of_word({1}, 2, CoeffRing::prime_field(2)), 1, 6), CoefficientError);
}

TEST_CASE("Steenrod powers on the trefoil Hochschild complex")
{
    std::mt19937 rng(41);
    for (std::uint64_t p : {2, 3, 5}) {
        const auto fp = CoeffRing::prime_field(p);
        auto c = rouquier_complex_of_word({1, 1, 1}, 2, fp);
        auto h = hochschild_bicomplex(c);
        auto dk = h.component(0), dr = h.component(1);
        for (int k = -3; k <= 0; ++k) {
            auto x = random_chain(rng, h, fp, k, 4);
            auto px = hochschild_steenrod(p, c, h, x);
            CHECK(chains_equal(hochschild_steenrod(p, c, h, apply_differential(dk, x)), apply_differential(dk, px)));
            CHECK(chains_equal(hochschild_steenrod(p, c, h, apply_differential(dr, x)), apply_differential(dr, px)));
            // only the internal grading moves, by multiples of 2(p - 1)
            for (const auto& [g, f] : x) {
                HochschildChain one{{g, f.component(f.degree())}};
                const auto& src = h.complex.cells[g];
                const int deg = src.j + f.degree();
                for (const auto& [g2, f2] : hochschild_steenrod(p, c, h, one)) {
                    const auto& dst = h.complex.cells[g2];
                    CHECK(dst.i == src.i);
                    CHECK(dst.k == src.k);
                    for (const auto& [mono, coeff] : f2.terms()) {
                        const int shift = dst.j + mono.degree() - deg;
                        CHECK(shift >= 0);
                        CHECK(shift % static_cast<int>(2 * (p - 1)) == 0);
                    }
                }
            }
            auto y = single_summand(h, random_chain(rng, h, fp, k, 4), 0);
            auto x0 = single_summand(h, x, 0);
            CHECK(chains_equal(hochschild_steenrod(p, c, h, hochschild_product(c, h, x0, y)),
                               hochschild_product(c, h, hochschild_steenrod(p, c, h, x0),
                                                  hochschild_steenrod(p, c, h, y))));
        }
    }
}
