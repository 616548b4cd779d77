#include <doctest.h>

#include "random_poly.hpp"
#include "soergel/hochschild.hpp"

#include <random>

using namespace soergel;
using soergel::testing::random_poly;
using soergel::testing::xy_slots;

namespace {

const CoeffRing Z = CoeffRing::integers();

std::size_t ranks_of_r(std::size_t n, int j)
{
    return j < 0 || j % 2 ? 0 : monomial_count(static_cast<unsigned>(n), static_cast<unsigned>(j / 2));
}

/// Entries of d0 d1 + d1 d0 for two components of one free complex.
bool anticommute(const FreeComplex& d0, const FreeComplex& d1)
{
    for (std::size_t x = 0; x < d0.cells.size(); ++x) {
        std::map<std::size_t, MultiPoly> acc;
        auto push = [&](const FreeComplex& a, const FreeComplex& b) {
            for (const auto& [y, p] : a.d[x])
                for (const auto& [z, q] : b.d[y]) {
                    auto it = acc.find(z);
                    if (it == acc.end())
                        acc.emplace(z, p * q);
                    else
                        it->second += p * q;
                }
        };
        push(d0, d1);
        push(d1, d0);
        for (const auto& [z, v] : acc)
            if (!v.is_zero())
                return false;
    }
    return true;
}

std::size_t nonzero_entries(const FreeComplex& f)
{
    std::size_t c = 0;
    for (const auto& row : f.d)
        c += row.size();
    return c;
}

}  // namespace

TEST_CASE("koszul_resolution examples")
{
    auto k1 = koszul_resolution(1);
    CHECK(k1.pieces() == 2);
    auto eps = SuperPoly::epsilon(1, Z, 1, 1);
    CHECK(k1.differential(eps) == SuperPoly::even(MultiPoly::x(1, Z, 1) - MultiPoly::y(1, Z, 1), 1));

    auto k2 = koszul_resolution(2);
    CHECK(k2.pieces() == 4);
    auto e1 = SuperPoly::epsilon(2, Z, 2, 1), e2 = SuperPoly::epsilon(2, Z, 2, 2);
    auto f1 = SuperPoly::even(MultiPoly::x(2, Z, 1) - MultiPoly::y(2, Z, 1), 2);
    auto f2 = SuperPoly::even(MultiPoly::x(2, Z, 2) - MultiPoly::y(2, Z, 2), 2);
    CHECK(k2.differential(e1 * e2) == f1 * e2 - f2 * e1);
}

TEST_CASE("Koszul differential squares to zero and is a derivation")
{
    std::mt19937 rng(7);
    for (std::size_t n = 1; n <= 3; ++n) {
        auto k = koszul_resolution(n);
        CHECK(k.free_complex().square_zero());
        for (int trial = 0; trial < 10; ++trial) {
            SuperPoly a(n, Z, n), b(n, Z, n);
            for (std::uint32_t m = 0; m < k.pieces(); ++m) {
                a.add(m, random_poly(rng, n, Z, xy_slots(n), 3, 2));
                b.add(m, random_poly(rng, n, Z, xy_slots(n), 3, 2));
            }
            CHECK(k.differential(k.differential(a)).is_zero());
            // Leibniz rule with the sign of the odd part of a.
            SuperPoly lhs = k.differential(a * b);
            SuperPoly rhs = k.differential(a) * b;
            for (unsigned c = 0; c <= n; ++c) {
                SuperPoly part = a.exterior_part(c) * k.differential(b);
                rhs += c % 2 ? -part : part;
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("the Koszul complex resolves R")
{
    const int D = 10;
    for (std::size_t n = 1; n <= 3; ++n) {
        auto h = graded_homology(koszul_resolution(n).free_complex(), Z, D, Page::Homology);
        for (int j = 0; j <= D; j += 2)
            CHECK(h.at({0, j, 0}).rank == ranks_of_r(n, j));
        std::size_t nonzero = 0;
        for (const auto& [key, g] : h)
            nonzero += std::get<0>(key) == 0 ? 0 : 1;
        CHECK(nonzero == 0);
    }
}

TEST_CASE("unknot table")
{
    const int D = 20;
    auto t = hh_link_homology(parse_braid("", 1), Z, D);
    for (int j = 0; j <= D; j += 2) {
        CHECK(t.at(0, j, 0) == GroupInvariants{1, {}});
        if (j >= 2)
            CHECK(t.at(1, j, 0) == GroupInvariants{1, {}});
    }
    CHECK(t.entries().size() == static_cast<std::size_t>(D / 2 + 1 + D / 2));
    // The same as the Hochschild homology of R computed as a bimodule.
    CHECK(compare_triply_graded(t, bimodule_hochschild(make_bs({}, 1, Z), Z, D)));
}

TEST_CASE("bicomplex differentials anticommute")
{
    const std::size_t n = 3;
    for (auto w : {std::vector<int>{1, 2}, std::vector<int>{1, -2}, std::vector<int>{-1, 2, 1}}) {
        auto h = hochschild_bicomplex(rouquier_complex_of_word(w, n, Z));
        auto d0 = h.component(0), d1 = h.component(1);
        CHECK(nonzero_entries(d0) + nonzero_entries(d1) == nonzero_entries(h.complex));
        CHECK(d0.square_zero());
        CHECK(d1.square_zero());
        CHECK(anticommute(d0, d1));
        CHECK(h.complex.square_zero());
    }
}

TEST_CASE("partial Hochschild homology of B_n is generated by (X_n - Y_{n+1}) eps")
{
    const int D = 14;
    for (std::size_t n = 2; n <= 3; ++n) {
        const int i = static_cast<int>(n) - 1;
        ChainComplex c(n, Z);
        auto b = make_bs({i}, n, Z);
        c.add_summand(0, b);
        auto t = hochschild_table(c, KoszulComplex::last_variable(n), Z, D);
        // (X_{n-1} - Y_n) eps is a cycle: it is killed by X_n - Y_n.
        auto th = unitary_thom_element(b);
        auto form = MultiPoly::x(n, Z, n) - MultiPoly::y(n, Z, n);
        CHECK(is_zero(b.act(form, th)));
        for (int j = 0; j <= D; j += 2)
            CHECK(t.at(1, j, 0).rank == ranks_of_r(n, j - 4));
    }
}

TEST_CASE("Markov II shift for sigma_1 on two strands")
{
    const int D = 16;
    auto u = hh_link_homology(parse_braid("", 1), Z, D);
    auto s = hh_link_homology(parse_braid("1", 2), Z, D);
    CHECK(compare_triply_graded(u, s, 1, 2, 0));
    auto sn = hh_link_homology(parse_braid("-1", 2), Z, D);
    CHECK(compare_triply_graded(u, sn, 0, -2, 1));
}

TEST_CASE("braid relation gives identical tables")
{
    const int D = 10;
    for (auto coeff : {Z, CoeffRing::prime_field(2)}) {
        auto a = hh_link_homology(parse_braid("1 2 1", 3), coeff, D);
        auto b = hh_link_homology(parse_braid("2 1 2", 3), coeff, D);
        CHECK(compare_triply_graded(a, b));
    }
}

TEST_CASE("conjugation invariance")
{
    const int D = 8;
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs = {
        {{1}, {2}}, {{1, 1}, {-2}}, {{1, 2}, {2}}, {{-1}, {2, 1}}};
    for (const auto& [s, t] : pairs)
        for (auto coeff : {Z, CoeffRing::prime_field(2), CoeffRing::prime_field(3)}) {
            std::vector<int> st = s, ts = t;
            st.insert(st.end(), t.begin(), t.end());
            ts.insert(ts.end(), s.begin(), s.end());
            CHECK(compare_triply_graded(hh_link_homology(make_braid(st, 3), coeff, D),
                                        hh_link_homology(make_braid(ts, 3), coeff, D)));
        }
}

TEST_CASE("basis change eps_n -> eps_n + eps_{n+1} leaves the table unchanged")
{
    const int D = 10;
    auto w = make_braid({1, 1, 2}, 3);
    auto c = rouquier_complex_of_word(w.letters, 3, Z);
    std::vector<std::vector<long>> forms = {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}};
    auto changed = hochschild_table(c, KoszulComplex(3, forms), Z, D);
    CHECK(compare_triply_graded(hh_link_homology(w, Z, D), changed));
}

TEST_CASE("freeness reduction: one-sided and two-sided resolutions agree")
{
    const int D = 8;
    for (std::size_t n = 2; n <= 3; ++n) {
        std::vector<std::vector<int>> words = {{}, {1}};
        if (n == 3) {
            words.push_back({2});
            words.push_back({1, 2});
        } else {
            words.push_back({1, 1});
        }
        for (const auto& u : words)
            for (const auto& v : words) {
                if (u.size() + v.size() > 2)
                    continue;
                auto mu = make_bs(u, n, Z), mv = make_bs(v, n, Z);
                auto two = two_sided_hochschild(mu, mv, Z, D);
                CHECK(compare_triply_graded(two, bimodule_hochschild(tensor_bimodules(mu, mv), Z, D)));
                CHECK(compare_triply_graded(two, bimodule_hochschild(tensor_bimodules(mv, mu), Z, D)));
            }
    }
}

TEST_CASE("universal coefficients for Hochschild tables")
{
    const int D = 10;
    for (auto w : {parse_braid("1 1 1", 2), parse_braid("1 -2 1 -2", 3)}) {
        auto z = hh_link_homology(w, Z, D);
        for (std::uint64_t p : {2, 3})
            CHECK(check_universal_coefficients(z.entries(), hh_link_homology(w, CoeffRing::prime_field(p), D).entries(),
                                               p, 0, 1));
    }
}

TEST_CASE("euler_homfly")
{
    const int D = 16;
    CHECK(euler_homfly(hh_link_homology(parse_braid("", 1), CoeffRing::rationals(), D)) == Laurent2::constant(1));
    for (auto w : {parse_braid("1 1", 2), parse_braid("1 1 1", 2), parse_braid("1 -2 1 -2", 3)}) {
        auto cmp = compare_with_homfly(hh_link_homology(w, CoeffRing::rationals(), D), w);
        CHECK_MESSAGE(cmp.equal, w.str() << ": " << cmp.discrepancy);
    }
    // The unknot series itself.
    auto u = unknot_series(3);
    CHECK(u == Laurent2::constant(1) + Laurent2::monomial(1, 0, 1) + Laurent2::monomial(1, 0, 2) +
                   Laurent2::monomial(1, 0, 3) + Laurent2::monomial(1, 1, 1) + Laurent2::monomial(1, 1, 2) +
                   Laurent2::monomial(1, 1, 3));
}

TEST_CASE("cutoff errors")
{
    CHECK_THROWS_AS(hh_link_homology(parse_braid("1", 2), Z, -2), std::invalid_argument);
    auto a = hh_link_homology(parse_braid("1", 2), Z, 4);
    auto b = hh_link_homology(parse_braid("1", 2), Z, 6);
    CHECK_THROWS_AS(compare_triply_graded(a, b), std::invalid_argument);
}
