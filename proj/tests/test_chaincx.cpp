#include <doctest.h>

#include "soergel/complex.hpp"
#include "soergel/homology.hpp"

#include <random>

using namespace soergel;

namespace {

const CoeffRing Z = CoeffRing::integers();

std::map<int, std::size_t> ranks(const ChainComplex& c)
{
    std::map<int, std::size_t> r;
    for (const auto& [k, t] : c.terms())
        r[k] = c.rank(k);
    return r;
}

/// Complex [R{deg f} --f--> R] in degrees (-1, 0).
ChainComplex multiplication_complex(std::size_t n, const MultiPoly& f, const CoeffRing& ring)
{
    ChainComplex c(n, ring);
    BSBimodule r(n, {}, ring);
    BSBimodule src = r.shifted(f.degree());
    c.add_summand(-1, src);
    c.add_summand(0, r);
    c.set_block(-1, 0, 0, BimoduleMap(src, r, LeftMatrix{{f}}, 0));
    return c;
}

std::uint64_t count_monomials(std::size_t vars, int degree)
{
    return degree < 0 || degree % 2 ? 0 : monomial_count(static_cast<unsigned>(vars), static_cast<unsigned>(degree / 2));
}

}  // namespace

TEST_CASE("rouquier_complex shapes")
{
    auto u = rouquier_complex_of_word({}, 2, Z);
    CHECK(ranks(u) == std::map<int, std::size_t>{{0, 1}});

    auto pos = rouquier_complex(1, 2, Z);
    CHECK(ranks(pos) == std::map<int, std::size_t>{{-1, 2}, {0, 1}});
    CHECK(pos.term(-1)[0].word() == std::vector<int>{1});
    CHECK(pos.differential(-1).at({0, 0}).matrix() == counit_br(1, 2, Z).matrix());

    auto neg = rouquier_complex(-1, 2, Z);
    CHECK(ranks(neg) == std::map<int, std::size_t>{{0, 1}, {1, 2}});
    CHECK(neg.term(1)[0].q_shift() == -2);
    CHECK(neg.differential(0).at({0, 0}).matrix() == unit_rb(1, 2, Z).matrix());

    CHECK(pos.is_complex());
    CHECK(pos.differentials_are_bimodule_maps());
    CHECK(neg.differentials_are_bimodule_maps());
    CHECK_THROWS(rouquier_complex(2, 2, Z));
    CHECK_THROWS(rouquier_complex(0, 2, Z));
}

TEST_CASE("tensor_complexes ranks")
{
    auto u = unit_complex(2, Z);
    auto f1 = rouquier_complex(1, 2, Z);
    auto uf = tensor_complexes(u, f1);
    CHECK(ranks(uf) == ranks(f1));
    CHECK(uf.term(-1)[0] == f1.term(-1)[0]);

    auto inv = tensor_complexes(rouquier_complex(-1, 2, Z), f1);
    CHECK(ranks(inv) == std::map<int, std::size_t>{{-1, 2}, {0, 5}, {1, 2}});
    CHECK(inv.is_complex());

    auto c = rouquier_complex_of_word({1, 2, 1}, 3, Z);
    CHECK(ranks(c) == std::map<int, std::size_t>{{-3, 8}, {-2, 12}, {-1, 6}, {0, 1}});
    CHECK(c.is_complex());
    CHECK(c.differentials_are_bimodule_maps());
    CHECK_THROWS(tensor_complexes(rouquier_complex(1, 2, Z), rouquier_complex(1, 3, Z)));
}

TEST_CASE("d o d = 0 on random words up to length 6")
{
    std::mt19937 rng(29);
    for (std::size_t n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            std::uniform_int_distribution<int> len(1, n == 4 ? 5 : 6);
            std::uniform_int_distribution<int> gen(1, static_cast<int>(n) - 1);
            std::vector<int> w;
            for (int l = len(rng); l > 0; --l)
                w.push_back(rng() % 2 ? gen(rng) : -gen(rng));
            auto c = rouquier_complex_of_word(w, n, Z);
            CHECK(c.is_complex());
        }
}

TEST_CASE("homology of [Z --2--> Z]")
{
    FreeComplex f;
    f.strands = 1;
    auto a = f.add_cell({0, 0, 0}), b = f.add_cell({1, 0, 0});
    f.add(a, b, MultiPoly::constant(1, Z, 2));
    auto hz = graded_homology(f, Z, 0, Page::Homology);
    CHECK(hz.size() == 1);
    CHECK(hz.at({0, 0, 1}) == GroupInvariants{0, {2}});
    auto h2 = graded_homology(f, CoeffRing::prime_field(2), 0, Page::Homology);
    CHECK(h2.at({0, 0, 0}).rank == 1);
    CHECK(h2.at({0, 0, 1}).rank == 1);
    CHECK(graded_homology(f, CoeffRing::prime_field(3), 0, Page::Homology).empty());
    CHECK(graded_homology(f, CoeffRing::rationals(), 0, Page::Homology).empty());
    CHECK(graded_homology(f, CoeffRing::localized({2}), 0, Page::Homology).empty());
    CHECK(graded_homology(f, CoeffRing::localized({3}), 0, Page::Homology).at({0, 0, 1}) ==
          GroupInvariants{0, {2}});
    CHECK(check_universal_coefficients(hz, h2, 2, 0, 1));
}

TEST_CASE("homology of [R --alpha--> R] is R/(alpha)")
{
    const int D = 12;
    auto alpha = MultiPoly::x(2, Z, 1) - MultiPoly::x(2, Z, 2);
    auto t = homology_table(multiplication_complex(2, alpha, Z), D);
    for (int j = 0; j <= D; j += 2)
        CHECK(t.at(0, j) == GroupInvariants{1, {}});
    CHECK(t.entries().size() == static_cast<std::size_t>(D / 2 + 1));
}

TEST_CASE("torsion in R/(2 alpha) and universal coefficients")
{
    const int D = 10;
    auto alpha = MultiPoly::x(2, Z, 1) - MultiPoly::x(2, Z, 2);
    auto c = multiplication_complex(2, alpha.scaled(mpq_class(2)), Z);
    auto t = homology_table(c, D);
    // Degree j: Z^{j/2+1} / 2 alpha Z^{j/2}: one free summand and j/2 copies of Z/2.
    for (int j = 0; j <= D; j += 2) {
        GroupInvariants want{1, std::vector<mpz_class>(static_cast<std::size_t>(j / 2), 2)};
        CHECK(t.at(0, j) == want);
    }
    auto fz = free_complex(c);
    auto hz = graded_homology(fz, Z, D, Page::Homology);
    for (std::uint64_t p : {2, 3, 5})
        CHECK(check_universal_coefficients(hz, graded_homology(fz, CoeffRing::prime_field(p), D, Page::Homology), p, 0, 1));
    // A deliberately wrong table is rejected.
    auto wrong = hz;
    wrong.erase(wrong.begin());
    CHECK_FALSE(check_universal_coefficients(wrong, graded_homology(fz, CoeffRing::prime_field(2), D, Page::Homology), 2, 0, 1));
}

TEST_CASE("zero differential gives term ranks")
{
    const int D = 10;
    ChainComplex c(3, Z);
    c.add_summand(0, make_bs({1, 2}, 3, Z));
    c.add_summand(1, make_bs({2}, 3, Z).shifted(-2));
    auto t = homology_table(c, D);
    for (int k : {0, 1})
        for (int j = -2; j <= D; j += 2) {
            std::uint64_t expect = 0;
            const auto& m = c.term(k)[0];
            for (std::size_t s = 0; s < m.rank(); ++s)
                expect += count_monomials(3, j - m.basis_degree(s));
            CHECK(t.at(k, j).rank == expect);
        }
}

TEST_CASE("inverse identity on two strands")
{
    const int D = 20;
    auto r = homology_table(unit_complex(2, Z), D);
    for (int j = 0; j <= D; j += 2)
        CHECK(r.at(0, j).rank == static_cast<std::size_t>(j / 2 + 1));
    for (auto order : {std::vector<int>{-1, 1}, std::vector<int>{1, -1}}) {
        auto t = homology_table(rouquier_complex_of_word(order, 2, Z), D);
        CHECK(compare_graded_homology(r, t));
    }
}

TEST_CASE("serial and parallel schedules agree")
{
    auto c = rouquier_complex_of_word({1, 1, 1}, 2, Z);
    auto a = homology_table(c, Z, 12, Schedule::Serial);
    auto b = homology_table(c, Z, 12, Schedule::Parallel);
    CHECK(a.entries() == b.entries());
}

TEST_CASE("compare_graded_homology")
{
    auto c = rouquier_complex_of_word({1}, 2, Z);
    auto t = homology_table(c, 10);
    CHECK(compare_graded_homology(t, t));
    auto u = homology_table(c, 12);
    CHECK_THROWS_AS(compare_graded_homology(t, u), std::invalid_argument);
    auto shifted = HomologyTable(Z, 10);
    for (const auto& [key, g] : t.entries())
        shifted.set(key.first + 1, key.second + 2, g);
    CHECK(compare_graded_homology(t, shifted, 1, 2));
    auto res = compare_graded_homology(t, shifted);
    CHECK_FALSE(res);
    CHECK_FALSE(res.discrepancy.empty());
}
