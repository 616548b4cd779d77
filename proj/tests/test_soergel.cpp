#include <doctest.h>

#include "random_poly.hpp"
#include "soergel/bimodule.hpp"

#include <random>

using namespace soergel;
using soergel::testing::random_poly;
using soergel::testing::x_slots;

namespace {

const CoeffRing Z = CoeffRing::integers();

MultiPoly X(std::size_t n, std::size_t i) { return MultiPoly::x(n, Z, i); }
MultiPoly C(std::size_t n, long c) { return MultiPoly::constant(n, Z, c); }

std::vector<int> degrees(const BSBimodule& m)
{
    std::vector<int> d;
    for (std::size_t s = 0; s < m.rank(); ++s)
        d.push_back(m.basis_degree(s));
    return d;
}

void all_words(std::size_t n, std::size_t len, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    for (int i = 1; i < static_cast<int>(n); ++i) {
        cur.push_back(i);
        all_words(n, len, cur, out);
        cur.pop_back();
    }
}

LeftMatrix mat_mul(const LeftMatrix& a, const LeftMatrix& b, const MultiPoly& zero)
{
    LeftMatrix r(a.size(), std::vector<MultiPoly>(b[0].size(), zero));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero())
                continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                if (!b[k][j].is_zero())
                    r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

}  // namespace

TEST_CASE("make_bs ranks and degrees")
{
    auto r = make_bs({}, 1, Z);
    CHECK(r.rank() == 1);
    CHECK(degrees(r) == std::vector<int>{0});
    auto b1 = make_bs({1}, 2, Z);
    CHECK(b1.rank() == 2);
    CHECK(degrees(b1) == std::vector<int>{0, 2});
    auto b11 = make_bs({1, 1}, 2, Z);
    CHECK(b11.rank() == 4);
    CHECK(degrees(b11) == std::vector<int>{0, 2, 2, 4});
    CHECK_THROWS(make_bs({2}, 2, Z));
    CHECK_THROWS(make_bs({0}, 2, Z));
}

TEST_CASE("right action normal form on B_1")
{
    auto b = make_bs({1}, 2, Z);
    auto y1 = MultiPoly::y(2, Z, 1), y2 = MultiPoly::y(2, Z, 2);
    // e_0 * Y_1 = e_{1}
    CHECK(right_action_normal_form(b, b.basis(0), y1) == b.basis(1));
    // e_0 * Y_2 = (X_1 + X_2) e_0 - e_{1}
    BSElement want{X(2, 1) + X(2, 2), C(2, -1)};
    CHECK(right_action_normal_form(b, b.basis(0), y2) == want);
    // e_{1} * Y_1 = (X_1 + X_2) e_{1} - X_1 X_2 e_0
    BSElement want2{-(X(2, 1) * X(2, 2)), X(2, 1) + X(2, 2)};
    CHECK(right_action_normal_form(b, b.basis(1), y1) == want2);
    // Y acting through a symmetric polynomial equals X acting.
    auto e1 = y1 + y2;
    CHECK(b.right_action(b.basis(1), e1) == b.left_action(X(2, 1) + X(2, 2), b.basis(1)));
}

TEST_CASE("variables fixed by every letter pass through")
{
    auto b = make_bs({1, 1}, 3, Z);
    for (std::size_t s = 0; s < b.rank(); ++s)
        CHECK(b.right_action(b.basis(s), MultiPoly::y(3, Z, 3)) == b.left_action(X(3, 3), b.basis(s)));
}

TEST_CASE("tensor_bimodules")
{
    auto r = make_bs({}, 2, Z);
    auto b1 = make_bs({1}, 2, Z);
    CHECK(tensor_bimodules(r, b1) == b1);
    auto b11 = tensor_bimodules(b1, b1);
    CHECK(b11.word() == std::vector<int>{1, 1});
    CHECK(b11.rank() == 4);
    auto b12 = tensor_bimodules(make_bs({1}, 3, Z), make_bs({2}, 3, Z));
    CHECK(b12.word() == std::vector<int>{1, 2});
    CHECK(b12.rank() == 4);
    CHECK(tensor_bimodules(b1.shifted(-2), b1.shifted(4)).q_shift() == 2);
    CHECK_THROWS(tensor_bimodules(b1, make_bs({1}, 3, Z)));
}

TEST_CASE("tensor right action agrees with the last factor")
{
    const std::size_t n = 3;
    auto m = make_bs({1, 2}, n, Z);
    auto nn = make_bs({2, 1}, n, Z);
    auto mn = tensor_bimodules(m, nn);
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t s = 0; s < m.rank(); ++s)
            for (std::size_t t = 0; t < nn.rank(); ++t) {
                // (e_S (x) e_T) Y_j = sum_T' (e_S * c_T'(Y)) (x) e_T'
                BSElement expect = mn.zero();
                BSElement ty = nn.right_action(nn.basis(t), MultiPoly::y(n, Z, j));
                for (std::size_t t2 = 0; t2 < nn.rank(); ++t2) {
                    if (ty[t2].is_zero())
                        continue;
                    BSElement left = m.right_action(m.basis(s), ty[t2].x_to_y());
                    for (std::size_t s2 = 0; s2 < m.rank(); ++s2)
                        expect[tensor_index(m, s2, t2)] += left[s2];
                }
                CHECK(mn.right_action(mn.basis(tensor_index(m, s, t)), MultiPoly::y(n, Z, j)) == expect);
            }
}

TEST_CASE("tensor associativity")
{
    const std::size_t n = 3;
    auto a = make_bs({1}, n, Z), b = make_bs({2, 1}, n, Z), c = make_bs({2}, n, Z);
    auto left = tensor_bimodules(tensor_bimodules(a, b), c);
    auto right = tensor_bimodules(a, tensor_bimodules(b, c));
    CHECK(left == right);
    for (std::size_t j = 1; j <= n; ++j)
        CHECK(left.right_y(j) == right.right_y(j));
}

TEST_CASE("right actions commute for all words of length <= 4, n <= 4")
{
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t len = 0; len <= 4; ++len) {
            std::vector<std::vector<int>> words;
            std::vector<int> cur;
            all_words(n, len, cur, words);
            for (const auto& w : words) {
                auto m = make_bs(w, n, Z);
                for (std::size_t j = 1; j <= n; ++j)
                    for (std::size_t l = j + 1; l <= n; ++l) {
                        bool ok = mat_mul(m.right_y(j), m.right_y(l), m.zero_poly()) ==
                                  mat_mul(m.right_y(l), m.right_y(j), m.zero_poly());
                        CHECK(ok);
                    }
            }
        }
}

TEST_CASE("counit_br")
{
    auto br = counit_br(1, 2, Z);
    auto b = br.source();
    CHECK(br.apply(b.basis(0)) == BSElement{C(2, 1)});
    CHECK(br.apply(b.basis(1)) == BSElement{X(2, 1)});
    CHECK(br.degree() == 0);
    CHECK(br.is_bimodule_map());
    CHECK(br.is_homogeneous());
    // br(e_0 Y_2) = X_2
    CHECK(br.apply(b.right_action(b.basis(0), MultiPoly::y(2, Z, 2))) == BSElement{X(2, 2)});
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t i = 1; i < n; ++i) {
            auto f = counit_br(i, n, Z);
            CHECK(f.is_bimodule_map());
            CHECK(f.apply(f.source().basis(1)) == BSElement{MultiPoly::x(n, Z, i)});
        }
}

TEST_CASE("unit_rb")
{
    auto rb = unit_rb(1, 2, Z);
    CHECK(rb.degree() == 2);
    auto b = rb.target();
    // rb(1) = e_{1} - X_2 e_0
    BSElement want{-X(2, 2), C(2, 1)};
    CHECK(rb.apply(rb.source().basis(0)) == want);
    CHECK(rb.is_bimodule_map());
    CHECK(rb.is_homogeneous());
    auto composite = counit_br(1, 2, Z).compose(rb);
    CHECK(composite.matrix()[0][0] == X(2, 1) - X(2, 2));
    auto shifted = unit_rb(1, 2, Z, -2);
    CHECK(shifted.degree() == 0);
    CHECK(shifted.is_homogeneous());
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t i = 1; i < n; ++i) {
            auto f = unit_rb(i, n, Z);
            CHECK(f.is_bimodule_map());
            auto c = counit_br(i, n, Z).compose(f);
            CHECK(c.matrix()[0][0] == MultiPoly::x(n, Z, i) - MultiPoly::x(n, Z, i + 1));
        }
}

TEST_CASE("thom element is central")
{
    std::mt19937 rng(17);
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t i = 1; i < n; ++i) {
            auto b = make_bs({static_cast<int>(i)}, n, Z);
            auto th = unitary_thom_element(b);
            CHECK(th == unit_rb(i, n, Z).apply(BSElement{C(n, 1)}));
            for (int trial = 0; trial < 10; ++trial) {
                auto f = random_poly(rng, n, Z, x_slots(n), 5);
                CHECK(b.left_action(f, th) == b.right_action(th, f.x_to_y()));
            }
        }
}

TEST_CASE("unitary and adjoint thom elements agree over Z[1/2]")
{
    for (auto ring : {CoeffRing::localized({2}), CoeffRing::rationals(), CoeffRing::prime_field(3)})
        for (std::size_t n = 2; n <= 4; ++n)
            for (std::size_t i = 1; i < n; ++i) {
                auto b = make_bs({static_cast<int>(i)}, n, ring);
                CHECK(unitary_thom_element(b) == adjoint_thom_element(b));
            }
    CHECK_THROWS_AS(adjoint_thom_element(make_bs({1}, 2, Z)), CoefficientError);
    CHECK_THROWS_AS(adjoint_thom_element(make_bs({1}, 2, CoeffRing::prime_field(2))), CoefficientError);
}

TEST_CASE("tensor and identity compositions are bimodule maps")
{
    const std::size_t n = 3;
    auto id1 = BimoduleMap::identity(make_bs({1}, n, Z));
    auto id2 = BimoduleMap::identity(make_bs({2}, n, Z));
    auto br1 = counit_br(1, n, Z), br2 = counit_br(2, n, Z);
    auto rb1 = unit_rb(1, n, Z), rb2 = unit_rb(2, n, Z);
    for (const auto& f : {tensor_maps(id1, br2), tensor_maps(br1, id2), tensor_maps(rb1, id2),
                          tensor_maps(id2, rb1), tensor_maps(br2, rb1), tensor_maps(rb2, rb2)}) {
        CHECK(f.is_bimodule_map());
        CHECK(f.is_homogeneous());
    }
    auto g = tensor_maps(br1, id2).compose(tensor_maps(rb1, id2));
    CHECK(g.is_bimodule_map());
}

TEST_CASE("ring structure on Bott-Samelson bimodules")
{
    auto b = make_bs({1, 2}, 3, Z);
    for (std::size_t s = 0; s < b.rank(); ++s)
        for (std::size_t t = 0; t < b.rank(); ++t)
            CHECK(b.multiply(b.basis(s), b.basis(t)) == b.multiply(b.basis(t), b.basis(s)));
    // Y_j is the product with e_0 * Y_j.
    auto ey = b.right_action(b.basis(0), MultiPoly::y(3, Z, 2));
    CHECK(b.multiply(b.basis(3), ey) == b.right_action(b.basis(3), MultiPoly::y(3, Z, 2)));
}
