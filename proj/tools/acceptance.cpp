// Acceptance run: one PASS/FAIL line per criterion. Every bound is exact; the
// constants below are the whole configuration.

#include "soergel/bimodule.hpp"
#include "soergel/braid.hpp"
#include "soergel/hochschild.hpp"
#include "soergel/homology.hpp"
#include "soergel/operators.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace soergel;

namespace {

constexpr int kMaxDegree = 20;
constexpr std::size_t kRandomPairs = 5;
constexpr std::size_t kMaxLetters = 6;
constexpr std::uint64_t kSeed = 20261015;
constexpr unsigned kOperatorMaxIndex = 4;
constexpr unsigned kOperatorMaxTotal = 8;
constexpr unsigned kDescentMaxIndex = 4;
constexpr unsigned kThomMaxIndex = 6;
constexpr std::size_t kThomMaxStrands = 4;
const std::vector<std::uint64_t> kPrimes{2, 3};
const std::vector<std::uint64_t> kSteenrodPrimes{2, 3, 5};

const CoeffRing Z = CoeffRing::integers();

struct Result {
    bool pass = true;
    std::string detail;

    void fail(const std::string& what)
    {
        if (pass)
            detail = what;
        pass = false;
    }
};

// Tables are shared between criteria; keyed by word, strands and ring.
std::map<std::tuple<std::vector<int>, std::size_t, std::string>, TriplyGradedTable> cache;

const TriplyGradedTable& table(const BraidWord& w, const CoeffRing& ring)
{
    auto key = std::tuple{w.letters, w.strands, ring.spec()};
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, hh_link_homology(w, ring, kMaxDegree)).first;
    return it->second;
}

// Instances whose Z and F_p tables are checked for universal coefficients.
std::set<std::pair<std::vector<int>, std::size_t>> uct_instances;

const TriplyGradedTable& z_table(const BraidWord& w)
{
    uct_instances.emplace(w.letters, w.strands);
    return table(w, Z);
}

enum class Move { Relation, Commute, Insert, Cancel };

// One-step rewrites of a word: braid relation (three sign patterns), far commutation,
// inserting or cancelling s s^-1.
std::vector<std::pair<Move, std::vector<int>>> rewrites(const std::vector<int>& w, std::size_t strands)
{
    std::vector<std::pair<Move, std::vector<int>>> out;
    auto replace = [&](Move kind, std::size_t at, std::size_t len, std::vector<int> by) {
        std::vector<int> v(w.begin(), w.begin() + static_cast<long>(at));
        v.insert(v.end(), by.begin(), by.end());
        v.insert(v.end(), w.begin() + static_cast<long>(at + len), w.end());
        if (v.size() <= kMaxLetters)
            out.emplace_back(kind, std::move(v));
    };
    for (std::size_t t = 0; t + 3 <= w.size(); ++t) {
        const int a = w[t], b = w[t + 1], c = w[t + 2];
        if (std::abs(std::abs(a) - std::abs(b)) != 1)
            continue;
        // a b a = b a b, and the same with every letter inverted
        if (a == c && (a > 0) == (b > 0))
            replace(Move::Relation, t, 3, {b, a, b});
        // a b a^-1 = b^-1 a b
        if (a > 0 && b > 0 && c == -a)
            replace(Move::Relation, t, 3, {-b, a, b});
        // b^-1 a b = a b a^-1
        if (a < 0 && b > 0 && c == -a)
            replace(Move::Relation, t, 3, {b, c, -b});
    }
    for (std::size_t t = 0; t + 2 <= w.size(); ++t) {
        if (std::abs(std::abs(w[t]) - std::abs(w[t + 1])) >= 2)
            replace(Move::Commute, t, 2, {w[t + 1], w[t]});
        if (w[t] == -w[t + 1])
            replace(Move::Cancel, t, 2, {});
    }
    for (std::size_t t = 0; t <= w.size(); ++t)
        for (int i = 1; i < static_cast<int>(strands); ++i) {
            replace(Move::Insert, t, 0, {i, -i});
            replace(Move::Insert, t, 0, {-i, i});
        }
    return out;
}

// Random walks on freely reduced words of length 3 or 4; each pair uses at least
// one braid relation.
std::vector<std::pair<BraidWord, BraidWord>> random_pairs(std::mt19937_64& rng)
{
    std::vector<std::pair<BraidWord, BraidWord>> pairs;
    while (pairs.size() < kRandomPairs) {
        const std::size_t n = pairs.size() % 2 ? 4 : 3;
        std::uniform_int_distribution<int> letter(1, static_cast<int>(n) - 1), coin(0, 1), len(3, 4);
        std::vector<int> start;
        while (start.size() < static_cast<std::size_t>(len(rng))) {
            const int l = coin(rng) ? letter(rng) : -letter(rng);
            if (start.empty() || start.back() != -l)
                start.push_back(l);
        }
        auto w = start;
        bool related = false;
        for (int step = 0; step < 6; ++step) {
            auto next = rewrites(w, n);
            std::vector<std::pair<Move, std::vector<int>>> moves;
            for (auto& m : next)
                if (m.first == Move::Relation || m.first == Move::Commute)
                    moves.push_back(m);
            if (moves.empty() || coin(rng) == 0)
                moves = next;
            const auto& [kind, v] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
            related = related || kind == Move::Relation;
            w = v;
        }
        if (related && w != start)
            pairs.emplace_back(make_braid(start, n), make_braid(w, n));
    }
    return pairs;
}

Result inverse_identity()
{
    Result r;
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
        auto unit = homology_table(unit_complex(n, Z), Z, kMaxDegree);
        for (int i = 1; i < static_cast<int>(n); ++i)
            for (auto word : {std::vector<int>{-i, i}, std::vector<int>{i, -i}}) {
                ++checked;
                auto cmp = compare_graded_homology(unit, homology_table(rouquier_complex_of_word(word, n, Z), Z, kMaxDegree));
                if (!cmp)
                    r.fail(make_braid(word, n).str() + " on " + std::to_string(n) + " strands: " + cmp.discrepancy);
            }
    }
    if (r.pass)
        r.detail = std::to_string(checked) + " products on 2..4 strands match R";
    return r;
}

Result presentation_independence()
{
    std::mt19937_64 rng(kSeed);
    auto pairs = random_pairs(rng);
    pairs.insert(pairs.begin(), {make_braid({1, 2, 1}, 3), make_braid({2, 1, 2}, 3)});
    Result r;
    std::ostringstream words;
    for (const auto& [a, b] : pairs) {
        words << "; " << a.str() << " = " << b.str();
        for (auto ring : {Z, CoeffRing::prime_field(2), CoeffRing::prime_field(3)}) {
            auto cmp = compare_triply_graded(ring == Z ? z_table(a) : table(a, ring), ring == Z ? z_table(b) : table(b, ring));
            if (!cmp)
                r.fail(a.str() + " vs " + b.str() + " over " + ring.name() + ": " + cmp.discrepancy);
        }
    }
    if (r.pass)
        r.detail = "over Z, F_2, F_3" + words.str();
    return r;
}

Result markov_moves()
{
    Result r;
    std::size_t checked = 0;
    for (auto w : {make_braid({1, 1, 1}, 2), make_braid({1, -2, 1, -2}, 3)}) {
        const auto& base = z_table(w);
        for (int i = 1; i < static_cast<int>(w.strands); ++i)
            for (int sign : {1, -1}) {
                auto moved = markov_move(w, MarkovMove::conjugate(make_braid({sign * i}, w.strands)));
                ++checked;
                if (auto cmp = compare_triply_graded(base, z_table(moved)); !cmp)
                    r.fail("conjugate " + w.str() + " -> " + moved.str() + ": " + cmp.discrepancy);
            }
        for (auto [sign, di, dj, dk] : {std::tuple{1, 1, 2, 0}, std::tuple{-1, 0, -2, 1}}) {
            auto moved = markov_move(w, MarkovMove::stabilize(sign));
            ++checked;
            if (auto cmp = compare_triply_graded(base, z_table(moved), di, dj, dk); !cmp)
                r.fail("stabilize " + w.str() + " -> " + moved.str() + ": " + cmp.discrepancy);
        }
    }
    if (r.pass)
        r.detail = std::to_string(checked) + " moves on trefoil and figure-eight; stabilization shifts (i, j, k) by (1, 2, 0) and (0, -2, 1)";
    return r;
}

Result unknot_table()
{
    Result r;
    const auto& t = z_table(make_braid({}, 1));
    const GroupInvariants one{1, {}};
    for (int j = 0; j <= kMaxDegree; j += 2) {
        if (t.at(0, j, 0) != one)
            r.fail("HH_0 at j = " + std::to_string(j) + " is " + t.at(0, j, 0).str());
        if (j >= 2 && t.at(1, j, 0) != one)
            r.fail("HH_1 at j = " + std::to_string(j) + " is " + t.at(1, j, 0).str());
    }
    // nothing else
    if (t.entries().size() != static_cast<std::size_t>(kMaxDegree + 1))
        r.fail(std::to_string(t.entries().size()) + " nonzero entries");
    if (r.pass)
        r.detail = "rank 1 at (0, j, 0) for 0 <= j <= 20 and (1, j, 0) for 2 <= j <= 20, no torsion";
    return r;
}

Result euler_homfly_check()
{
    Result r;
    std::ostringstream units;
    for (auto w : {make_braid({}, 1), make_braid({1, 1}, 2), make_braid({1, 1, 1}, 2), make_braid({1, -2, 1, -2}, 3)}) {
        z_table(w);
        auto cmp = compare_with_homfly(table(w, CoeffRing::rationals()), w);
        if (!cmp.equal)
            r.fail(w.str() + ": " + cmp.discrepancy);
        units << "; " << w.str() << " unit " << (cmp.sign > 0 ? "+" : "-") << "A^" << cmp.a_shift << " t^" << cmp.t_shift;
    }
    if (r.pass)
        r.detail = "over Q" + units.str();
    return r;
}

Result operator_relations()
{
    Result r;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 2; ++n) {
        auto rep = check_operator_relations(n, kOperatorMaxIndex, kOperatorMaxTotal, Z);
        checked += rep.checked;
        if (!rep.ok())
            r.fail(rep.failures.front());
    }
    if (r.pass)
        r.detail = std::to_string(checked) + " evaluations, m, n <= 4, total exponent <= 8, 1 and 2 strands";
    return r;
}

Result descent()
{
    Result r;
    auto c = rouquier_complex_of_word({1, 1, 1}, 2, Z);
    std::size_t bidegrees = 0;
    for (unsigned m = 0; m <= kDescentMaxIndex; ++m) {
        auto rep = check_descent(c, m, kMaxDegree, kSeed + m);
        bidegrees += rep.bidegrees;
        if (!rep.ok())
            r.fail("L~_" + std::to_string(m) + ": " + rep.failure);
    }
    if (r.pass)
        r.detail = "L~_0..L~_4 on the trefoil, " + std::to_string(bidegrees) + " bidegrees";
    return r;
}

Result steenrod()
{
    Result r;
    std::ostringstream scope;
    for (std::uint64_t p : kSteenrodPrimes) {
        auto rep = check_steenrod(p, rouquier_complex_of_word({1, 1, 1}, 2, CoeffRing::prime_field(p)));
        if (!(rep.koszul && rep.rouquier && rep.grading && rep.cartan))
            r.fail("p = " + std::to_string(p) + ": " + rep.failure);
        scope << "; p = " << p << ": " << rep.chains << " chains, " << rep.pairs << " Cartan pairs";
    }
    if (r.pass)
        r.detail = "trefoil" + scope.str();
    return r;
}

Result integrality()
{
    Result r;
    const auto Q = CoeffRing::rationals(), half = CoeffRing::localized({2});
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= kThomMaxStrands; ++n)
        for (int i = 1; i < static_cast<int>(n); ++i) {
            BSBimodule bq(n, {i}, Q);
            for (unsigned k = 0; k <= kThomMaxIndex; ++k) {
                ++checked;
                for (const auto& c : thom_twist_action(k, bq, bq.basis(0)))
                    for (const auto& [mono, coeff] : c.terms())
                        if (coeff.get_den() != 1)
                            r.fail("L_" + std::to_string(k) + " on B_" + std::to_string(i) + " has coefficient " +
                                   coeff.get_str());
            }
            BSBimodule bh(n, {i}, half);
            if (unitary_thom_element(bh) != adjoint_thom_element(bh))
                r.fail("unitary and adjoint elements differ for B_" + std::to_string(i));
        }
    if (r.pass)
        r.detail = std::to_string(checked) + " integral values of L_0..L_6; X_i - Y_(i+1) = (alpha(X) + alpha(Y))/2 over Z[1/2]";
    return r;
}

Result universal_coefficients()
{
    Result r;
    for (const auto& [letters, n] : uct_instances) {
        auto w = make_braid(letters, n);
        for (std::uint64_t p : kPrimes) {
            auto cmp = check_universal_coefficients(table(w, Z).entries(),
                                                    table(w, CoeffRing::prime_field(p)).entries(), p, 0, 1);
            if (!cmp)
                r.fail(w.str() + " at p = " + std::to_string(p) + ": " + cmp.discrepancy);
        }
    }
    if (r.pass)
        r.detail = std::to_string(uct_instances.size()) + " words from criteria 2-5, p = 2, 3";
    return r;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"inverse identity", inverse_identity},
        {"presentation independence", presentation_independence},
        {"Markov moves", markov_moves},
        {"unknot table", unknot_table},
        {"Euler characteristic vs HOMFLY", euler_homfly_check},
        {"operator relations", operator_relations},
        {"descent to homology", descent},
        {"Steenrod powers", steenrod},
        {"integrality of the Thom twist", integrality},
        {"universal coefficients", universal_coefficients},
    };
    bool all = true;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[c].second();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && r.pass;
        std::ostringstream line;
        line.precision(1);
        line << std::fixed << (r.pass ? "PASS " : "FAIL ") << c + 1 << " " << criteria[c].first << " (" << secs
             << "s): " << r.detail;
        std::cout << line.str() << std::endl;
    }
    return all ? 0 : 1;
}
