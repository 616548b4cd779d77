#include "soergel/hochschild.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace soergel {

KoszulComplex::KoszulComplex(std::size_t strands, std::vector<std::vector<long>> forms)
    : n_(strands), forms_(std::move(forms))
{
    if (forms_.size() > 16)
        throw std::invalid_argument("Koszul complex: at most 16 odd generators");
    for (const auto& f : forms_)
        if (f.size() != n_)
            throw std::invalid_argument("Koszul complex: every form needs one coefficient per strand");
}

KoszulComplex KoszulComplex::standard(std::size_t strands)
{
    std::vector<std::vector<long>> forms(strands, std::vector<long>(strands, 0));
    for (std::size_t t = 0; t < strands; ++t)
        forms[t][t] = 1;
    return KoszulComplex(strands, std::move(forms));
}

KoszulComplex KoszulComplex::last_variable(std::size_t strands)
{
    std::vector<long> f(strands, 0);
    f.back() = 1;
    return KoszulComplex(strands, {f});
}

KoszulComplex koszul_resolution(std::size_t strands) { return KoszulComplex::standard(strands); }

MultiPoly KoszulComplex::form(std::size_t a, const CoeffRing& ring) const
{
    MultiPoly f(n_, ring);
    for (std::size_t t = 0; t < n_; ++t)
        if (forms_.at(a)[t] != 0)
            f += (MultiPoly::x(n_, ring, t + 1) - MultiPoly::y(n_, ring, t + 1)).scaled(mpq_class(forms_[a][t]));
    return f;
}

SuperPoly KoszulComplex::differential(const SuperPoly& v) const
{
    if (v.odd() != generators() || v.strands() != n_)
        throw std::invalid_argument("Koszul differential: element of a different algebra");
    SuperPoly r(n_, v.ring(), v.odd());
    for (const auto& [mask, f] : v.parts()) {
        int pos = 0;
        for (std::size_t a = 0; a < generators(); ++a) {
            const std::uint32_t bit = std::uint32_t{1} << a;
            if (!(mask & bit))
                continue;
            MultiPoly term = f * form(a, v.ring());
            r.add(mask & ~bit, pos % 2 ? -term : term);
            ++pos;
        }
    }
    return r;
}

FreeComplex KoszulComplex::free_complex() const
{
    const CoeffRing z = CoeffRing::integers();
    FreeComplex fc;
    fc.strands = n_;
    for (std::size_t t = 1; t <= n_; ++t)
        fc.slots.push_back(x_slot(n_, t));
    for (std::size_t t = 1; t <= n_; ++t)
        fc.slots.push_back(y_slot(n_, t));
    for (std::size_t m = 0; m < pieces(); ++m) {
        const int i = std::popcount(m);
        fc.add_cell(Cell{0, i, 2 * i});
    }
    for (std::size_t m = 0; m < pieces(); ++m) {
        SuperPoly d = differential(SuperPoly::term(MultiPoly::constant(n_, z, 1), generators(),
                                                   static_cast<std::uint32_t>(m)));
        for (const auto& [mask, f] : d.parts())
            fc.add(m, mask, f);
    }
    return fc;
}

std::size_t HochschildComplex::index(int k, std::size_t summand, std::size_t basis, std::uint32_t mask) const
{
    return lookup_.at({k, summand, basis, mask});
}

FreeComplex HochschildComplex::component(int dk) const
{
    FreeComplex f;
    f.strands = complex.strands;
    f.slots = complex.slots;
    f.cells = complex.cells;
    f.d.resize(complex.cells.size());
    for (std::size_t x = 0; x < complex.cells.size(); ++x)
        for (const auto& [y, p] : complex.d[x])
            if (complex.cells[y].k - complex.cells[x].k == dk)
                f.d[x].emplace(y, p);
    return f;
}

HochschildComplex hochschild_bicomplex(const ChainComplex& c, const KoszulComplex& koszul)
{
    if (koszul.strands() != c.strands())
        throw std::invalid_argument("Koszul complex and chain complex have different strand counts");
    const std::size_t n = c.strands();
    const std::size_t r = koszul.generators();
    const std::size_t pieces = koszul.pieces();
    HochschildComplex h;
    h.complex.strands = n;
    for (std::size_t t = 1; t <= n; ++t)
        h.complex.slots.push_back(x_slot(n, t));

    for (const auto& [k, summands] : c.terms())
        for (std::size_t s = 0; s < summands.size(); ++s)
            for (std::size_t b = 0; b < summands[s].rank(); ++b)
                for (std::size_t m = 0; m < pieces; ++m) {
                    const int i = std::popcount(m);
                    const auto mask = static_cast<std::uint32_t>(m);
                    h.lookup_[{k, s, b, mask}] = h.complex.add_cell(Cell{k, i, summands[s].basis_degree(b) + 2 * i});
                    h.generators.push_back({k, s, b, mask});
                }

    // Koszul part: multiplication by each form on every summand.
    for (const auto& [k, summands] : c.terms())
        for (std::size_t s = 0; s < summands.size(); ++s) {
            const BSBimodule& m = summands[s];
            std::vector<LeftMatrix> form_mats;
            for (std::size_t a = 0; a < r; ++a) {
                LeftMatrix mat(m.rank(), std::vector<MultiPoly>(m.rank(), m.zero_poly()));
                for (std::size_t b = 0; b < m.rank(); ++b) {
                    BSElement v = m.act(koszul.form(a, m.ring()), m.basis(b));
                    for (std::size_t b2 = 0; b2 < m.rank(); ++b2)
                        mat[b2][b] = std::move(v[b2]);
                }
                form_mats.push_back(std::move(mat));
            }
            for (std::size_t b = 0; b < m.rank(); ++b)
                for (std::size_t mm = 0; mm < pieces; ++mm) {
                    const auto mask = static_cast<std::uint32_t>(mm);
                    const std::size_t from = h.index(k, s, b, mask);
                    int pos = 0;
                    for (std::size_t a = 0; a < r; ++a) {
                        const std::uint32_t bit = std::uint32_t{1} << a;
                        if (!(mask & bit))
                            continue;
                        for (std::size_t b2 = 0; b2 < m.rank(); ++b2) {
                            const MultiPoly& e = form_mats[a][b2][b];
                            if (!e.is_zero())
                                h.complex.add(from, h.index(k, s, b2, mask & ~bit), pos % 2 ? -e : e);
                        }
                        ++pos;
                    }
                }
        }

    // Complex part with sign (-1)^i.
    for (const auto& [k, blocks] : c.differentials())
        for (const auto& [key, map] : blocks) {
            const auto [tgt, src] = key;
            const auto& mat = map.matrix();
            for (std::size_t b = 0; b < map.source().rank(); ++b)
                for (std::size_t mm = 0; mm < pieces; ++mm) {
                    const auto mask = static_cast<std::uint32_t>(mm);
                    const std::size_t from = h.index(k, src, b, mask);
                    const bool odd = std::popcount(mask) % 2;
                    for (std::size_t b2 = 0; b2 < map.target().rank(); ++b2) {
                        const MultiPoly& e = mat[b2][b];
                        if (!e.is_zero())
                            h.complex.add(from, h.index(k + 1, tgt, b2, mask), odd ? -e : e);
                    }
                }
        }
    return h;
}

HochschildComplex hochschild_bicomplex(const ChainComplex& c)
{
    return hochschild_bicomplex(c, KoszulComplex::standard(c.strands()));
}

namespace {

TriplyGradedTable to_table(const GradedGroups& groups, const CoeffRing& coeff, int max_degree)
{
    TriplyGradedTable t(coeff, max_degree);
    for (const auto& [key, g] : groups) {
        auto [i, j, k] = key;
        t.set(i, j, k, g);
    }
    return t;
}

ChainComplex integral_rouquier(const BraidWord& braid)
{
    make_braid(braid.letters, braid.strands);
    return rouquier_complex_of_word(braid.letters, braid.strands, CoeffRing::integers());
}

void check_cutoff(const FreeComplex& f, int max_degree)
{
    if (max_degree < 0)
        throw std::invalid_argument("internal-degree cutoff must be nonnegative");
    if (!f.cells.empty() && max_degree < f.min_degree())
        throw std::invalid_argument("internal-degree cutoff " + std::to_string(max_degree) +
                                    " is below every degree of the complex (lowest " +
                                    std::to_string(f.min_degree()) + ")");
}

}  // namespace

TriplyGradedTable hochschild_table(const ChainComplex& c, const KoszulComplex& k, const CoeffRing& coeff,
                                   int max_degree, Schedule schedule)
{
    auto h = hochschild_bicomplex(c, k);
    check_cutoff(h.complex, max_degree);
    return to_table(graded_homology(h.complex, coeff, max_degree, Page::E2, schedule), coeff, max_degree);
}

TriplyGradedTable hh_link_homology(const BraidWord& braid, const CoeffRing& coeff, int max_degree,
                                   Schedule schedule)
{
    return hochschild_table(integral_rouquier(braid), KoszulComplex::standard(braid.strands), coeff, max_degree,
                            schedule);
}

TriplyGradedTable hh_last_variable(const BraidWord& braid, const CoeffRing& coeff, int max_degree,
                                   Schedule schedule)
{
    return hochschild_table(integral_rouquier(braid), KoszulComplex::last_variable(braid.strands), coeff,
                            max_degree, schedule);
}

TriplyGradedTable bimodule_hochschild(const BSBimodule& m, const CoeffRing& coeff, int max_degree)
{
    const CoeffRing z = CoeffRing::integers();
    ChainComplex c(m.strands(), z);
    c.add_summand(0, BSBimodule(m.strands(), m.word(), z, m.q_shift()));
    return hochschild_table(c, KoszulComplex::standard(m.strands()), coeff, max_degree);
}

TriplyGradedTable two_sided_hochschild(const BSBimodule& mu, const BSBimodule& mv, const CoeffRing& coeff,
                                       int max_degree)
{
    if (mu.strands() != mv.strands())
        throw std::invalid_argument("two_sided_hochschild: strand mismatch");
    const std::size_t n = mu.strands();
    const CoeffRing z = CoeffRing::integers();
    const BSBimodule u(n, mu.word(), z, mu.q_shift());
    const BSBimodule v(n, mv.word(), z, mv.q_shift());
    const std::size_t odd = 2 * n;  // eps'_1..eps'_n, then eps_1..eps_n
    const std::size_t masks = std::size_t{1} << odd;

    FreeComplex fc;
    fc.strands = n;
    for (std::size_t t = 1; t <= n; ++t)
        fc.slots.push_back(x_slot(n, t));
    for (std::size_t t = 1; t <= n; ++t)
        fc.slots.push_back(y_slot(n, t));  // left variables of M_v
    auto cell_index = [&](std::size_t s, std::size_t t, std::size_t m) {
        return (s * v.rank() + t) * masks + m;
    };
    for (std::size_t s = 0; s < u.rank(); ++s)
        for (std::size_t t = 0; t < v.rank(); ++t)
            for (std::size_t m = 0; m < masks; ++m) {
                const int i = std::popcount(m);
                fc.add_cell(Cell{0, i, u.basis_degree(s) + v.basis_degree(t) + 2 * i});
            }

    // Operator of generator g on basis (s, t): list of ((s', t'), coefficient).
    auto op = [&](std::size_t g, std::size_t s, std::size_t t) {
        std::vector<std::pair<std::pair<std::size_t, std::size_t>, MultiPoly>> out;
        if (g < n) {
            const std::size_t a = g + 1;
            const auto& ry = u.right_y(a);
            for (std::size_t s2 = 0; s2 < u.rank(); ++s2)
                if (!ry[s2][s].is_zero())
                    out.push_back({{s2, t}, ry[s2][s]});
            out.push_back({{s, t}, -MultiPoly::y(n, z, a)});
        } else {
            const std::size_t b = g - n + 1;
            out.push_back({{s, t}, MultiPoly::x(n, z, b)});
            const auto& ry = v.right_y(b);
            for (std::size_t t2 = 0; t2 < v.rank(); ++t2)
                if (!ry[t2][t].is_zero())
                    out.push_back({{s, t2}, -ry[t2][t].x_to_y()});
        }
        return out;
    };
    for (std::size_t s = 0; s < u.rank(); ++s)
        for (std::size_t t = 0; t < v.rank(); ++t)
            for (std::size_t m = 0; m < masks; ++m) {
                int pos = 0;
                for (std::size_t g = 0; g < odd; ++g) {
                    const std::size_t bit = std::size_t{1} << g;
                    if (!(m & bit))
                        continue;
                    for (const auto& [st, coef] : op(g, s, t))
                        fc.add(cell_index(s, t, m), cell_index(st.first, st.second, m & ~bit),
                               pos % 2 ? -coef : coef);
                    ++pos;
                }
            }
    check_cutoff(fc, max_degree);
    return to_table(graded_homology(fc, coeff, max_degree, Page::Homology), coeff, max_degree);
}

Laurent2 euler_characteristic(const TriplyGradedTable& table)
{
    Laurent2 chi;
    for (const auto& [key, g] : table.entries()) {
        auto [i, j, k] = key;
        if (j % 2 != 0)
            throw std::logic_error("odd internal degree in a triply graded table");
        chi.add_term(i, j / 2, mpz_class(static_cast<unsigned long>(g.rank)) * (k % 2 ? -1 : 1));
    }
    return chi;
}

Laurent2 unknot_series(int order)
{
    // (1 + A t) * sum t^k
    Laurent2 geo = inverse_one_minus_v(1, order);
    return (geo + geo.shifted(1, 1)).truncated(order);
}

Laurent2 euler_homfly(const TriplyGradedTable& table)
{
    const int order = table.max_degree() / 2;
    Laurent2 chi = euler_characteristic(table);
    if (chi.is_zero())
        return chi;
    const int low = chi.min_v();
    // 1 / chi(unknot) = (1 - t) sum (-A t)^k
    Laurent2 inv;
    for (int e = 0; e <= order - low; ++e)
        inv.add_term(e, e, e % 2 ? -1 : 1);
    inv = inv - inv.shifted(0, 1);
    return (chi * inv).truncated(order);
}

Laurent2 homfly_to_series(const Laurent2& p, int writhe, std::size_t strands, int order)
{
    const int e = writhe - static_cast<int>(strands) + 1;
    Laurent2 out;
    for (const auto& [key, c] : p.terms()) {
        const auto [pa, m] = key;
        if ((e + pa) % 2 != 0 || (pa + m) % 2 != 0)
            throw std::logic_error("HOMFLY polynomial has unexpected parity");
        const int half = (e + pa) / 2;
        // (-A t^2)^half * t^{-(pa + m)/2} * (A t)^{n-1}
        const int a_exp = half + static_cast<int>(strands) - 1;
        const int t_exp = 2 * half - (pa + m) / 2 + static_cast<int>(strands) - 1;
        mpz_class coef = c * ((half % 2 != 0) ? -1 : 1);
        Laurent2 factor;
        if (m >= 0) {
            // (1 - t)^m
            factor = (Laurent2::constant(1) - Laurent2::monomial(1, 0, 1)).pow(static_cast<unsigned>(m));
        } else {
            factor = inverse_one_minus_v(static_cast<unsigned>(-m), std::max(0, order - t_exp));
        }
        out += factor.shifted(a_exp, t_exp, coef);
    }
    return out.truncated(order);
}

HomflyComparison compare_with_homfly(const TriplyGradedTable& table, const BraidWord& braid)
{
    HomflyComparison cmp;
    const int order = table.max_degree() / 2;
    cmp.series = euler_homfly(table);
    const Laurent2 p = homfly_oracle(braid);
    if (cmp.series.is_zero()) {
        cmp.discrepancy = "Euler characteristic vanishes below the cutoff";
        return cmp;
    }
    // Locate the unit from the lowest t-order terms.
    Laurent2 wide = homfly_to_series(p, braid.writhe(), braid.strands, order + 64);
    if (wide.is_zero()) {
        cmp.discrepancy = "HOMFLY prediction vanishes";
        return cmp;
    }
    const int l1 = cmp.series.min_v(), l2 = wide.min_v();
    cmp.t_shift = l1 - l2;
    Laurent2 c1 = cmp.series.v_coefficient(l1), c2 = wide.v_coefficient(l2);
    const auto& lead1 = *c1.terms().begin();
    const auto& lead2 = *c2.terms().begin();
    cmp.a_shift = lead1.first.first - lead2.first.first;
    cmp.sign = (sgn(lead1.second) == sgn(lead2.second)) ? 1 : -1;
    cmp.prediction = homfly_to_series(p, braid.writhe(), braid.strands, order - cmp.t_shift)
                         .shifted(cmp.a_shift, cmp.t_shift, cmp.sign)
                         .truncated(order);
    cmp.equal = cmp.prediction == cmp.series;
    if (!cmp.equal) {
        Laurent2 diff = cmp.series - cmp.prediction;
        const int o = diff.min_v();
        std::ostringstream os;
        os << "first difference at t^" << o << ": series " << cmp.series.v_coefficient(o).str("A", "t")
           << ", prediction " << cmp.prediction.v_coefficient(o).str("A", "t");
        cmp.discrepancy = os.str();
    }
    return cmp;
}

}  // namespace soergel
