#include "soergel/homology.hpp"

#include "soergel/linalg.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace soergel {

std::string GroupInvariants::str() const
{
    std::ostringstream os;
    os << "rank " << rank;
    if (!torsion.empty()) {
        os << " torsion [";
        for (std::size_t t = 0; t < torsion.size(); ++t)
            os << (t ? "," : "") << torsion[t].get_str();
        os << "]";
    }
    return os.str();
}

GroupInvariants localize(const GroupInvariants& g, const CoeffRing& target)
{
    GroupInvariants r;
    r.rank = g.rank;
    if (target.kind() == CoeffKind::Rationals)
        return r;
    for (const auto& d : g.torsion) {
        mpz_class v = d;
        for (auto p : target.inverted()) {
            mpz_class pz(std::to_string(p));
            while (mpz_divisible_p(v.get_mpz_t(), pz.get_mpz_t()))
                v /= pz;
        }
        if (v > 1)
            r.torsion.push_back(v);
    }
    return r;
}

void HomologyTable::set(int k, int j, GroupInvariants g)
{
    if (g.is_zero())
        entries_.erase({k, j});
    else
        entries_[{k, j}] = std::move(g);
}

GroupInvariants HomologyTable::at(int k, int j) const
{
    auto it = entries_.find({k, j});
    return it == entries_.end() ? GroupInvariants{} : it->second;
}

void TriplyGradedTable::set(int i, int j, int k, GroupInvariants g)
{
    if (g.is_zero())
        entries_.erase({i, j, k});
    else
        entries_[{i, j, k}] = std::move(g);
}

GroupInvariants TriplyGradedTable::at(int i, int j, int k) const
{
    auto it = entries_.find({i, j, k});
    return it == entries_.end() ? GroupInvariants{} : it->second;
}

namespace {

void check_comparable(const CoeffRing& a, const CoeffRing& b, int da, int db)
{
    if (da != db)
        throw std::invalid_argument("tables computed to different internal-degree cutoffs");
    if (a != b)
        throw std::invalid_argument("tables computed over different coefficient rings");
}

}  // namespace

Comparison compare_graded_homology(const HomologyTable& t1, const HomologyTable& t2, int dk, int dj)
{
    check_comparable(t1.coeff(), t2.coeff(), t1.max_degree(), t2.max_degree());
    const int cut = t1.max_degree();
    std::set<std::pair<int, int>> keys;
    for (const auto& [key, g] : t1.entries())
        keys.insert(key);
    for (const auto& [key, g] : t2.entries())
        keys.insert({key.first - dk, key.second - dj});
    for (const auto& [k, j] : keys) {
        if (j > cut || j + dj > cut)
            continue;
        auto a = t1.at(k, j), b = t2.at(k + dk, j + dj);
        if (a != b) {
            std::ostringstream os;
            os << "(k=" << k << ", j=" << j << "): " << a.str() << " vs (k=" << k + dk << ", j=" << j + dj
               << "): " << b.str();
            return {false, os.str()};
        }
    }
    return {};
}

Comparison compare_triply_graded(const TriplyGradedTable& t1, const TriplyGradedTable& t2, int di, int dj,
                                 int dk)
{
    check_comparable(t1.coeff(), t2.coeff(), t1.max_degree(), t2.max_degree());
    const int cut = t1.max_degree();
    std::set<std::tuple<int, int, int>> keys;
    for (const auto& [key, g] : t1.entries())
        keys.insert(key);
    for (const auto& [key, g] : t2.entries()) {
        auto [i, j, k] = key;
        keys.insert({i - di, j - dj, k - dk});
    }
    for (const auto& [i, j, k] : keys) {
        if (j > cut || j + dj > cut)
            continue;
        auto a = t1.at(i, j, k), b = t2.at(i + di, j + dj, k + dk);
        if (a != b) {
            std::ostringstream os;
            os << "(i=" << i << ", j=" << j << ", k=" << k << "): " << a.str() << " vs (i=" << i + di
               << ", j=" << j + dj << ", k=" << k + dk << "): " << b.str();
            return {false, os.str()};
        }
    }
    return {};
}

std::size_t FreeComplex::add_cell(const Cell& c)
{
    cells.push_back(c);
    d.emplace_back();
    return cells.size() - 1;
}

void FreeComplex::add(std::size_t from, std::size_t to, const MultiPoly& coeff)
{
    if (coeff.is_zero())
        return;
    auto it = d[from].find(to);
    if (it == d[from].end()) {
        d[from].emplace(to, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        d[from].erase(it);
}

bool FreeComplex::square_zero() const
{
    for (std::size_t x = 0; x < cells.size(); ++x) {
        std::map<std::size_t, MultiPoly> acc;
        for (const auto& [y, p] : d[x])
            for (const auto& [z, q] : d[y]) {
                auto it = acc.find(z);
                if (it == acc.end())
                    acc.emplace(z, p * q);
                else
                    it->second += p * q;
            }
        for (const auto& [z, v] : acc)
            if (!v.is_zero())
                return false;
    }
    return true;
}

int FreeComplex::min_degree() const
{
    int m = 0;
    bool first = true;
    for (const auto& c : cells)
        if (first || c.j < m) {
            m = c.j;
            first = false;
        }
    return m;
}

FreeComplex free_complex(const ChainComplex& c)
{
    FreeComplex f;
    f.strands = c.strands();
    for (std::size_t s = 0; s < c.strands(); ++s)
        f.slots.push_back(x_slot(c.strands(), s + 1));
    // offsets[k][summand] = first cell index
    std::map<int, std::vector<std::size_t>> offsets;
    for (const auto& [k, summands] : c.terms()) {
        auto& off = offsets[k];
        for (const auto& m : summands) {
            off.push_back(f.cells.size());
            for (std::size_t s = 0; s < m.rank(); ++s)
                f.add_cell(Cell{k, 0, m.basis_degree(s)});
        }
    }
    for (const auto& [k, blocks] : c.differentials()) {
        for (const auto& [key, map] : blocks) {
            const auto [tgt, src] = key;
            const std::size_t src0 = offsets.at(k).at(src);
            const std::size_t tgt0 = offsets.at(k + 1).at(tgt);
            const auto& m = map.matrix();
            for (std::size_t t = 0; t < m.size(); ++t)
                for (std::size_t s = 0; s < m[t].size(); ++s)
                    f.add(src0 + s, tgt0 + t, m[t][s]);
        }
    }
    return f;
}

namespace {

using Position = std::pair<int, int>;  // (i, k)

mpz_class integral_value(const mpq_class& q)
{
    if (q.get_den() != 1)
        throw CoefficientError("complex has non-integral coefficients");
    return q.get_num();
}

struct IntConv {
    mpz_class operator()(const mpq_class& q) const { return integral_value(q); }
};

struct ModConv {
    std::uint64_t p;
    std::uint64_t operator()(const mpq_class& q) const
    {
        mpz_class v = integral_value(q), r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
        return r.get_ui();
    }
};

/// Expands the module-level complex into the free abelian group of internal degree jj.
template <class Traits, class Conv>
SparseReducer<Traits> expand_strip(const SparseReducer<PolyTraits>& module, const std::vector<std::size_t>& slots,
                                   int jj, Traits traits, Conv conv)
{
    SparseReducer<Traits> r(traits);
    const auto& cells = module.cells();
    std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index(cells.size());
    std::vector<std::vector<Monomial>> monos(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (!module.alive(c) || cells[c].j > jj || (jj - cells[c].j) % 2 != 0)
            continue;
        monos[c] = monomials_of_total(slots, static_cast<unsigned>((jj - cells[c].j) / 2));
        for (const auto& m : monos[c])
            index[c].emplace(m, r.add_cell(Cell{cells[c].k, cells[c].i, jj}));
    }
    for (std::size_t x = 0; x < cells.size(); ++x) {
        if (monos[x].empty())
            continue;
        for (const auto& [y, poly] : module.out(x)) {
            if (monos[y].empty())
                continue;
            for (const auto& m : monos[x]) {
                const std::size_t from = index[x].at(m);
                for (const auto& [q, coef] : poly.terms()) {
                    auto it = index[y].find(m * q);
                    if (it == index[y].end())
                        throw std::logic_error("differential is not homogeneous");
                    r.add_entry(from, it->second, conv(coef));
                }
            }
        }
    }
    return r;
}

template <class Traits>
std::map<Position, std::vector<std::size_t>> group_positions(const SparseReducer<Traits>& r)
{
    std::map<Position, std::vector<std::size_t>> g;
    for (std::size_t c : r.alive_cells())
        g[{r.cells()[c].i, r.cells()[c].k}].push_back(c);
    return g;
}

template <class Traits, class ToMpz>
IntMatrix block(const SparseReducer<Traits>& r, const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& cols, ToMpz to_mpz)
{
    IntMatrix m(rows.size(), cols.size());
    std::unordered_map<std::size_t, std::size_t> row_of;
    for (std::size_t t = 0; t < rows.size(); ++t)
        row_of[rows[t]] = t;
    for (std::size_t s = 0; s < cols.size(); ++s)
        for (const auto& [y, v] : r.out(cols[s])) {
            auto it = row_of.find(y);
            if (it != row_of.end())
                m(it->second, s) = to_mpz(v);
        }
    return m;
}

/// ker(out of P) / im(into P) for every position, after all pivots are gone.
template <class Traits, class ToMpz>
std::map<Position, GroupInvariants> residual_homology(const SparseReducer<Traits>& r, std::uint64_t p,
                                                      ToMpz to_mpz)
{
    std::map<Position, GroupInvariants> out;
    for (const auto& [pos, members] : group_positions(r)) {
        std::set<std::size_t> sources, targets;
        for (std::size_t c : members) {
            for (std::size_t x : r.in(c))
                sources.insert(x);
            for (const auto& [y, v] : r.out(c))
                targets.insert(y);
        }
        std::vector<std::size_t> src(sources.begin(), sources.end()), tgt(targets.begin(), targets.end());
        IntMatrix into = block(r, members, src, to_mpz);
        IntMatrix outof = block(r, tgt, members, to_mpz);
        GroupInvariants g;
        if (p) {
            g.rank = members.size() - rank_mod_p(into, p) - rank_mod_p(outof, p);
        } else {
            auto inv = smith_invariants(into);
            g.rank = members.size() - inv.size() - integer_rank(outof);
            for (auto& d : inv)
                if (d > 1)
                    g.torsion.push_back(d);
        }
        out[pos] = g;
    }
    return out;
}

/// E_2 for a residual bicomplex over Z whose k-preserving part is not yet zero.
std::map<Position, GroupInvariants> lattice_e2(const SparseReducer<IntTraits>& r)
{
    auto groups = group_positions(r);
    auto members = [&](int i, int k) -> std::vector<std::size_t> {
        auto it = groups.find({i, k});
        return it == groups.end() ? std::vector<std::size_t>{} : it->second;
    };
    auto id = [](const mpz_class& v) { return v; };
    std::map<Position, GroupInvariants> out;
    for (const auto& [pos, here] : groups) {
        const auto [i, k] = pos;
        const auto down = members(i - 1, k);
        const auto right = members(i, k + 1);
        const auto right_up = members(i + 1, k + 1);
        IntMatrix a0 = block(r, down, here, id);
        IntMatrix h = block(r, right, here, id);
        IntMatrix bp = block(r, right, right_up, id);
        // Kernel of [[a0, 0], [h, -bp]] projected to the first block of coordinates.
        IntMatrix m(down.size() + right.size(), here.size() + right_up.size());
        for (std::size_t t = 0; t < down.size(); ++t)
            for (std::size_t s = 0; s < here.size(); ++s)
                m(t, s) = a0(t, s);
        for (std::size_t t = 0; t < right.size(); ++t) {
            for (std::size_t s = 0; s < here.size(); ++s)
                m(down.size() + t, s) = h(t, s);
            for (std::size_t s = 0; s < right_up.size(); ++s)
                m(down.size() + t, here.size() + s) = -bp(t, s);
        }
        IntMatrix kern = kernel_basis(m);
        IntMatrix proj(here.size(), kern.cols());
        for (std::size_t t = 0; t < here.size(); ++t)
            for (std::size_t s = 0; s < kern.cols(); ++s)
                proj(t, s) = kern(t, s);
        IntMatrix n_basis = image_basis(proj);

        const auto up = members(i + 1, k);
        const auto left = members(i, k - 1);
        const auto left_down = members(i - 1, k - 1);
        IntMatrix d1 = block(r, here, up, id);
        IntMatrix a0_prev = block(r, left_down, left, id);
        IntMatrix h_prev = block(r, here, left, id);
        IntMatrix d2 = h_prev * kernel_basis(a0_prev);
        auto q = quotient_invariants(n_basis, d1.hcat(d2));
        out[pos] = GroupInvariants{q.free_rank, q.torsion};
    }
    return out;
}

std::map<Position, GroupInvariants> strip_integral(const SparseReducer<PolyTraits>& module,
                                                   const std::vector<std::size_t>& slots, int jj, Page page)
{
    auto r = expand_strip(module, slots, jj, IntTraits{}, IntConv{});
    auto id = [](const mpz_class& v) { return v; };
    if (page == Page::Homology) {
        r.reduce(PivotRule::Any);
        return residual_homology(r, 0, id);
    }
    r.reduce(PivotRule::Vertical);
    if (r.has_vertical_entries())
        return lattice_e2(r);
    r.reduce(PivotRule::Horizontal);
    return residual_homology(r, 0, id);
}

std::map<Position, GroupInvariants> strip_mod_p(const SparseReducer<PolyTraits>& module,
                                                const std::vector<std::size_t>& slots, int jj, Page page,
                                                std::uint64_t p)
{
    auto r = expand_strip(module, slots, jj, ModTraits{p}, ModConv{p});
    auto to_mpz = [](std::uint64_t v) { return mpz_class(std::to_string(v)); };
    if (page == Page::Homology) {
        r.reduce(PivotRule::Any);
    } else {
        r.reduce(PivotRule::Vertical);
        r.reduce(PivotRule::Horizontal);
    }
    return residual_homology(r, p, to_mpz);
}

}  // namespace

GradedGroups graded_homology(const FreeComplex& c, const CoeffRing& coeff, int max_degree, Page page,
                             Schedule schedule)
{
    SparseReducer<PolyTraits> module;
    for (const auto& cell : c.cells)
        module.add_cell(cell);
    for (std::size_t x = 0; x < c.cells.size(); ++x)
        for (const auto& [y, p] : c.d[x])
            module.add_entry(x, y, p);
    module.reduce(page == Page::Homology ? PivotRule::Any : PivotRule::Vertical);

    std::vector<int> degrees;
    int lo = max_degree;
    for (std::size_t x : module.alive_cells())
        lo = std::min(lo, module.cells()[x].j);
    for (int jj = lo; jj <= max_degree; ++jj)
        if (jj % 2 == 0)
            degrees.push_back(jj);

    const bool mod_p = coeff.kind() == CoeffKind::PrimeField;
    const std::uint64_t p = coeff.prime();
    std::vector<std::map<Position, GroupInvariants>> strips(degrees.size());
    auto run = [&](std::size_t t) {
        strips[t] = mod_p ? strip_mod_p(module, c.slots, degrees[t], page, p)
                          : strip_integral(module, c.slots, degrees[t], page);
    };
    if (schedule == Schedule::Parallel) {
        const long count = static_cast<long>(degrees.size());
        std::vector<std::exception_ptr> errors(degrees.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (long t = 0; t < count; ++t) {
            try {
                run(static_cast<std::size_t>(t));
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        }
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    } else {
        for (std::size_t t = 0; t < degrees.size(); ++t)
            run(t);
    }

    GradedGroups result;
    for (std::size_t t = 0; t < degrees.size(); ++t)
        for (const auto& [pos, g] : strips[t]) {
            GroupInvariants h = (mod_p || coeff.kind() == CoeffKind::Integers) ? g : localize(g, coeff);
            if (!h.is_zero())
                result[{pos.first, degrees[t], pos.second}] = std::move(h);
        }
    return result;
}

HomologyTable homology_table(const ChainComplex& c, const CoeffRing& coeff, int max_degree, Schedule schedule)
{
    if (max_degree < 0)
        throw std::invalid_argument("homology_table: negative degree cutoff");
    HomologyTable table(coeff, max_degree);
    for (auto& [key, g] : graded_homology(free_complex(c), coeff, max_degree, Page::Homology, schedule)) {
        auto [i, j, k] = key;
        table.set(k, j, g);
    }
    return table;
}

HomologyTable homology_table(const ChainComplex& c, int max_degree)
{
    return homology_table(c, c.ring(), max_degree);
}

Comparison check_universal_coefficients(const GradedGroups& integral, const GradedGroups& mod_p, std::uint64_t p,
                                        int di, int dk)
{
    mpz_class pz(std::to_string(p));
    auto count_p = [&](const GradedGroups& g, int i, int j, int k) {
        auto it = g.find({i, j, k});
        if (it == g.end())
            return std::size_t{0};
        return static_cast<std::size_t>(std::count_if(it->second.torsion.begin(), it->second.torsion.end(),
                                                      [&](const mpz_class& d) {
                                                          return mpz_divisible_p(d.get_mpz_t(), pz.get_mpz_t()) != 0;
                                                      }));
    };
    auto rank = [](const GradedGroups& g, int i, int j, int k) {
        auto it = g.find({i, j, k});
        return it == g.end() ? std::size_t{0} : it->second.rank;
    };
    std::set<std::tuple<int, int, int>> keys;
    for (const auto& [key, g] : integral) {
        keys.insert(key);
        auto [i, j, k] = key;
        keys.insert({i - di, j, k - dk});
    }
    for (const auto& [key, g] : mod_p)
        keys.insert(key);
    for (const auto& [i, j, k] : keys) {
        std::size_t expected = rank(integral, i, j, k) + count_p(integral, i, j, k) +
                               count_p(integral, i + di, j, k + dk);
        std::size_t got = rank(mod_p, i, j, k);
        if (expected != got) {
            std::ostringstream os;
            os << "(i=" << i << ", j=" << j << ", k=" << k << "): F_" << p << " rank " << got
               << ", integral prediction " << expected;
            return {false, os.str()};
        }
    }
    return {};
}

}  // namespace soergel
