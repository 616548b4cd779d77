#include "soergel/complex.hpp"

#include <cstdlib>

namespace soergel {

ChainComplex::ChainComplex(std::size_t strands, const CoeffRing& ring) : n_(strands), ring_(ring) {}

const std::vector<BSBimodule>& ChainComplex::term(int degree) const
{
    static const std::vector<BSBimodule> empty;
    auto it = terms_.find(degree);
    return it == terms_.end() ? empty : it->second;
}

const BlockMap& ChainComplex::differential(int degree) const
{
    static const BlockMap empty;
    auto it = diff_.find(degree);
    return it == diff_.end() ? empty : it->second;
}

void ChainComplex::add_summand(int degree, BSBimodule m)
{
    if (m.strands() != n_)
        throw std::invalid_argument("strand mismatch");
    if (m.ring() != ring_)
        throw CoefficientError("coefficient mismatch");
    terms_[degree].push_back(std::move(m));
}

void ChainComplex::set_block(int degree, std::size_t target, std::size_t source, BimoduleMap map)
{
    if (source >= term(degree).size() || target >= term(degree + 1).size())
        throw std::out_of_range("differential block refers to a missing summand");
    if (map.degree() != 0)
        throw std::invalid_argument("differential blocks must have internal degree 0");
    auto& blocks = diff_[degree];
    blocks.insert_or_assign({target, source}, std::move(map));
}

int ChainComplex::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int ChainComplex::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

std::size_t ChainComplex::rank(int degree) const
{
    std::size_t r = 0;
    for (const auto& m : term(degree))
        r += m.rank();
    return r;
}

bool ChainComplex::is_complex() const
{
    for (const auto& [k, first] : diff_) {
        const auto& second = differential(k + 1);
        if (second.empty())
            continue;
        // (d_{k+1} d_k)[(c, a)] = sum_b d_{k+1}[(c, b)] d_k[(b, a)]
        std::map<std::pair<std::size_t, std::size_t>, std::optional<BimoduleMap>> acc;
        for (const auto& [ba, f] : first)
            for (const auto& [cb, g] : second) {
                if (cb.second != ba.first)
                    continue;
                BimoduleMap gf = g.compose(f);
                auto& slot = acc[{cb.first, ba.second}];
                if (!slot) {
                    slot = gf;
                } else {
                    LeftMatrix m = slot->matrix();
                    for (std::size_t r = 0; r < m.size(); ++r)
                        for (std::size_t c = 0; c < m[r].size(); ++c)
                            m[r][c] += gf.matrix()[r][c];
                    slot = BimoduleMap(slot->source(), slot->target(), std::move(m), slot->degree());
                }
            }
        for (const auto& [key, m] : acc)
            if (m && !m->is_zero())
                return false;
    }
    return true;
}

bool ChainComplex::differentials_are_bimodule_maps() const
{
    for (const auto& [k, blocks] : diff_)
        for (const auto& [key, m] : blocks)
            if (m.degree() != 0 || !m.is_homogeneous() || !m.is_bimodule_map())
                return false;
    return true;
}

ChainComplex unit_complex(std::size_t strands, const CoeffRing& ring)
{
    ChainComplex c(strands, ring);
    c.add_summand(0, BSBimodule(strands, {}, ring));
    return c;
}

ChainComplex rouquier_complex(int generator, std::size_t strands, const CoeffRing& ring)
{
    const auto i = static_cast<std::size_t>(std::abs(generator));
    if (generator == 0 || i >= strands)
        throw std::out_of_range("generator " + std::to_string(generator) + " out of range for " +
                                std::to_string(strands) + " strands");
    ChainComplex c(strands, ring);
    if (generator > 0) {
        c.add_summand(-1, BSBimodule(strands, {generator}, ring));
        c.add_summand(0, BSBimodule(strands, {}, ring));
        c.set_block(-1, 0, 0, counit_br(i, strands, ring));
    } else {
        c.add_summand(0, BSBimodule(strands, {}, ring));
        c.add_summand(1, BSBimodule(strands, {static_cast<int>(i)}, ring, -2));
        c.set_block(0, 0, 0, unit_rb(i, strands, ring, -2));
    }
    return c;
}

ChainComplex tensor_complexes(const ChainComplex& c, const ChainComplex& d)
{
    if (c.strands() != d.strands())
        throw std::invalid_argument("strand mismatch in tensor product of complexes");
    if (c.ring() != d.ring())
        throw CoefficientError("coefficient mismatch in tensor product of complexes");
    ChainComplex out(c.strands(), c.ring());
    // Products share right-action tables per word.
    std::map<std::vector<int>, BSBimodule> cache;
    auto product = [&](const BSBimodule& x, const BSBimodule& y) {
        std::vector<int> w = x.word();
        w.insert(w.end(), y.word().begin(), y.word().end());
        auto it = cache.find(w);
        if (it == cache.end())
            it = cache.emplace(w, BSBimodule(x.strands(), w, x.ring())).first;
        return it->second.shifted(x.q_shift() + y.q_shift());
    };
    // summand index of (a, b, s, t) inside total degree a + b
    std::map<std::tuple<int, int, std::size_t, std::size_t>, std::size_t> index;
    for (const auto& [a, cs] : c.terms())
        for (const auto& [b, ds] : d.terms())
            for (std::size_t s = 0; s < cs.size(); ++s)
                for (std::size_t t = 0; t < ds.size(); ++t) {
                    index[{a, b, s, t}] = out.term(a + b).size();
                    out.add_summand(a + b, product(cs[s], ds[t]));
                }
    auto idx = [&](int a, int b, std::size_t s, std::size_t t) { return index.at({a, b, s, t}); };

    for (const auto& [a, cs] : c.terms())
        for (const auto& [b, ds] : d.terms()) {
            const int total = a + b;
            // d_C (x) id
            for (const auto& [key, f] : c.differential(a))
                for (std::size_t t = 0; t < ds.size(); ++t)
                    out.set_block(total, idx(a + 1, b, key.first, t), idx(a, b, key.second, t),
                                  tensor_maps(f, BimoduleMap::identity(ds[t]), product(f.source(), ds[t]),
                                              product(f.target(), ds[t])));
            // (-1)^a id (x) d_D
            const long sign = (a % 2 == 0) ? 1 : -1;
            for (const auto& [key, g] : d.differential(b))
                for (std::size_t s = 0; s < cs.size(); ++s) {
                    BimoduleMap m = tensor_maps(BimoduleMap::identity(cs[s]), g, product(cs[s], g.source()),
                                                product(cs[s], g.target()));
                    out.set_block(total, idx(a, b + 1, s, key.first), idx(a, b, s, key.second),
                                  sign == 1 ? m : m.scaled(-1));
                }
        }
    return out;
}

ChainComplex rouquier_complex_of_word(const std::vector<int>& letters, std::size_t strands,
                                      const CoeffRing& ring)
{
    ChainComplex c = unit_complex(strands, ring);
    for (int g : letters)
        c = tensor_complexes(c, rouquier_complex(g, strands, ring));
    return c;
}

}  // namespace soergel
