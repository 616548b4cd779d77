#pragma once

#include "soergel/bimodule.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace soergel {

/// Differential out of one homological degree: block (target summand, source
/// summand) -> bimodule map.
using BlockMap = std::map<std::pair<std::size_t, std::size_t>, BimoduleMap>;

/// Bounded complex of direct sums of (shifted) Bott-Samelson bimodules with a
/// differential raising homological degree by one. Generators sigma_i sit in
/// degrees (-1, 0), their inverses in (0, 1).
class ChainComplex {
public:
    ChainComplex(std::size_t strands, const CoeffRing& ring);

    std::size_t strands() const { return n_; }
    const CoeffRing& ring() const { return ring_; }
    const std::map<int, std::vector<BSBimodule>>& terms() const { return terms_; }
    const std::map<int, BlockMap>& differentials() const { return diff_; }

    const std::vector<BSBimodule>& term(int degree) const;
    /// Differential from degree k to k + 1 (empty map when zero).
    const BlockMap& differential(int degree) const;

    void add_summand(int degree, BSBimodule m);
    void set_block(int degree, std::size_t target, std::size_t source, BimoduleMap map);

    int min_degree() const;
    int max_degree() const;
    /// Total rank over R of the term in the given degree.
    std::size_t rank(int degree) const;
    /// d o d == 0 as exact matrices.
    bool is_complex() const;
    /// Every block is a bimodule map of internal degree 0.
    bool differentials_are_bimodule_maps() const;

private:
    std::size_t n_;
    CoeffRing ring_;
    std::map<int, std::vector<BSBimodule>> terms_;
    std::map<int, BlockMap> diff_;
};

/// [R] in degree 0.
ChainComplex unit_complex(std::size_t strands, const CoeffRing& ring);
/// F(sigma_i) for generator > 0, F(sigma_i^{-1}) for generator < 0.
ChainComplex rouquier_complex(int generator, std::size_t strands, const CoeffRing& ring);
/// Total complex with the sign (-1)^{deg of first factor} on the second differential.
ChainComplex tensor_complexes(const ChainComplex& c, const ChainComplex& d);
/// F(w) = F(w_1) (x)_R ... (x)_R F(w_k).
ChainComplex rouquier_complex_of_word(const std::vector<int>& letters, std::size_t strands,
                                      const CoeffRing& ring);

}  // namespace soergel
