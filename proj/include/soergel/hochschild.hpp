#pragma once

#include "soergel/braid.hpp"
#include "soergel/complex.hpp"
#include "soergel/homology.hpp"
#include "soergel/laurent.hpp"
#include "soergel/superpoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace soergel {

/// Koszul complex over k[X, Y] on odd generators eps_1..eps_r with
/// d(eps_a) = sum_t forms[a][t] (X_{t+1} - Y_{t+1}). The standard resolution of R
/// as an R-bimodule has forms = identity.
class KoszulComplex {
public:
    KoszulComplex(std::size_t strands, std::vector<std::vector<long>> forms);

    /// d(eps_j) = X_j - Y_j, j = 1..n.
    static KoszulComplex standard(std::size_t strands);
    /// A single eps with d(eps) = X_n - Y_n.
    static KoszulComplex last_variable(std::size_t strands);

    std::size_t strands() const { return n_; }
    std::size_t generators() const { return forms_.size(); }
    std::size_t pieces() const { return std::size_t{1} << forms_.size(); }
    const std::vector<std::vector<long>>& forms() const { return forms_; }

    /// d(eps_a) as a polynomial in X and Y.
    MultiPoly form(std::size_t a, const CoeffRing& ring) const;
    /// The differential as an odd derivation of k[X, Y] (x) Lambda(eps).
    SuperPoly differential(const SuperPoly& v) const;
    /// Generators eps_T over Z[X, Y]: cell (k = 0, i = |T|, j = 2|T|).
    FreeComplex free_complex() const;

private:
    std::size_t n_;
    std::vector<std::vector<long>> forms_;
};

/// The Koszul resolution of R = Z[X_1..X_n] as an R-bimodule.
KoszulComplex koszul_resolution(std::size_t strands);

/// C (x)_{R (x) R} K as a complex of free left R-modules on e_S (x) eps_T, with
/// Koszul differential d_K (k fixed, i lowered) and (-1)^i d_C (k raised).
struct HochschildComplex {
    struct Generator {
        int k = 0;
        std::size_t summand = 0;
        std::size_t basis = 0;
        std::uint32_t mask = 0;
    };

    FreeComplex complex;
    std::vector<Generator> generators;

    std::size_t index(int k, std::size_t summand, std::size_t basis, std::uint32_t mask) const;
    /// Entries with the given change of homological degree (0: Koszul part, 1: complex part).
    FreeComplex component(int dk) const;

private:
    friend HochschildComplex hochschild_bicomplex(const ChainComplex&, const KoszulComplex&);
    std::map<std::tuple<int, std::size_t, std::size_t, std::uint32_t>, std::size_t> lookup_;
};

HochschildComplex hochschild_bicomplex(const ChainComplex& c, const KoszulComplex& k);
HochschildComplex hochschild_bicomplex(const ChainComplex& c);

/// H_k(HH_i(C)) in internal degree j for every j <= max_degree.
TriplyGradedTable hochschild_table(const ChainComplex& c, const KoszulComplex& k, const CoeffRing& coeff,
                                   int max_degree, Schedule schedule = Schedule::Parallel);

/// Triply graded homology of the closure of a braid: homology of the complex of
/// Hochschild homologies of the Rouquier complex. Throws when max_degree is below
/// every internal degree of the complex.
TriplyGradedTable hh_link_homology(const BraidWord& braid, const CoeffRing& coeff, int max_degree,
                                   Schedule schedule = Schedule::Parallel);

/// Same for Hochschild homology with respect to the last variable only.
TriplyGradedTable hh_last_variable(const BraidWord& braid, const CoeffRing& coeff, int max_degree,
                                   Schedule schedule = Schedule::Parallel);

/// HH of M_u (x)_R M_v through the two-sided resolution
/// M_u (x)_R K (x)_R M_v (x)_{R (x) R} K, graded by the total exterior degree.
TriplyGradedTable two_sided_hochschild(const BSBimodule& mu, const BSBimodule& mv, const CoeffRing& coeff,
                                       int max_degree);

/// Hochschild table of a single bimodule (complex concentrated in degree 0).
TriplyGradedTable bimodule_hochschild(const BSBimodule& m, const CoeffRing& coeff, int max_degree);

/// Sum over (i, j, k) of (-1)^k rank A^i t^(j/2), as a Laurent polynomial in (A, t).
Laurent2 euler_characteristic(const TriplyGradedTable& table);

/// Graded Euler characteristic of the unknot, (1 + A t) / (1 - t), to order t^order.
Laurent2 unknot_series(int order);

struct HomflyComparison {
    bool equal = false;
    /// Global unit: series = sign * A^a_shift * t^t_shift * prediction.
    int sign = 1;
    int a_shift = 0;
    int t_shift = 0;
    /// Normalized Euler series chi / chi(unknot) and the prediction from P(a, z),
    /// both truncated to the exact range.
    Laurent2 series;
    Laurent2 prediction;
    std::string discrepancy;
};

/// Euler characteristic of the table divided by the unknot's, as a series in t
/// with Laurent coefficients in A, truncated to t^(max_degree / 2).
Laurent2 euler_homfly(const TriplyGradedTable& table);

/// Series predicted from a HOMFLY polynomial P(a, z) of an n-strand braid closure
/// with writhe w, under a^2 = -A t^2, z = t^{-1/2} - t^{1/2}:
/// chi / chi(unknot) = P * (-A t^2)^{(w - n + 1) / 2} * (A t)^{n - 1} in the
/// unit-free normalization.
Laurent2 homfly_to_series(const Laurent2& p, int writhe, std::size_t strands, int order);

/// Compares euler_homfly(table) with the prediction from the oracle up to a
/// global unit +-A^s t^r.
HomflyComparison compare_with_homfly(const TriplyGradedTable& table, const BraidWord& braid);

}  // namespace soergel
