#pragma once

#include "soergel/complex.hpp"
#include "soergel/reduce.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace soergel {

/// Finitely generated abelian group (or vector space): free rank plus invariant factors > 1.
struct GroupInvariants {
    std::size_t rank = 0;
    std::vector<mpz_class> torsion;

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    std::string str() const;
    friend bool operator==(const GroupInvariants& a, const GroupInvariants& b)
    {
        return a.rank == b.rank && a.torsion == b.torsion;
    }
    friend bool operator!=(const GroupInvariants& a, const GroupInvariants& b) { return !(a == b); }
};

/// Base change of a group computed over Z to Q or Z[1/S] (both flat over Z).
GroupInvariants localize(const GroupInvariants& g, const CoeffRing& target);

/// Outcome of a table comparison; `discrepancy` names the first differing entry.
struct Comparison {
    bool equal = true;
    std::string discrepancy;
    explicit operator bool() const { return equal; }
};

/// (homological k, internal j) -> group. Only nonzero entries are stored; every
/// internal degree <= max_degree is exact.
class HomologyTable {
public:
    using Key = std::pair<int, int>;

    HomologyTable(CoeffRing coeff, int max_degree) : coeff_(std::move(coeff)), max_degree_(max_degree) {}

    const CoeffRing& coeff() const { return coeff_; }
    int max_degree() const { return max_degree_; }
    const std::map<Key, GroupInvariants>& entries() const { return entries_; }

    void set(int k, int j, GroupInvariants g);
    GroupInvariants at(int k, int j) const;

private:
    CoeffRing coeff_;
    int max_degree_;
    std::map<Key, GroupInvariants> entries_;
};

/// (Hochschild i, internal j, homological k) -> group.
class TriplyGradedTable {
public:
    using Key = std::tuple<int, int, int>;

    TriplyGradedTable(CoeffRing coeff, int max_degree) : coeff_(std::move(coeff)), max_degree_(max_degree) {}

    const CoeffRing& coeff() const { return coeff_; }
    int max_degree() const { return max_degree_; }
    const std::map<Key, GroupInvariants>& entries() const { return entries_; }

    void set(int i, int j, int k, GroupInvariants g);
    GroupInvariants at(int i, int j, int k) const;

private:
    CoeffRing coeff_;
    int max_degree_;
    std::map<Key, GroupInvariants> entries_;
};

/// T2 at (k + dk, j + dj) equals T1 at (k, j) wherever both positions lie within the cutoff.
/// Throws std::invalid_argument on differing cutoffs or coefficient rings.
Comparison compare_graded_homology(const HomologyTable& t1, const HomologyTable& t2, int dk = 0, int dj = 0);
Comparison compare_triply_graded(const TriplyGradedTable& t1, const TriplyGradedTable& t2, int di = 0,
                                 int dj = 0, int dk = 0);

/// Complex of graded free modules over Z[slots] (slots are polynomial variable
/// slots of an n-strand MultiPoly). d[x] maps generator x to sum of coefficient * y.
/// Coefficients must be homogeneous with integer values.
struct FreeComplex {
    std::size_t strands = 0;
    std::vector<std::size_t> slots;
    std::vector<Cell> cells;
    std::vector<std::map<std::size_t, MultiPoly>> d;

    std::size_t add_cell(const Cell& c);
    void add(std::size_t from, std::size_t to, const MultiPoly& coeff);
    bool square_zero() const;
    int min_degree() const;
};

/// Generators e_S of every summand of C, k = homological degree, coefficients in X.
FreeComplex free_complex(const ChainComplex& c);

enum class Page {
    /// Homology of the total differential.
    Homology,
    /// E_2 of the filtration by k: homology of (homology of the k-preserving part)
    /// under the k-raising part.
    E2,
};

enum class Schedule { Serial, Parallel };

using GradedGroups = std::map<std::tuple<int, int, int>, GroupInvariants>;

/// Groups indexed (i, j, k) for every even internal degree j <= max_degree.
/// The coefficient ring may be Z, Q, F_p or Z[1/S].
GradedGroups graded_homology(const FreeComplex& c, const CoeffRing& coeff, int max_degree, Page page,
                             Schedule schedule = Schedule::Parallel);

/// Homology of a complex of bimodules viewed as graded abelian groups.
HomologyTable homology_table(const ChainComplex& c, const CoeffRing& coeff, int max_degree,
                             Schedule schedule = Schedule::Parallel);
HomologyTable homology_table(const ChainComplex& c, int max_degree);

/// Checks rank over F_p at P = rank over Z at P + #(p | factor at P) + #(p | factor at P + dir)
/// for all positions of `integral`, where dir = (di, dk) is the direction of the differential.
Comparison check_universal_coefficients(const GradedGroups& integral, const GradedGroups& mod_p,
                                        std::uint64_t p, int di, int dk);

}  // namespace soergel
