#pragma once

#include "soergel/bimodule.hpp"
#include "soergel/complex.hpp"
#include "soergel/hochschild.hpp"
#include "soergel/superpoly.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace soergel {

/// f(X) = sum_{i=0}^{N} b_i X^{i+1} modulo X^{N+2}, with b_0 a unit.
class FormalSeries {
public:
    FormalSeries(const CoeffRing& ring, std::vector<mpq_class> b);

    static FormalSeries identity(const CoeffRing& ring, std::size_t order);

    const CoeffRing& ring() const { return ring_; }
    /// Truncation order N.
    std::size_t order() const { return b_.size() - 1; }
    const std::vector<mpq_class>& coefficients() const { return b_; }

    /// this o g
    FormalSeries compose(const FormalSeries& g) const;
    FormalSeries inverse() const;

    std::string str() const;

    friend bool operator==(const FormalSeries& a, const FormalSeries& b)
    {
        return a.ring_ == b.ring_ && a.b_ == b.b_;
    }

private:
    CoeffRing ring_;
    std::vector<mpq_class> b_;
};

FormalSeries series_compose(const FormalSeries& f, const FormalSeries& g);

/// f(X) = sum (a_i theta + b_i) X^{i+1} with theta odd, theta^2 = 0. Composition
/// treats theta as a nilpotent scalar.
class SuperSeries {
public:
    SuperSeries(const CoeffRing& ring, std::vector<mpq_class> b, std::vector<mpq_class> a);

    static SuperSeries identity(const CoeffRing& ring, std::size_t order);

    std::size_t order() const { return b_.size() - 1; }
    const std::vector<mpq_class>& even() const { return b_; }
    const std::vector<mpq_class>& odd() const { return a_; }
    FormalSeries even_series() const { return FormalSeries(ring_, b_); }

    SuperSeries compose(const SuperSeries& g) const;
    SuperSeries inverse() const;

    friend bool operator==(const SuperSeries& x, const SuperSeries& y)
    {
        return x.ring_ == y.ring_ && x.b_ == y.b_ && x.a_ == y.a_;
    }

private:
    CoeffRing ring_;
    std::vector<mpq_class> b_;
    std::vector<mpq_class> a_;
};

SuperSeries series_compose(const SuperSeries& f, const SuperSeries& g);

/// Multi-index of a dual monomial (s_1^{I_1} s_2^{I_2} ...)^*: m -> I_m, m >= 1.
using DualIndex = std::map<unsigned, unsigned>;

/// Coefficient of s^I in prod_v mu^*(x_v)^{k_v}, summed over the monomials of f, with
/// mu^*(x) = x + sum_{m >= 1} s_m x^{m+1} for every variable x (s_0 = 1).
MultiPoly dual_pair_act(const DualIndex& index, const MultiPoly& f);

enum class Extension { EvenDerivation, OddDerivation, Multiplicative };

enum class Rep {
    /// k[X_a, Y_a, eps_a] with d(eps_a) = X_a - Y_a.
    Koszul,
    /// k[X_a, eps_a], the odd tangent bundle of the line.
    Untwisted,
};

/// Operator on k[X, Y] (x) Lambda(eps_1..eps_r), determined by its values on the
/// variable slots and on the eps_a and extended by `rule`.
struct OperatorAction {
    std::string name;
    Rep rep = Rep::Koszul;
    Extension rule = Extension::EvenDerivation;
    /// Internal degree shift; none for inhomogeneous operators.
    std::optional<int> degree_shift;
    std::function<SuperPoly(std::size_t slot)> on_variable;
    std::function<SuperPoly(std::size_t a)> on_epsilon;

    bool odd() const { return rule == Extension::OddDerivation; }
    SuperPoly operator()(const SuperPoly& v) const;
};

OperatorAction L_op(unsigned m, std::size_t strands, const CoeffRing& ring, Rep rep = Rep::Koszul);
/// (X^{m+1} - Y^{m+1}) d/d eps, or X^{m+1} d/d eps on the untwisted rep.
OperatorAction G_op(unsigned m, std::size_t strands, const CoeffRing& ring, Rep rep = Rep::Koszul);
/// eps pi_m d/d eps
OperatorAction lambda_op(unsigned m, std::size_t strands, const CoeffRing& ring);
/// eps pi_m pi_n d/d eps
OperatorAction lambda_op(unsigned m, unsigned n, std::size_t strands, const CoeffRing& ring);
/// X^{m+1} d/dX + Y^{m+1} d/dY + eps pi_m d/d eps
OperatorAction twisted_L_op(unsigned m, std::size_t strands, const CoeffRing& ring);
/// x -> x + x^p on variables, eps_a -> eps_a (1 + (X_a - Y_a)^{p-1}); ring must be F_p.
OperatorAction steenrod_op(std::uint64_t p, std::size_t strands, const CoeffRing& ring);

/// Super commutator a b - (-1)^{|a||b|} b a applied to v.
SuperPoly commutator(const OperatorAction& a, const OperatorAction& b, const SuperPoly& v);

/// X^{m+1} d/dX extended as a derivation over every variable of f.
MultiPoly virasoro_L(unsigned m, const MultiPoly& f);

enum class SuperKind { G, Lambda, Lambda2 };
/// G_m, lambda_m or lambda_{m,n} on the Koszul rep (n used only by Lambda2).
SuperPoly super_G_lambda(SuperKind kind, unsigned m, unsigned n, const SuperPoly& v);
SuperPoly twisted_L(unsigned m, const SuperPoly& v);
/// Total power; the ring of v must be F_p.
SuperPoly steenrod_total(std::uint64_t p, const SuperPoly& v);
/// P^i: the part of the total power raising internal degree by 2 i (p - 1).
SuperPoly steenrod_power(unsigned i, std::uint64_t p, const SuperPoly& v);

/// L_m on a Bott-Samelson bimodule, acting factorwise on pure tensors.
BSElement bs_virasoro(unsigned m, const BSBimodule& b, const BSElement& v);
/// Total Steenrod power on a Bott-Samelson bimodule (ring endomorphism).
BSElement bs_steenrod(std::uint64_t p, const BSBimodule& b, const BSElement& v);

/// L_n on b * Th in the Thom-twisted rep of B_i:
/// L_n(b Th) = (L_n(b) - 1/2 (alpha_i(X)^n + alpha_i(Y)^n) b) Th. The ring must invert 2.
BSElement thom_twist_action(unsigned n, const BSBimodule& bi, const BSElement& b);

/// Chain of a Hochschild complex: generator index -> left coefficient.
using HochschildChain = std::map<std::size_t, MultiPoly>;

HochschildChain apply_differential(const FreeComplex& f, const HochschildChain& x);
/// L~_m on C (x) Lambda(eps) for the standard Koszul complex.
HochschildChain hochschild_twisted_L(unsigned m, const ChainComplex& c, const HochschildComplex& h,
                                     const HochschildChain& x);
HochschildChain hochschild_steenrod(std::uint64_t p, const ChainComplex& c, const HochschildComplex& h,
                                    const HochschildChain& x);
/// (b eps_S)(b' eps_T) = b b' eps_S eps_T for chains supported on one summand.
HochschildChain hochschild_product(const ChainComplex& c, const HochschildComplex& h, const HochschildChain& x,
                                   const HochschildChain& y);
bool chains_equal(const HochschildChain& a, const HochschildChain& b);

struct RelationReport {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Checks, on every basis element f eps_T with f a monomial of total exponent <= max_total:
/// [L_m, L_n] = (n-m) L_{m+n}, [L_m, G_n] = (n+1) G_{m+n}, {G_m, G_n} = 0 on the untwisted rep;
/// [L~_m, L~_n] = (n-m) L~_{m+n}, [L~_m, G_n] = (n+1) G_{m+n} - [G_0, lambda_{m,n}],
/// G_m = [G_0, lambda_m] and L~_m G_0 = G_0 L~_m on the Koszul rep; all m, n <= max_index.
RelationReport check_operator_relations(std::size_t strands, unsigned max_index, unsigned max_total,
                                        const CoeffRing& ring);

struct DescentReport {
    std::size_t bidegrees = 0;
    bool cycles = true;
    bool boundaries = true;
    bool well_defined = true;
    std::string failure;
    bool ok() const { return cycles && boundaries && well_defined; }
};

/// Checks over Z that L~_m maps Koszul cycles to cycles and boundaries to boundaries
/// in every (i, j, k) with j + 2m <= max_degree, and that two choices of cycle
/// representatives (a kernel basis, and the same basis moved by random boundaries)
/// give the same classes.
DescentReport check_descent(const ChainComplex& c, unsigned m, int max_degree, std::uint64_t seed = 1);

struct SteenrodReport {
    std::size_t chains = 0;
    std::size_t pairs = 0;
    std::size_t eligible_pairs = 0;
    bool koszul = true;
    bool rouquier = true;
    bool grading = true;
    bool cartan = true;
    std::string failure;
};

/// Total power on the Hochschild complex of c (over F_p) evaluated on {1, X_1} times every
/// generator: commutation with both differentials, P^i grading, and the Cartan formula on
/// pairs of generators in one summand. max_pairs = 0 checks every pair, otherwise an
/// evenly strided subset.
SteenrodReport check_steenrod(std::uint64_t p, const ChainComplex& c, std::size_t max_pairs = 0);

}  // namespace soergel
