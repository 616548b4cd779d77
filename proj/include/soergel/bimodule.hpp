#pragma once

#include "soergel/poly.hpp"

#include <memory>
#include <vector>

namespace soergel {

/// Element of a Bott-Samelson bimodule: one left coefficient (X variables only)
/// per basis element e_S, indexed by the subset bitmask S.
using BSElement = std::vector<MultiPoly>;

/// Square or rectangular matrix of left coefficients. m[t][s] is the
/// coefficient of basis element t in the image of basis element s.
using LeftMatrix = std::vector<std::vector<MultiPoly>>;

/// B_{i_1} (x)_R ... (x)_R B_{i_k} for R = k[X_1..X_n], as a free left R-module
/// with basis e_S, S a subset of {1..k}. Bit t-1 of S set means the factor after
/// the t-th tensor sign carries x_{i_t} instead of 1.
class BSBimodule {
public:
    BSBimodule(std::size_t strands, std::vector<int> word, const CoeffRing& ring, int q_shift = 0);

    std::size_t strands() const { return n_; }
    const std::vector<int>& word() const { return word_; }
    std::size_t length() const { return word_.size(); }
    const CoeffRing& ring() const { return ring_; }
    int q_shift() const { return q_shift_; }
    std::size_t rank() const { return std::size_t{1} << word_.size(); }

    /// Internal degree of e_S including the shift.
    int basis_degree(std::size_t subset) const;
    BSBimodule shifted(int extra) const;

    BSElement zero() const;
    BSElement basis(std::size_t subset) const;
    MultiPoly zero_poly() const { return MultiPoly(n_, ring_); }

    /// Normal form of the pure tensor f_0 (x) f_1 (x) ... (x) f_k with each f_t a
    /// polynomial in X variables standing for the variables of the t-th factor.
    BSElement normal_form(std::vector<MultiPoly> factors) const;

    /// Matrix of the right action of Y_j.
    const LeftMatrix& right_y(std::size_t j) const;
    /// elem * g for g a polynomial in Y variables.
    BSElement right_action(const BSElement& elem, const MultiPoly& g) const;
    /// f * elem for f a polynomial in X variables.
    BSElement left_action(const MultiPoly& f, const BSElement& elem) const;
    /// Acts by f(X, Y): X monomials on the left, Y monomials on the right.
    BSElement act(const MultiPoly& f, const BSElement& elem) const;

    /// Ring structure of H^*(BS): factorwise product of pure tensors.
    BSElement multiply(const BSElement& a, const BSElement& b) const;
    /// Pure tensor factors of basis element e_S.
    std::vector<MultiPoly> basis_factors(std::size_t subset) const;

    friend bool operator==(const BSBimodule& a, const BSBimodule& b)
    {
        return a.n_ == b.n_ && a.word_ == b.word_ && a.ring_ == b.ring_ && a.q_shift_ == b.q_shift_;
    }

private:
    void nf_rec(std::size_t t, std::vector<MultiPoly>& factors, std::size_t bits, BSElement& out) const;

    std::size_t n_;
    std::vector<int> word_;
    CoeffRing ring_;
    int q_shift_;
    std::shared_ptr<const std::vector<LeftMatrix>> right_y_;
};

BSBimodule make_bs(const std::vector<int>& word, std::size_t strands, const CoeffRing& ring);

/// Element-level right action in normal form (rightmost factor first).
BSElement right_action_normal_form(const BSBimodule& m, const BSElement& elem, const MultiPoly& g);

BSBimodule tensor_bimodules(const BSBimodule& m, const BSBimodule& n);
/// Identification of e_S (x) e_T with a basis index of tensor_bimodules(m, n).
inline std::size_t tensor_index(const BSBimodule& m, std::size_t s, std::size_t t)
{
    return s | (t << m.length());
}

/// Left R-linear map between Bott-Samelson bimodules.
class BimoduleMap {
public:
    BimoduleMap(BSBimodule source, BSBimodule target, LeftMatrix matrix, int degree);

    const BSBimodule& source() const { return source_; }
    const BSBimodule& target() const { return target_; }
    const LeftMatrix& matrix() const { return matrix_; }
    int degree() const { return degree_; }

    BSElement apply(const BSElement& v) const;
    /// this o other
    BimoduleMap compose(const BimoduleMap& other) const;
    BimoduleMap scaled(long c) const;
    bool is_zero() const;
    /// Commutes with the right action of every Y_j.
    bool is_bimodule_map() const;
    /// Every entry homogeneous of the degree forced by the declared map degree.
    bool is_homogeneous() const;

    static BimoduleMap identity(const BSBimodule& m);
    static BimoduleMap zero(const BSBimodule& source, const BSBimodule& target, int degree);

private:
    BSBimodule source_;
    BSBimodule target_;
    LeftMatrix matrix_;
    int degree_;
};

/// f (x) g on source(f) (x) source(g) -> target(f) (x) target(g).
BimoduleMap tensor_maps(const BimoduleMap& f, const BimoduleMap& g);
/// Same, with the product bimodules supplied (they must equal the tensor products).
BimoduleMap tensor_maps(const BimoduleMap& f, const BimoduleMap& g, BSBimodule source, BSBimodule target);

/// br_i : B_i -> R, e_0 -> 1, e_{1} -> X_i.
BimoduleMap counit_br(std::size_t i, std::size_t strands, const CoeffRing& ring);
/// rb_i : R -> B_i{shift}, 1 -> X_i e_0 - e_0 Y_{i+1}. With shift -2 the map has degree 0.
BimoduleMap unit_rb(std::size_t i, std::size_t strands, const CoeffRing& ring, int target_shift = 0);
/// The element X_i - Y_{i+1} of B_i in normal form.
BSElement unitary_thom_element(const BSBimodule& bi);
/// (alpha_i(X) e_0 + e_0 alpha_i(Y)) / 2; the ring must invert 2.
BSElement adjoint_thom_element(const BSBimodule& bi);

bool elements_equal(const BSElement& a, const BSElement& b);
BSElement add(const BSElement& a, const BSElement& b);
BSElement sub(const BSElement& a, const BSElement& b);
BSElement scale(const BSElement& a, const mpq_class& c);
bool is_zero(const BSElement& a);
std::string element_str(const BSElement& a);

}  // namespace soergel
