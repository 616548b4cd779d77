#include "soergel/bimodule.hpp"

#include <bit>
#include <sstream>

namespace soergel {

BSBimodule::BSBimodule(std::size_t strands, std::vector<int> word, const CoeffRing& ring, int q_shift)
    : n_(strands), word_(std::move(word)), ring_(ring), q_shift_(q_shift)
{
    if (strands == 0 || strands > kMaxStrands)
        throw std::invalid_argument("strand count must be in 1.." + std::to_string(kMaxStrands));
    for (int letter : word_)
        if (letter < 1 || static_cast<std::size_t>(letter) >= n_)
            throw std::out_of_range("letter " + std::to_string(letter) + " out of range for " +
                                    std::to_string(n_) + " strands");
    if (word_.size() > 16)
        throw std::invalid_argument("Bott-Samelson words longer than 16 letters are not supported");

    auto mats = std::make_shared<std::vector<LeftMatrix>>();
    const std::size_t r = rank();
    for (std::size_t j = 1; j <= n_; ++j) {
        LeftMatrix m(r, std::vector<MultiPoly>(r, zero_poly()));
        for (std::size_t s = 0; s < r; ++s) {
            auto factors = basis_factors(s);
            factors.back() *= MultiPoly::x(n_, ring_, j);
            BSElement col = normal_form(std::move(factors));
            for (std::size_t t = 0; t < r; ++t)
                m[t][s] = std::move(col[t]);
        }
        mats->push_back(std::move(m));
    }
    right_y_ = std::move(mats);
}

BSBimodule make_bs(const std::vector<int>& word, std::size_t strands, const CoeffRing& ring)
{
    return BSBimodule(strands, word, ring, 0);
}

int BSBimodule::basis_degree(std::size_t subset) const
{
    return 2 * std::popcount(subset) + q_shift_;
}

BSBimodule BSBimodule::shifted(int extra) const
{
    BSBimodule r = *this;
    r.q_shift_ += extra;
    return r;
}

BSElement BSBimodule::zero() const { return BSElement(rank(), zero_poly()); }

BSElement BSBimodule::basis(std::size_t subset) const
{
    BSElement e = zero();
    e.at(subset) = MultiPoly::constant(n_, ring_, 1);
    return e;
}

std::vector<MultiPoly> BSBimodule::basis_factors(std::size_t subset) const
{
    std::vector<MultiPoly> f(word_.size() + 1, MultiPoly::constant(n_, ring_, 1));
    for (std::size_t t = 1; t <= word_.size(); ++t)
        if (subset & (std::size_t{1} << (t - 1)))
            f[t] = MultiPoly::x(n_, ring_, static_cast<std::size_t>(word_[t - 1]));
    return f;
}

void BSBimodule::nf_rec(std::size_t t, std::vector<MultiPoly>& factors, std::size_t bits,
                        BSElement& out) const
{
    if (factors[t].is_zero())
        return;
    if (t == 0) {
        out[bits] += factors[0];
        return;
    }
    const auto letter = static_cast<std::size_t>(word_[t - 1]);
    // f = (f - x_i d_i f) + x_i d_i f with both coefficients s_i-invariant
    MultiPoly f = factors[t];
    MultiPoly b = demazure(letter, f);
    MultiPoly a = f - MultiPoly::x(n_, ring_, letter) * b;
    MultiPoly saved = factors[t - 1];
    if (!a.is_zero()) {
        factors[t - 1] = saved * a;
        nf_rec(t - 1, factors, bits, out);
    }
    if (!b.is_zero()) {
        factors[t - 1] = saved * b;
        nf_rec(t - 1, factors, bits | (std::size_t{1} << (t - 1)), out);
    }
    factors[t - 1] = std::move(saved);
}

BSElement BSBimodule::normal_form(std::vector<MultiPoly> factors) const
{
    if (factors.size() != word_.size() + 1)
        throw std::invalid_argument("pure tensor needs one factor per tensor position");
    for (const auto& f : factors)
        if (f.uses_y())
            throw std::invalid_argument("pure tensor factors are written in X variables");
    BSElement out = zero();
    nf_rec(word_.size(), factors, 0, out);
    return out;
}

const LeftMatrix& BSBimodule::right_y(std::size_t j) const
{
    if (j < 1 || j > n_)
        throw std::out_of_range("Y index out of range");
    return (*right_y_)[j - 1];
}

namespace {

BSElement apply_matrix(const LeftMatrix& m, const BSElement& v, const MultiPoly& zero)
{
    BSElement out(m.size(), zero);
    for (std::size_t t = 0; t < m.size(); ++t)
        for (std::size_t s = 0; s < v.size(); ++s)
            if (!m[t][s].is_zero() && !v[s].is_zero())
                out[t] += m[t][s] * v[s];
    return out;
}

}  // namespace

BSElement BSBimodule::right_action(const BSElement& elem, const MultiPoly& g) const
{
    if (g.uses_x())
        throw std::invalid_argument("right action takes a polynomial in Y variables");
    BSElement out = zero();
    for (const auto& [mono, c] : g.terms()) {
        BSElement v = elem;
        for (std::size_t j = 1; j <= n_; ++j)
            for (unsigned e = 0; e < mono.exp[y_slot(n_, j)]; ++e)
                v = apply_matrix(right_y(j), v, zero_poly());
        for (std::size_t s = 0; s < v.size(); ++s)
            if (!v[s].is_zero())
                out[s] += v[s].scaled(c);
    }
    return out;
}

BSElement BSBimodule::left_action(const MultiPoly& f, const BSElement& elem) const
{
    if (f.uses_y())
        throw std::invalid_argument("left action takes a polynomial in X variables");
    BSElement out = zero();
    for (std::size_t s = 0; s < elem.size(); ++s)
        if (!elem[s].is_zero())
            out[s] = f * elem[s];
    return out;
}

BSElement BSBimodule::act(const MultiPoly& f, const BSElement& elem) const
{
    BSElement out = zero();
    for (const auto& [mono, c] : f.terms()) {
        Monomial xm, ym;
        for (std::size_t i = 0; i < n_; ++i) {
            xm.exp[i] = mono.exp[i];
            ym.exp[n_ + i] = mono.exp[n_ + i];
        }
        BSElement v = right_action(elem, MultiPoly::monomial(n_, ring_, ym));
        for (std::size_t s = 0; s < v.size(); ++s)
            if (!v[s].is_zero())
                out[s] += v[s].times_monomial(xm).scaled(c);
    }
    return out;
}

BSElement BSBimodule::multiply(const BSElement& a, const BSElement& b) const
{
    BSElement out = zero();
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (a[s].is_zero())
            continue;
        auto fs = basis_factors(s);
        for (std::size_t t = 0; t < b.size(); ++t) {
            if (b[t].is_zero())
                continue;
            auto ft = basis_factors(t);
            std::vector<MultiPoly> prod(fs.size(), zero_poly());
            for (std::size_t p = 0; p < fs.size(); ++p)
                prod[p] = fs[p] * ft[p];
            BSElement e = normal_form(std::move(prod));
            MultiPoly c = a[s] * b[t];
            for (std::size_t u = 0; u < e.size(); ++u)
                if (!e[u].is_zero())
                    out[u] += c * e[u];
        }
    }
    return out;
}

BSElement right_action_normal_form(const BSBimodule& m, const BSElement& elem, const MultiPoly& g)
{
    return m.right_action(elem, g);
}

BSBimodule tensor_bimodules(const BSBimodule& m, const BSBimodule& n)
{
    if (m.strands() != n.strands())
        throw std::invalid_argument("strand mismatch in tensor product");
    if (m.ring() != n.ring())
        throw CoefficientError("coefficient mismatch in tensor product");
    std::vector<int> word = m.word();
    word.insert(word.end(), n.word().begin(), n.word().end());
    return BSBimodule(m.strands(), std::move(word), m.ring(), m.q_shift() + n.q_shift());
}

BimoduleMap::BimoduleMap(BSBimodule source, BSBimodule target, LeftMatrix matrix, int degree)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)), degree_(degree)
{
    if (matrix_.size() != target_.rank())
        throw std::invalid_argument("map matrix row count must equal target rank");
    for (const auto& row : matrix_)
        if (row.size() != source_.rank())
            throw std::invalid_argument("map matrix column count must equal source rank");
}

BimoduleMap BimoduleMap::identity(const BSBimodule& m)
{
    LeftMatrix mat(m.rank(), std::vector<MultiPoly>(m.rank(), m.zero_poly()));
    for (std::size_t s = 0; s < m.rank(); ++s)
        mat[s][s] = MultiPoly::constant(m.strands(), m.ring(), 1);
    return BimoduleMap(m, m, std::move(mat), 0);
}

BimoduleMap BimoduleMap::zero(const BSBimodule& source, const BSBimodule& target, int degree)
{
    LeftMatrix mat(target.rank(), std::vector<MultiPoly>(source.rank(), source.zero_poly()));
    return BimoduleMap(source, target, std::move(mat), degree);
}

BSElement BimoduleMap::apply(const BSElement& v) const
{
    if (v.size() != source_.rank())
        throw std::invalid_argument("element does not belong to the map source");
    return apply_matrix(matrix_, v, target_.zero_poly());
}

BimoduleMap BimoduleMap::compose(const BimoduleMap& other) const
{
    if (!(other.target_.word() == source_.word()) || other.target_.strands() != source_.strands())
        throw std::invalid_argument("composition of incompatible maps");
    LeftMatrix mat(target_.rank(), std::vector<MultiPoly>(other.source_.rank(), source_.zero_poly()));
    for (std::size_t t = 0; t < target_.rank(); ++t)
        for (std::size_t m = 0; m < source_.rank(); ++m) {
            if (matrix_[t][m].is_zero())
                continue;
            for (std::size_t s = 0; s < other.source_.rank(); ++s)
                if (!other.matrix_[m][s].is_zero())
                    mat[t][s] += matrix_[t][m] * other.matrix_[m][s];
        }
    return BimoduleMap(other.source_, target_, std::move(mat), degree_ + other.degree_);
}

BimoduleMap BimoduleMap::scaled(long c) const
{
    LeftMatrix mat = matrix_;
    for (auto& row : mat)
        for (auto& e : row)
            e = e.scaled(mpq_class(c));
    return BimoduleMap(source_, target_, std::move(mat), degree_);
}

bool BimoduleMap::is_zero() const
{
    for (const auto& row : matrix_)
        for (const auto& e : row)
            if (!e.is_zero())
                return false;
    return true;
}

bool BimoduleMap::is_bimodule_map() const
{
    for (std::size_t j = 1; j <= source_.strands(); ++j) {
        const auto& ys = source_.right_y(j);
        const auto& yt = target_.right_y(j);
        for (std::size_t t = 0; t < target_.rank(); ++t)
            for (std::size_t s = 0; s < source_.rank(); ++s) {
                MultiPoly lhs = source_.zero_poly(), rhs = source_.zero_poly();
                for (std::size_t m = 0; m < source_.rank(); ++m)
                    if (!matrix_[t][m].is_zero() && !ys[m][s].is_zero())
                        lhs += matrix_[t][m] * ys[m][s];
                for (std::size_t m = 0; m < target_.rank(); ++m)
                    if (!yt[t][m].is_zero() && !matrix_[m][s].is_zero())
                        rhs += yt[t][m] * matrix_[m][s];
                if (lhs != rhs)
                    return false;
            }
    }
    return true;
}

bool BimoduleMap::is_homogeneous() const
{
    for (std::size_t t = 0; t < target_.rank(); ++t)
        for (std::size_t s = 0; s < source_.rank(); ++s) {
            const auto& e = matrix_[t][s];
            if (e.is_zero())
                continue;
            int want = source_.basis_degree(s) + degree_ - target_.basis_degree(t);
            if (!e.is_homogeneous() || e.degree() != want)
                return false;
        }
    return true;
}

BimoduleMap tensor_maps(const BimoduleMap& f, const BimoduleMap& g)
{
    return tensor_maps(f, g, tensor_bimodules(f.source(), g.source()), tensor_bimodules(f.target(), g.target()));
}

BimoduleMap tensor_maps(const BimoduleMap& f, const BimoduleMap& g, BSBimodule src, BSBimodule tgt)
{
    auto concat = [](const BSBimodule& a, const BSBimodule& b) {
        std::vector<int> w = a.word();
        w.insert(w.end(), b.word().begin(), b.word().end());
        return w;
    };
    if (src.word() != concat(f.source(), g.source()) || tgt.word() != concat(f.target(), g.target()) ||
        src.q_shift() != f.source().q_shift() + g.source().q_shift() ||
        tgt.q_shift() != f.target().q_shift() + g.target().q_shift())
        throw std::invalid_argument("tensor_maps: supplied bimodules are not the tensor products");
    LeftMatrix mat(tgt.rank(), std::vector<MultiPoly>(src.rank(), src.zero_poly()));
    const auto& ft = f.target();
    for (std::size_t s = 0; s < f.source().rank(); ++s) {
        BSElement u = f.apply(f.source().basis(s));
        for (std::size_t t = 0; t < g.source().rank(); ++t)
            for (std::size_t t2 = 0; t2 < g.target().rank(); ++t2) {
                const MultiPoly& c = g.matrix()[t2][t];
                if (c.is_zero())
                    continue;
                BSElement w = ft.right_action(u, c.x_to_y());
                for (std::size_t s2 = 0; s2 < ft.rank(); ++s2)
                    if (!w[s2].is_zero())
                        mat[tensor_index(ft, s2, t2)][tensor_index(f.source(), s, t)] += w[s2];
            }
    }
    return BimoduleMap(std::move(src), std::move(tgt), std::move(mat), f.degree() + g.degree());
}

BimoduleMap counit_br(std::size_t i, std::size_t strands, const CoeffRing& ring)
{
    BSBimodule b(strands, {static_cast<int>(i)}, ring);
    BSBimodule r(strands, {}, ring);
    LeftMatrix mat(1, std::vector<MultiPoly>(2, r.zero_poly()));
    mat[0][0] = MultiPoly::constant(strands, ring, 1);
    mat[0][1] = MultiPoly::x(strands, ring, i);
    return BimoduleMap(b, r, std::move(mat), 0);
}

BSElement unitary_thom_element(const BSBimodule& bi)
{
    if (bi.length() != 1)
        throw std::invalid_argument("Thom element lives in a single-letter bimodule");
    auto i = static_cast<std::size_t>(bi.word()[0]);
    const auto n = bi.strands();
    BSElement e = bi.left_action(MultiPoly::x(n, bi.ring(), i), bi.basis(0));
    return sub(e, bi.right_action(bi.basis(0), MultiPoly::y(n, bi.ring(), i + 1)));
}

BSElement adjoint_thom_element(const BSBimodule& bi)
{
    if (!bi.ring().inverts(2))
        throw CoefficientError("the adjoint Thom class needs 2 inverted; ring is " + bi.ring().name());
    if (bi.length() != 1)
        throw std::invalid_argument("Thom element lives in a single-letter bimodule");
    auto i = static_cast<std::size_t>(bi.word()[0]);
    const auto n = bi.strands();
    const auto& ring = bi.ring();
    MultiPoly ax = MultiPoly::x(n, ring, i) - MultiPoly::x(n, ring, i + 1);
    MultiPoly ay = MultiPoly::y(n, ring, i) - MultiPoly::y(n, ring, i + 1);
    BSElement e = add(bi.left_action(ax, bi.basis(0)), bi.right_action(bi.basis(0), ay));
    return scale(e, mpq_class(1, 2));
}

BimoduleMap unit_rb(std::size_t i, std::size_t strands, const CoeffRing& ring, int target_shift)
{
    BSBimodule r(strands, {}, ring);
    BSBimodule b(strands, {static_cast<int>(i)}, ring, target_shift);
    BSElement th = unitary_thom_element(b);
    LeftMatrix mat(2, std::vector<MultiPoly>(1, r.zero_poly()));
    mat[0][0] = th[0];
    mat[1][0] = th[1];
    return BimoduleMap(r, b, std::move(mat), 2 + target_shift);
}

bool elements_equal(const BSElement& a, const BSElement& b) { return a == b; }

BSElement add(const BSElement& a, const BSElement& b)
{
    BSElement r = a;
    for (std::size_t s = 0; s < r.size(); ++s)
        r[s] += b.at(s);
    return r;
}

BSElement sub(const BSElement& a, const BSElement& b)
{
    BSElement r = a;
    for (std::size_t s = 0; s < r.size(); ++s)
        r[s] -= b.at(s);
    return r;
}

BSElement scale(const BSElement& a, const mpq_class& c)
{
    BSElement r = a;
    for (auto& e : r)
        e = e.scaled(c);
    return r;
}

bool is_zero(const BSElement& a)
{
    for (const auto& e : a)
        if (!e.is_zero())
            return false;
    return true;
}

std::string element_str(const BSElement& a)
{
    std::ostringstream os;
    bool any = false;
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (a[s].is_zero())
            continue;
        if (any)
            os << " + ";
        os << "(" << a[s].str() << ")*e{";
        bool first = true;
        for (std::size_t b = 0; (std::size_t{1} << b) <= s; ++b)
            if (s & (std::size_t{1} << b)) {
                os << (first ? "" : ",") << b + 1;
                first = false;
            }
        os << "}";
        any = true;
    }
    return any ? os.str() : "0";
}

}  // namespace soergel
