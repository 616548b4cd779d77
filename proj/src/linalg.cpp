#include "soergel/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace soergel {

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const mpz_class& v) { return sgn(v) == 0; });
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = (*this)(i, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (sgn(o(k, j)) != 0)
                    r(i, j) += a * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::columns(std::size_t from, std::size_t to) const
{
    IntMatrix r(rows_, to - from);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = from; j < to; ++j)
            r(i, j - from) = (*this)(i, j);
    return r;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const
{
    if (rows_ != o.rows_)
        throw std::invalid_argument("IntMatrix: row mismatch in hcat");
    IntMatrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            r(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j)
            r(i, cols_ + j) = o(i, j);
    }
    return r;
}

std::vector<mpz_class> IntMatrix::column(std::size_t c) const
{
    std::vector<mpz_class> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, c);
    return v;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        r(i, i) = 1;
    return r;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t r = 0; r < a.rows(); ++r)
        std::swap(a(r, i), a(r, j));
}

// (col_i, col_j) <- (s col_i + t col_j, u col_i + v col_j)
void mix_cols(IntMatrix& a, std::size_t i, std::size_t j, const mpz_class& s, const mpz_class& t,
              const mpz_class& u, const mpz_class& v)
{
    for (std::size_t r = 0; r < a.rows(); ++r) {
        mpz_class x = a(r, i), y = a(r, j);
        if (sgn(x) == 0 && sgn(y) == 0)
            continue;
        a(r, i) = s * x + t * y;
        a(r, j) = u * x + v * y;
    }
}

void echelon_impl(IntMatrix& h, IntMatrix* v, std::size_t& rank, std::vector<std::size_t>& pivots)
{
    const std::size_t rows = h.rows(), cols = h.cols();
    std::size_t c = 0;
    for (std::size_t r = 0; r < rows && c < cols; ++r) {
        for (std::size_t j = c + 1; j < cols; ++j) {
            if (sgn(h(r, j)) == 0)
                continue;
            if (sgn(h(r, c)) == 0) {
                swap_cols(h, c, j);
                if (v)
                    swap_cols(*v, c, j);
                continue;
            }
            mpz_class a = h(r, c), b = h(r, j);
            if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
                mpz_class q = b / a;
                mix_cols(h, c, j, 1, 0, -q, 1);
                if (v)
                    mix_cols(*v, c, j, 1, 0, -q, 1);
                continue;
            }
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_class u = -b / g, w = a / g;
            mix_cols(h, c, j, s, t, u, w);
            if (v)
                mix_cols(*v, c, j, s, t, u, w);
        }
        if (sgn(h(r, c)) == 0)
            continue;
        if (sgn(h(r, c)) < 0) {
            mix_cols(h, c, c, -1, 0, 0, -1);
            if (v)
                mix_cols(*v, c, c, -1, 0, 0, -1);
        }
        pivots.push_back(r);
        ++c;
    }
    rank = c;
}

}  // namespace

std::vector<mpz_class> smith_invariants(IntMatrix a)
{
    std::vector<mpz_class> diag;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        bool found = false;
        std::size_t pr = 0, pc = 0;
        mpz_class best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (sgn(a(i, j)) != 0 && (!found || abs(a(i, j)) < best)) {
                    best = abs(a(i, j));
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found)
            break;
        swap_rows(a, t, pr);
        swap_cols(a, t, pc);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(a(i, t)) == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t j = t; j < cols; ++j)
                    if (sgn(a(t, j)) != 0)
                        a(i, j) -= q * a(t, j);
                if (sgn(a(i, t)) != 0) {
                    swap_rows(a, t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(a(t, j)) == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t i = t; i < rows; ++i)
                    if (sgn(a(i, t)) != 0)
                        a(i, j) -= q * a(i, t);
                if (sgn(a(t, j)) != 0) {
                    swap_cols(a, t, j);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // Enforce divisibility of the remaining block by the pivot.
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        for (std::size_t jj = t; jj < cols; ++jj)
                            a(t, jj) += a(i, jj);
                        clean = false;
                        break;
                    }
        }
        diag.push_back(abs(a(t, t)));
        ++t;
    }
    return diag;
}

std::size_t integer_rank(const IntMatrix& a)
{
    IntMatrix h = a;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    echelon_impl(h, nullptr, rank, pivots);
    return rank;
}

ColumnEchelon column_echelon(const IntMatrix& a)
{
    ColumnEchelon e;
    e.h = a;
    e.v = IntMatrix::identity(a.cols());
    echelon_impl(e.h, &e.v, e.rank, e.pivot_rows);
    return e;
}

IntMatrix kernel_basis(const IntMatrix& a)
{
    auto e = column_echelon(a);
    return e.v.columns(e.rank, a.cols());
}

IntMatrix image_basis(const IntMatrix& a)
{
    auto e = column_echelon(a);
    return e.h.columns(0, e.rank);
}

std::optional<std::vector<mpz_class>> solve_integral(const IntMatrix& a, const std::vector<mpz_class>& b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_integral: dimension mismatch");
    auto e = column_echelon(a);
    std::vector<mpz_class> residual = b;
    std::vector<mpz_class> y(a.cols());
    for (std::size_t c = 0; c < e.rank; ++c) {
        const std::size_t r = e.pivot_rows[c];
        if (sgn(residual[r]) == 0)
            continue;
        if (!mpz_divisible_p(residual[r].get_mpz_t(), e.h(r, c).get_mpz_t()))
            return std::nullopt;
        y[c] = residual[r] / e.h(r, c);
        for (std::size_t i = r; i < a.rows(); ++i)
            if (sgn(e.h(i, c)) != 0)
                residual[i] -= y[c] * e.h(i, c);
    }
    for (const auto& v : residual)
        if (sgn(v) != 0)
            return std::nullopt;
    std::vector<mpz_class> x(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t c = 0; c < e.rank; ++c)
            if (sgn(y[c]) != 0)
                x[i] += e.v(i, c) * y[c];
    return x;
}

bool in_image(const IntMatrix& a, const std::vector<mpz_class>& b)
{
    return solve_integral(a, b).has_value();
}

QuotientInvariants quotient_invariants(const IntMatrix& n_basis, const IntMatrix& d_gens)
{
    QuotientInvariants q;
    const std::size_t dim = n_basis.cols();
    if (dim == 0)
        return q;
    IntMatrix coords(dim, d_gens.cols());
    for (std::size_t c = 0; c < d_gens.cols(); ++c) {
        auto x = solve_integral(n_basis, d_gens.column(c));
        if (!x)
            throw std::logic_error("quotient_invariants: generator outside the ambient lattice");
        for (std::size_t i = 0; i < dim; ++i)
            coords(i, c) = (*x)[i];
    }
    auto inv = smith_invariants(coords);
    q.free_rank = dim - inv.size();
    for (auto& d : inv)
        if (d > 1)
            q.torsion.push_back(d);
    return q;
}

std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p)
{
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::uint64_t> m(rows * cols);
    mpz_class pz(std::to_string(p));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), a(i, j).get_mpz_t(), pz.get_mpz_t());
            m[i * cols + j] = r.get_ui();
        }
    auto inv = [p](std::uint64_t x) {
        std::uint64_t result = 1, base = x % p, e = p - 2;
        while (e) {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (m[i * cols + c]) {
                piv = i;
                break;
            }
        if (piv == rows)
            continue;
        for (std::size_t j = 0; j < cols; ++j)
            std::swap(m[rank * cols + j], m[piv * cols + j]);
        const std::uint64_t iv = inv(m[rank * cols + c]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            std::uint64_t f = m[i * cols + c] * iv % p;
            if (!f)
                continue;
            for (std::size_t j = c; j < cols; ++j)
                m[i * cols + j] = (m[i * cols + j] + (p - f) * m[rank * cols + j]) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace soergel
