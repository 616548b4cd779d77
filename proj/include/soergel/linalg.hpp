#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace soergel {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix transpose() const;
    /// Columns [from, to).
    IntMatrix columns(std::size_t from, std::size_t to) const;
    /// Horizontal concatenation [this | o].
    IntMatrix hcat(const IntMatrix& o) const;
    std::vector<mpz_class> column(std::size_t c) const;

    static IntMatrix identity(std::size_t n);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// Nonzero diagonal entries of the Smith normal form, positive and in divisibility order.
std::vector<mpz_class> smith_invariants(IntMatrix a);

std::size_t integer_rank(const IntMatrix& a);

/// Column echelon form H = A V with V unimodular. The first `rank` columns of H are
/// nonzero with strictly increasing pivot rows; the remaining columns are zero.
struct ColumnEchelon {
    IntMatrix h;
    IntMatrix v;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};
ColumnEchelon column_echelon(const IntMatrix& a);

/// Columns form a Z-basis of the (saturated) kernel lattice.
IntMatrix kernel_basis(const IntMatrix& a);
/// Columns form a Z-basis of the image lattice.
IntMatrix image_basis(const IntMatrix& a);
/// Integral solution of A x = b, if one exists.
std::optional<std::vector<mpz_class>> solve_integral(const IntMatrix& a, const std::vector<mpz_class>& b);
bool in_image(const IntMatrix& a, const std::vector<mpz_class>& b);

/// Invariants of the quotient lattice span(n_basis) / span(d_gens); d_gens must lie in
/// span(n_basis), and n_basis must have independent columns.
struct QuotientInvariants {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;
};
QuotientInvariants quotient_invariants(const IntMatrix& n_basis, const IntMatrix& d_gens);

/// Rank of a matrix over F_p (entries reduced mod p).
std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p);

}  // namespace soergel
