#include "cuspcenter/linear_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace cuspcenter {

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix shape mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

namespace {

// Reduced row echelon form in place over the first `pivot_cols` columns;
// returns the pivot column of each pivot row and the sign of the row swaps.
struct Echelon {
    std::vector<std::size_t> pivots;
    int swap_sign = 1;
};

Echelon row_reduce(RationalMatrix& m, std::size_t pivot_cols)
{
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(sel, j), m(row, j));
            e.swap_sign = -e.swap_sign;
        }
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= factor * m(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

Rational RationalMatrix::determinant() const
{
    if (rows_ != cols_)
        throw std::invalid_argument("determinant of a non-square matrix");
    RationalMatrix m = *this;
    Rational det = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t sel = col;
        while (sel < rows_ && m(sel, col) == 0)
            ++sel;
        if (sel == rows_)
            return 0;
        if (sel != col) {
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(m(sel, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        const Rational inv = 1 / m(col, col);
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (m(i, col) == 0)
                continue;
            const Rational factor = m(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j)
                m(i, j) -= factor * m(col, j);
        }
    }
    return det;
}

std::size_t RationalMatrix::rank() const
{
    RationalMatrix m = *this;
    return row_reduce(m, cols_).pivots.size();
}

std::optional<RationalMatrix> RationalMatrix::inverse() const
{
    if (rows_ != cols_)
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = (*this)(i, j);
        aug(i, n + i) = 1;
    }
    if (row_reduce(aug, n).pivots.size() != n)
        return std::nullopt;
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& b) const
{
    if (b.size() != rows_)
        throw std::invalid_argument("right-hand side has the wrong length");
    RationalMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    const Echelon e = row_reduce(aug, cols_);
    for (std::size_t i = e.pivots.size(); i < rows_; ++i)
        if (aug(i, cols_) != 0)
            return std::nullopt;
    std::vector<Rational> x(cols_);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        x[e.pivots[i]] = aug(i, cols_);
    return x;
}

}  // namespace cuspcenter
