#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cuspcenter/number.hpp"

namespace cuspcenter {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix transpose() const;
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    Rational determinant() const;
    std::size_t rank() const;

    /// Inverse of a square matrix, nullopt when singular.
    std::optional<RationalMatrix> inverse() const;

    /// Some solution x of A x = b (free variables set to zero), or nullopt
    /// when the system is inconsistent. Works for any shape.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace cuspcenter
