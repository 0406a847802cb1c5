#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cuspcenter/number.hpp"

namespace cuspcenter {

/// Exact element of Q(zeta_{ell^level}) in the power basis
/// 1, zeta, ..., zeta^{phi(ell^level) - 1}, always reduced modulo the
/// cyclotomic polynomial Phi_{ell^level}.
///
/// Level 0 is Q itself; such elements may carry ell == 0 ("any prime").
/// Binary operations embed the lower level into the higher one
/// (zeta_i = zeta_j^{ell^{j-i}}) before operating.
class CyclotomicNumber {
public:
    CyclotomicNumber() : coeffs_(1) {}
    CyclotomicNumber(const Rational& value) : coeffs_{value} {}  // NOLINT: implicit from Q
    CyclotomicNumber(long value) : coeffs_{Rational(value)} {}   // NOLINT
    CyclotomicNumber(int value) : coeffs_{Rational(value)} {}    // NOLINT

    /// Element with the given power-basis coefficients (length must equal
    /// phi(ell^level)).
    CyclotomicNumber(std::int64_t ell, int level, std::vector<Rational> coeffs);

    /// zeta_{ell^level}^exponent, exponent taken modulo ell^level.
    static CyclotomicNumber zeta_power(std::int64_t ell, int level, std::int64_t exponent);

    std::int64_t ell() const { return ell_; }
    int level() const { return level_; }
    std::span<const Rational> coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Constant coefficient; only meaningful when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    /// Same number viewed in Q(zeta_{ell^target}); target >= level().
    CyclotomicNumber embed(std::int64_t ell, int target) const;

    /// Field norm down to Q, as the determinant of multiplication-by-this.
    Rational norm() const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& other);
    CyclotomicNumber& operator-=(const CyclotomicNumber& other);
    CyclotomicNumber& operator*=(const CyclotomicNumber& other);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator-(const CyclotomicNumber& a);

    CyclotomicNumber pow(unsigned exponent) const;

    /// Multiplicative inverse. Throws ZeroArgument on zero.
    CyclotomicNumber inverse() const;

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

    /// Total order on the power-basis coefficient vectors (after embedding);
    /// only meant for deterministic sorting.
    friend bool operator<(const CyclotomicNumber& a, const CyclotomicNumber& b);

    std::string to_string() const;

private:
    std::int64_t ell_ = 0;
    int level_ = 0;
    std::vector<Rational> coeffs_;

    static void align(CyclotomicNumber& a, CyclotomicNumber& b);
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x);

/// phi(ell^level): dimension of Q(zeta_{ell^level}) over Q.
std::int64_t cyclotomic_degree(std::int64_t ell, int level);

/// Valuation of x normalised so that nu(zeta_{ell^i} - 1) = 1 at the level
/// of x (so nu(ell) = phi(ell^i)). Computed as ord_ell of the norm, which is
/// valid because ell is totally ramified in Q(zeta_{ell^i}). At level 0 this
/// is the plain ord_ell. Throws ZeroArgument for x == 0.
long ell_valuation(const CyclotomicNumber& x, std::int64_t ell);

/// Same, for x viewed at the given level (>= x.level()).
long ell_valuation_at_level(const CyclotomicNumber& x, std::int64_t ell, int level);

}  // namespace cuspcenter
