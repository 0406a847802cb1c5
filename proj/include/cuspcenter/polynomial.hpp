#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cuspcenter/cyclotomic.hpp"
#include "cuspcenter/number.hpp"

namespace cuspcenter {

/// Dense univariate polynomial, coefficients low to high. The zero
/// polynomial has no coefficients; otherwise the leading one is nonzero.
template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// Y - root.
    static Polynomial linear(const T& root) { return Polynomial({-root, T(1)}); }
    static Polynomial constant(const T& c) { return Polynomial({c}); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<T>& coeffs() const { return coeffs_; }

    T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

    /// Horner evaluation at any ring element U supporting U * U, U + T.
    template <typename U>
    U operator()(const U& x) const
    {
        U acc = U(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + U(*it);
        return acc;
    }

    Polynomial derivative() const
    {
        std::vector<T> d;
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d.push_back(coeffs_[k] * T(static_cast<long>(k)));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < c.size(); ++k)
            c[k] = a.coeff(k) + b.coeff(k);
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b)
    {
        std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < c.size(); ++k)
            c[k] = a.coeff(k) - b.coeff(k);
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<T> coeffs_;

    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == T(0))
            coeffs_.pop_back();
    }
};

/// Polynomial with rational coefficients; the carrier for m(Y), m_i(Y),
/// orbit-sum expressions h(Y) and the gamma certificates.
using IntPolynomial = Polynomial<Rational>;
using CycPolynomial = Polynomial<CyclotomicNumber>;

/// Quotient and remainder of a by a monic (or unit-leading) divisor b.
std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

bool has_integer_coefficients(const IntPolynomial& p);
bool is_ell_integral(const IntPolynomial& p, std::int64_t ell);

/// Converts a polynomial over Q(zeta) whose coefficients are all rational.
/// Throws IntegralityFailure otherwise.
IntPolynomial to_rational_polynomial(const CycPolynomial& p);

/// Human-readable form in the variable `var`, highest degree first.
std::string to_string(const IntPolynomial& p, const std::string& var = "Y");

}  // namespace cuspcenter
