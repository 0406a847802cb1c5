#include "cuspcenter/cyclotomic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cuspcenter/errors.hpp"
#include "cuspcenter/linear_algebra.hpp"

namespace cuspcenter {

std::int64_t cyclotomic_degree(std::int64_t ell, int level)
{
    return phi_prime_power(ell, level);
}

namespace {

// Reduce a coefficient vector of length <= ell^level (a class modulo
// X^{ell^level} - 1) modulo Phi_{ell^level}, in place, down to phi entries.
// Uses X^phi = -(1 + X^s + ... + X^{(ell-2)s}) with s = ell^{level-1}.
void reduce_mod_cyclotomic(std::vector<Rational>& c, std::int64_t ell, int level)
{
    const std::int64_t phi = cyclotomic_degree(ell, level);
    if (level == 0) {
        Rational total = 0;
        for (const auto& x : c)
            total += x;
        c.assign(1, total);
        return;
    }
    const std::int64_t step = phi / (ell - 1);
    for (std::int64_t k = static_cast<std::int64_t>(c.size()) - 1; k >= phi; --k) {
        if (c[k] == 0)
            continue;
        const Rational v = c[k];
        c[k] = 0;
        for (std::int64_t j = 0; j <= ell - 2; ++j)
            c[k - phi + j * step] -= v;
    }
    c.resize(static_cast<std::size_t>(phi));
}

}  // namespace

CyclotomicNumber::CyclotomicNumber(std::int64_t ell, int level, std::vector<Rational> coeffs)
    : ell_(ell), level_(level), coeffs_(std::move(coeffs))
{
    if (level < 0 || (level > 0 && ell < 2))
        throw std::invalid_argument("invalid cyclotomic level");
    if (static_cast<std::int64_t>(coeffs_.size()) != cyclotomic_degree(ell, level))
        throw std::invalid_argument("coefficient vector length must be phi(ell^level)");
}

CyclotomicNumber CyclotomicNumber::zeta_power(std::int64_t ell, int level, std::int64_t exponent)
{
    if (level == 0)
        return CyclotomicNumber(Rational(1));
    const std::int64_t order = ipow64(ell, static_cast<unsigned>(level));
    std::int64_t e = exponent % order;
    if (e < 0)
        e += order;
    std::vector<Rational> c(static_cast<std::size_t>(order));
    c[static_cast<std::size_t>(e)] = 1;
    reduce_mod_cyclotomic(c, ell, level);
    CyclotomicNumber out;
    out.ell_ = ell;
    out.level_ = level;
    out.coeffs_ = std::move(c);
    return out;
}

bool CyclotomicNumber::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return x == 0; });
}

bool CyclotomicNumber::is_rational() const
{
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& x) { return x == 0; });
}

CyclotomicNumber CyclotomicNumber::embed(std::int64_t ell, int target) const
{
    if (target < level_)
        throw std::invalid_argument("cannot embed into a lower level");
    if (level_ > 0 && ell != ell_)
        throw std::invalid_argument("embedding across different primes");
    if (target == level_ && (level_ > 0 || ell_ == ell))
        return *this;
    const std::int64_t phi = cyclotomic_degree(ell, target);
    std::vector<Rational> c(static_cast<std::size_t>(phi));
    if (level_ == 0) {
        c[0] = coeffs_[0];
    } else {
        const std::int64_t stride = ipow64(ell, static_cast<unsigned>(target - level_));
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            c[k * static_cast<std::size_t>(stride)] = coeffs_[k];
    }
    CyclotomicNumber out;
    out.ell_ = ell;
    out.level_ = target;
    out.coeffs_ = std::move(c);
    return out;
}

void CyclotomicNumber::align(CyclotomicNumber& a, CyclotomicNumber& b)
{
    if (a.level_ > 0 && b.level_ > 0 && a.ell_ != b.ell_)
        throw std::invalid_argument("arithmetic across different primes");
    const std::int64_t ell = a.ell_ != 0 ? a.ell_ : b.ell_;
    const int level = std::max(a.level_, b.level_);
    if (a.level_ != level)
        a = a.embed(ell, level);
    if (b.level_ != level)
        b = b.embed(ell, level);
    a.ell_ = b.ell_ = ell;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& other)
{
    CyclotomicNumber b = other;
    align(*this, b);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += b.coeffs_[k];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& other)
{
    CyclotomicNumber b = other;
    align(*this, b);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= b.coeffs_[k];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& other)
{
    CyclotomicNumber b = other;
    align(*this, b);
    if (level_ == 0) {
        coeffs_[0] *= b.coeffs_[0];
        return *this;
    }
    const std::size_t n = coeffs_.size();
    std::vector<Rational> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (b.coeffs_[j] != 0)
                prod[i + j] += coeffs_[i] * b.coeffs_[j];
    }
    reduce_mod_cyclotomic(prod, ell_, level_);
    coeffs_ = std::move(prod);
    return *this;
}

CyclotomicNumber operator-(const CyclotomicNumber& a)
{
    CyclotomicNumber out = a;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

CyclotomicNumber CyclotomicNumber::pow(unsigned exponent) const
{
    CyclotomicNumber result = CyclotomicNumber(Rational(1)).embed(ell_, level_);
    CyclotomicNumber base = *this;
    while (exponent > 0) {
        if (exponent & 1U)
            result *= base;
        exponent >>= 1U;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

namespace {

RationalMatrix multiplication_matrix(const CyclotomicNumber& x)
{
    const std::size_t n = x.coeffs().size();
    RationalMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const CyclotomicNumber col = x * CyclotomicNumber::zeta_power(x.ell(), x.level(), static_cast<std::int64_t>(k));
        for (std::size_t i = 0; i < n; ++i)
            m(i, k) = col.coeffs()[i];
    }
    return m;
}

}  // namespace

Rational CyclotomicNumber::norm() const
{
    if (level_ == 0)
        return coeffs_[0];
    return multiplication_matrix(*this).determinant();
}

CyclotomicNumber CyclotomicNumber::inverse() const
{
    if (is_zero())
        throw ZeroArgument("inverse of zero");
    if (level_ == 0)
        return CyclotomicNumber(1 / coeffs_[0]);
    const RationalMatrix m = multiplication_matrix(*this);
    std::vector<Rational> e1(coeffs_.size());
    e1[0] = 1;
    auto sol = m.solve(e1);
    return CyclotomicNumber(ell_, level_, std::move(*sol));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    if (a.level_ == b.level_)
        return a.coeffs_ == b.coeffs_;
    CyclotomicNumber x = a, y = b;
    CyclotomicNumber::align(x, y);
    return x.coeffs_ == y.coeffs_;
}

bool operator<(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    CyclotomicNumber x = a, y = b;
    CyclotomicNumber::align(x, y);
    return std::lexicographical_compare(x.coeffs_.begin(), x.coeffs_.end(), y.coeffs_.begin(), y.coeffs_.end());
}

std::string CyclotomicNumber::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0)
            continue;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        const Rational mag = abs(c);
        if (k == 0)
            os << mag;
        else {
            if (mag != 1)
                os << mag << "*";
            os << "z";
            if (k > 1)
                os << "^" << k;
        }
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x)
{
    return os << x.to_string();
}

long ell_valuation_at_level(const CyclotomicNumber& x, std::int64_t ell, int level)
{
    if (x.is_zero())
        throw ZeroArgument("valuation of zero");
    const CyclotomicNumber y = x.embed(ell, level);
    return ord_p(y.norm(), ell);
}

long ell_valuation(const CyclotomicNumber& x, std::int64_t ell)
{
    return ell_valuation_at_level(x, ell, x.level());
}

}  // namespace cuspcenter
