#include "cuspcenter/polynomial.hpp"

#include <stdexcept>

#include "cuspcenter/errors.hpp"

namespace cuspcenter {

std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db)
        return {IntPolynomial(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational lead = b.coeffs().back();
    for (int k = a.degree(); k >= db; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] / lead;
        quot[static_cast<std::size_t>(k - db)] = c;
        if (c == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial gcd(IntPolynomial a, IntPolynomial b)
{
    while (!b.is_zero()) {
        IntPolynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    const Rational lead = a.coeffs().back();
    std::vector<Rational> c = a.coeffs();
    for (auto& x : c)
        x /= lead;
    return IntPolynomial(std::move(c));
}

bool has_integer_coefficients(const IntPolynomial& p)
{
    for (const auto& c : p.coeffs())
        if (c.get_den() != 1)
            return false;
    return true;
}

bool is_ell_integral(const IntPolynomial& p, std::int64_t ell)
{
    for (const auto& c : p.coeffs())
        if (!is_p_integral(c, ell))
            return false;
    return true;
}

IntPolynomial to_rational_polynomial(const CycPolynomial& p)
{
    std::vector<Rational> c;
    for (const auto& x : p.coeffs()) {
        if (!x.is_rational())
            throw IntegralityFailure("coefficient " + x.to_string() + " is not rational");
        c.push_back(x.rational_part());
    }
    return IntPolynomial(std::move(c));
}

std::string to_string(const IntPolynomial& p, const std::string& var)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        const Rational mag = abs(c);
        if (k == 0 || mag != 1) {
            os << mag;
            if (k > 0)
                os << "*";
        }
        if (k > 0) {
            os << var;
            if (k > 1)
                os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace cuspcenter
