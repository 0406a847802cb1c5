#include "cuspcenter/number.hpp"

#include <stdexcept>

#include "cuspcenter/errors.hpp"

namespace cuspcenter {

int ord_p(const BigInt& x, std::int64_t p)
{
    if (x == 0)
        throw ZeroArgument("ord_p of zero");
    BigInt v = abs(x);
    const BigInt bp = static_cast<long>(p);
    int k = 0;
    while (mpz_divisible_p(v.get_mpz_t(), bp.get_mpz_t())) {
        v /= bp;
        ++k;
    }
    return k;
}

int ord_p(const Rational& x, std::int64_t p)
{
    if (x == 0)
        throw ZeroArgument("ord_p of zero");
    return ord_p(BigInt(x.get_num()), p) - ord_p(BigInt(x.get_den()), p);
}

bool is_p_integral(const Rational& x, std::int64_t p)
{
    const BigInt bp = static_cast<long>(p);
    return !mpz_divisible_p(x.get_den_mpz_t(), bp.get_mpz_t());
}

bool is_p_unit(const Rational& x, std::int64_t p)
{
    return x != 0 && ord_p(x, p) == 0;
}

std::int64_t reduce_mod(const Rational& x, std::int64_t m)
{
    const BigInt bm = static_cast<long>(m);
    BigInt den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), x.get_den_mpz_t(), bm.get_mpz_t()) == 0)
        throw std::domain_error("reduce_mod: denominator not invertible");
    BigInt r = BigInt(x.get_num()) * den_inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), bm.get_mpz_t());
    return r.get_si();
}

bool congruent_mod_power(const Rational& x, const Rational& y, std::int64_t p, int k)
{
    if (!is_p_integral(x, p) || !is_p_integral(y, p))
        return false;
    const Rational diff = x - y;
    return diff == 0 || ord_p(diff, p) >= k;
}

BigInt ipow(const BigInt& base, unsigned long exponent)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

std::int64_t ipow64(std::int64_t base, unsigned exponent)
{
    std::int64_t r = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (__builtin_mul_overflow(r, base, &r))
            throw std::overflow_error("ipow64 overflow");
    }
    return r;
}

bool is_prime(std::int64_t x)
{
    if (x < 2)
        return false;
    for (std::int64_t d = 2; d * d <= x; ++d)
        if (x % d == 0)
            return false;
    return true;
}

PrimePower prime_power_decomposition(std::int64_t x)
{
    if (x < 2)
        return {};
    std::int64_t p = 2;
    while (p * p <= x && x % p != 0)
        ++p;
    if (x % p != 0)
        p = x;
    int k = 0;
    while (x % p == 0) {
        x /= p;
        ++k;
    }
    if (x != 1)
        return {};
    return {p, k};
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m)
{
    a %= m;
    if (a < 0)
        a += m;
    std::int64_t x = a % m;
    for (std::int64_t k = 1; k <= m; ++k) {
        if (x == 1 % m)
            return k;
        x = static_cast<std::int64_t>((static_cast<__int128>(x) * a) % m);
    }
    throw std::domain_error("multiplicative_order: element is not a unit");
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1 != 0) {
        const std::int64_t t = g / a1;
        std::int64_t tmp = g - t * a1;
        g = a1;
        a1 = tmp;
        tmp = x - t * x1;
        x = x1;
        x1 = tmp;
    }
    if (g != 1)
        throw std::domain_error("mod_inverse: not invertible");
    return ((x % m) + m) % m;
}

std::int64_t phi_prime_power(std::int64_t p, int k)
{
    if (k == 0)
        return 1;
    return ipow64(p, static_cast<unsigned>(k - 1)) * (p - 1);
}

int moebius(std::int64_t x)
{
    int sign = 1;
    for (std::int64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            x /= d;
            if (x % d == 0)
                return 0;
            sign = -sign;
        }
    }
    if (x > 1)
        sign = -sign;
    return sign;
}

std::vector<std::int64_t> divisors(std::int64_t x)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= x; ++d)
        if (x % d == 0)
            out.push_back(d);
    return out;
}

std::string to_string(const Rational& x)
{
    return x.get_str();
}

}  // namespace cuspcenter
