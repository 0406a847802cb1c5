#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cuspcenter {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exponent of the prime `p` in a nonzero integer.
int ord_p(const BigInt& x, std::int64_t p);

/// Exponent of `p` in a nonzero rational (may be negative).
int ord_p(const Rational& x, std::int64_t p);

/// True iff the reduced denominator of `x` is prime to `p`.
bool is_p_integral(const Rational& x, std::int64_t p);

/// True iff `x` is p-integral with p-adic valuation zero.
bool is_p_unit(const Rational& x, std::int64_t p);

/// x == y in the p-local integers modulo p^k. Both arguments must be
/// p-integral; returns false otherwise.
bool congruent_mod_power(const Rational& x, const Rational& y, std::int64_t p, int k);

/// Image of a p-integral rational in Z/mZ for m a power of p.
std::int64_t reduce_mod(const Rational& x, std::int64_t m);

BigInt ipow(const BigInt& base, unsigned long exponent);
std::int64_t ipow64(std::int64_t base, unsigned exponent);

bool is_prime(std::int64_t x);

/// (p, k) with x = p^k, or nullopt-like {0,0} when x is not a prime power.
struct PrimePower {
    std::int64_t prime = 0;
    int exponent = 0;
};
PrimePower prime_power_decomposition(std::int64_t x);

/// Multiplicative order of a modulo m (gcd(a, m) must be 1, m >= 2).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Euler phi of p^k.
std::int64_t phi_prime_power(std::int64_t p, int k);

/// Moebius function, by trial division.
int moebius(std::int64_t x);

std::vector<std::int64_t> divisors(std::int64_t x);

std::string to_string(const Rational& x);

}  // namespace cuspcenter
