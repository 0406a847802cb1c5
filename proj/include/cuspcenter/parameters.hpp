#pragma once

#include <cstdint>
#include <string>

namespace cuspcenter {

/// Validated (q, ell, n, d) together with the derived w and r.
///
/// `w` is the multiplicative order of q modulo ell and `r` the ell-adic
/// valuation of q^w - 1. For a set in reduced form (d == 1) we always have
/// n == w. The hypothesis that the coefficient field is large enough is a
/// standing assumption and is not represented here.
struct ParameterSet {
    std::int64_t q = 0;
    std::int64_t ell = 0;
    int n = 0;
    int d = 1;
    int w = 0;
    int r = 0;

    /// Characteristic of F_q and the exponent with q = p^k.
    std::int64_t p = 0;
    int k = 0;

    bool reduced() const { return d == 1; }

    /// ell^r, the order of the ell-Sylow subgroup of F_{q^n}^x.
    std::int64_t ell_power() const;

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

/// Validates the raw inputs and computes w, r.
///
/// Throws InvalidInput for non-positive values or q not a prime power,
/// InvalidPrime when ell is not a prime or divides q, SupercuspidalCase when
/// d == n, DegenerateBlock when 2 <= n < ell fails, d does not divide n, or
/// ord_ell(q^d) != n / d.
ParameterSet validate_parameters(std::int64_t q, std::int64_t ell, int n, int d = 1);

/// (q, n, d) -> (q^d, n/d, 1). Identity on reduced sets.
ParameterSet reduce_parameters(const ParameterSet& ps);

std::string describe(const ParameterSet& ps);

}  // namespace cuspcenter
