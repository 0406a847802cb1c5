#include "cuspcenter/parameters.hpp"

#include <sstream>

#include "cuspcenter/errors.hpp"
#include "cuspcenter/number.hpp"

namespace cuspcenter {

std::int64_t ParameterSet::ell_power() const
{
    return ipow64(ell, static_cast<unsigned>(r));
}

namespace {

constexpr std::int64_t kMaxInput = std::int64_t{1} << 31;

int ell_valuation_of_power_minus_one(std::int64_t q, int exponent, std::int64_t ell)
{
    const BigInt v = ipow(BigInt(static_cast<long>(q)), static_cast<unsigned long>(exponent)) - 1;
    return ord_p(v, ell);
}

}  // namespace

ParameterSet validate_parameters(std::int64_t q, std::int64_t ell, int n, int d)
{
    if (q <= 0 || ell <= 0 || n <= 0 || d <= 0)
        throw InvalidInput("parameters must be positive integers");
    if (q > kMaxInput || ell > kMaxInput)
        throw ScaleLimit("q and ell must be below 2^31");
    const PrimePower pp = prime_power_decomposition(q);
    if (pp.prime == 0)
        throw InvalidInput("q = " + std::to_string(q) + " is not a prime power");
    if (!is_prime(ell))
        throw InvalidPrime("ell = " + std::to_string(ell) + " is not prime");
    if (q % ell == 0)
        throw InvalidPrime("ell = " + std::to_string(ell) + " divides q");
    if (d == n)
        throw SupercuspidalCase("d = n: the cuspidal is supercuspidal");
    if (n < 2 || n >= ell)
        throw DegenerateBlock("need 2 <= n < ell, got n = " + std::to_string(n));
    if (n % d != 0 || d > n)
        throw DegenerateBlock("d = " + std::to_string(d) + " does not divide n = " + std::to_string(n));

    ParameterSet ps;
    ps.q = q;
    ps.ell = ell;
    ps.n = n;
    ps.d = d;
    ps.p = pp.prime;
    ps.k = pp.exponent;
    ps.w = static_cast<int>(multiplicative_order(q % ell, ell));

    const std::int64_t qd = static_cast<std::int64_t>(
        ipow(BigInt(static_cast<long>(q % ell)), static_cast<unsigned long>(d)).get_ui() % ell);
    const std::int64_t ord_qd = multiplicative_order(qd, ell);
    if (ord_qd != n / d)
        throw DegenerateBlock("ord_ell(q^d) = " + std::to_string(ord_qd) + " but n/d = "
                              + std::to_string(n / d));
    ps.r = ell_valuation_of_power_minus_one(q, ps.w, ell);
    return ps;
}

ParameterSet reduce_parameters(const ParameterSet& ps)
{
    if (ps.d == 1)
        return ps;
    const std::int64_t q = ipow64(ps.q, static_cast<unsigned>(ps.d));
    ParameterSet out = validate_parameters(q, ps.ell, ps.n / ps.d, 1);
    return out;
}

std::string describe(const ParameterSet& ps)
{
    std::ostringstream os;
    os << "q=" << ps.q << " ell=" << ps.ell << " n=" << ps.n << " d=" << ps.d << " w=" << ps.w
       << " r=" << ps.r;
    return os.str();
}

}  // namespace cuspcenter
