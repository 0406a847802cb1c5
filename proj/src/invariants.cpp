#include "cuspcenter/invariants.hpp"

#include <algorithm>
#include <string>

#include "cuspcenter/errors.hpp"
#include "cuspcenter/number.hpp"

namespace cuspcenter {

CycGroupRingElement::CycGroupRingElement(std::int64_t modulus, const Rational& constant) : coeffs_(static_cast<std::size_t>(modulus))
{
    coeffs_[0] = constant;
}

CycGroupRingElement CycGroupRingElement::monomial(std::int64_t modulus, std::int64_t exponent)
{
    CycGroupRingElement x(modulus);
    x[((exponent % modulus) + modulus) % modulus] = 1;
    return x;
}

bool CycGroupRingElement::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycGroupRingElement::is_integral(std::int64_t ell) const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [ell](const Rational& c) { return is_p_integral(c, ell); });
}

CycGroupRingElement operator+(const CycGroupRingElement& a, const CycGroupRingElement& b)
{
    CycGroupRingElement c = a;
    for (std::size_t k = 0; k < c.coeffs_.size(); ++k)
        c.coeffs_[k] += b.coeffs_[k];
    return c;
}

CycGroupRingElement operator-(const CycGroupRingElement& a, const CycGroupRingElement& b)
{
    CycGroupRingElement c = a;
    for (std::size_t k = 0; k < c.coeffs_.size(); ++k)
        c.coeffs_[k] -= b.coeffs_[k];
    return c;
}

CycGroupRingElement operator*(const CycGroupRingElement& a, const CycGroupRingElement& b)
{
    const std::size_t n = a.coeffs_.size();
    CycGroupRingElement c(static_cast<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (b.coeffs_[j] != 0)
                c.coeffs_[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
    }
    return c;
}

CycGroupRingElement operator*(const Rational& s, const CycGroupRingElement& a)
{
    CycGroupRingElement c = a;
    for (auto& x : c.coeffs_)
        x *= s;
    return c;
}

CycGroupRingElement frobenius_map(const CycGroupRingElement& x, std::int64_t a)
{
    const std::int64_t n = x.modulus();
    CycGroupRingElement out(n);
    const std::int64_t am = ((a % n) + n) % n;
    for (std::int64_t b = 0; b < n; ++b)
        if (x[b] != 0)
            out[static_cast<std::int64_t>((static_cast<__int128>(b) * am) % n)] += x[b];
    return out;
}

CycGroupRingElement evaluate(const IntPolynomial& p, const CycGroupRingElement& x)
{
    CycGroupRingElement acc(x.modulus());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * x + CycGroupRingElement(x.modulus(), *it);
    return acc;
}

OrbitStructure orbits_of_multiplication(std::int64_t q, std::int64_t modulus)
{
    OrbitStructure s;
    s.modulus = modulus;
    s.q = ((q % modulus) + modulus) % modulus;
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    s.orbit_index.assign(static_cast<std::size_t>(modulus), kUnset);
    for (std::int64_t a = 0; a < modulus; ++a) {
        if (s.orbit_index[static_cast<std::size_t>(a)] != kUnset)
            continue;
        std::vector<std::int64_t> orbit;
        std::int64_t b = a;
        do {
            s.orbit_index[static_cast<std::size_t>(b)] = s.reps.size();
            orbit.push_back(b);
            b = static_cast<std::int64_t>((static_cast<__int128>(b) * s.q) % modulus);
        } while (b != a);
        s.reps.push_back(a);
        s.orbits.push_back(std::move(orbit));
    }
    return s;
}

OrbitStructure orbit_structure(const ParameterSet& ps)
{
    OrbitStructure s = orbits_of_multiplication(ps.q, ps.ell_power());
    for (std::size_t o = 0; o < s.size(); ++o) {
        const auto size = static_cast<int>(s.orbits[o].size());
        if (size < ps.n && s.reps[o] != 0)
            throw AssertionFailure("orbit of " + std::to_string(s.reps[o]) + " has size " + std::to_string(size)
                                   + " < n without being divisible by ell^r");
        if (s.reps[o] != 0 && size != ps.n)
            throw AssertionFailure("orbit of " + std::to_string(s.reps[o]) + " has size " + std::to_string(size)
                                   + " != n");
    }
    const std::int64_t expected = 1 + (s.modulus - 1) / ps.n;
    if (static_cast<std::int64_t>(s.size()) != expected)
        throw AssertionFailure("orbit count " + std::to_string(s.size()) + " != 1 + (ell^r - 1)/n");
    return s;
}

CycGroupRingElement orbit_sum(const OrbitStructure& orbits, std::size_t index)
{
    CycGroupRingElement x(orbits.modulus);
    for (auto b : orbits.orbits[index])
        x[b] += 1;
    return x;
}

namespace {

CyclotomicNumber orbit_sum_at_level(const ParameterSet& ps, int level, std::int64_t a)
{
    const std::int64_t modulus = ipow64(ps.ell, static_cast<unsigned>(level));
    CyclotomicNumber s = CyclotomicNumber(0).embed(ps.ell, level);
    std::int64_t e = a % modulus;
    for (int j = 0; j < ps.n; ++j) {
        s += CyclotomicNumber::zeta_power(ps.ell, level, e);
        e = static_cast<std::int64_t>((static_cast<__int128>(e) * ps.q) % modulus);
    }
    return s;
}

}  // namespace

OmegaData omega_and_min_poly(const ParameterSet& ps, int level)
{
    if (level < 1 || level > ps.r)
        throw InvalidInput("level must lie in [1, r]");
    OmegaData out;
    out.level = level;
    out.omega = orbit_sum_at_level(ps, level, 1);

    const std::int64_t modulus = ipow64(ps.ell, static_cast<unsigned>(level));
    const OrbitStructure cosets = orbits_of_multiplication(ps.q, modulus);
    CycPolynomial product = CycPolynomial::constant(CyclotomicNumber(1));
    for (std::size_t o = 0; o < cosets.size(); ++o) {
        const std::int64_t a = cosets.reps[o];
        if (a % ps.ell == 0)
            continue;
        product = product * CycPolynomial::linear(orbit_sum_at_level(ps, level, a));
    }
    out.min_poly = to_rational_polynomial(product);
    if (!has_integer_coefficients(out.min_poly))
        throw IntegralityFailure("m_" + std::to_string(level) + " has non-integer coefficients");
    const std::int64_t expected_degree = phi_prime_power(ps.ell, level) / ps.n;
    if (out.min_poly.degree() != expected_degree)
        throw DegreeMismatch("deg m_" + std::to_string(level) + " = " + std::to_string(out.min_poly.degree())
                             + ", expected " + std::to_string(expected_degree));
    if (!out.min_poly(out.omega).is_zero())
        throw AssertionFailure("m_" + std::to_string(level) + "(omega) != 0");
    return out;
}

UniformizerReport uniformizer_check(const ParameterSet& ps, int level)
{
    const OmegaData od = omega_and_min_poly(ps, level);
    UniformizerReport rep;
    rep.level = level;
    rep.valuation = ell_valuation_at_level(od.omega - CyclotomicNumber(ps.n), ps.ell, level);

    const std::int64_t modulus = ipow64(ps.ell, static_cast<unsigned>(level));
    CyclotomicNumber norm = CyclotomicNumber(1).embed(ps.ell, level);
    std::int64_t e = 1;
    for (int j = 0; j < ps.n; ++j) {
        norm *= CyclotomicNumber::zeta_power(ps.ell, level, e) - CyclotomicNumber(1);
        e = static_cast<std::int64_t>((static_cast<__int128>(e) * ps.q) % modulus);
    }
    rep.norm_valuation = ell_valuation_at_level(norm, ps.ell, level);
    rep.passed = rep.valuation == ps.n && rep.norm_valuation == ps.n;
    if (!rep.passed)
        throw AssertionFailure("level " + std::to_string(level) + ": nu(omega - n) = " + std::to_string(rep.valuation)
                               + ", nu(N(zeta)) = " + std::to_string(rep.norm_valuation) + ", expected "
                               + std::to_string(ps.n));
    return rep;
}

namespace {

// C(N, k) mod ell by Lucas' theorem, with the base-ell digits of N given.
std::int64_t binomial_mod_prime(std::vector<std::int64_t> n_digits, std::int64_t k, std::int64_t ell)
{
    std::int64_t result = 1;
    std::size_t pos = 0;
    while (k > 0) {
        const std::int64_t kd = k % ell;
        const std::int64_t nd = pos < n_digits.size() ? n_digits[pos] : 0;
        if (kd > nd)
            return 0;
        std::int64_t c = 1;
        for (std::int64_t i = 0; i < kd; ++i) {
            c = c * ((nd - i) % ell) % ell;
            c = c * mod_inverse(i + 1, ell) % ell;
        }
        result = result * c % ell;
        k /= ell;
        ++pos;
    }
    return result;
}

}  // namespace

PullbackReport pullback_mod_ell_check(const ParameterSet& ps)
{
    // Taylor coefficients at X = 1: the k-th Hasse derivative of
    // sum_j X^{q^j} - n at 1 is sum_j C(q^j, k) - n [k = 0]. Only the two
    // lowest base-ell digits of q^j matter for k <= ell.
    const std::int64_t ell = ps.ell;
    const std::int64_t ell2 = ell * ell;
    PullbackReport rep;
    rep.multiplicity = -1;
    for (std::int64_t k = 0; k <= ps.n + 1; ++k) {
        std::int64_t total = k == 0 ? ((-ps.n) % ell + ell) % ell : 0;
        std::int64_t qj = 1;
        for (int j = 0; j < ps.n; ++j) {
            total = (total + binomial_mod_prime({qj % ell, qj / ell}, k, ell)) % ell;
            qj = static_cast<std::int64_t>((static_cast<__int128>(qj) * (ps.q % ell2)) % ell2);
        }
        if (total != 0) {
            rep.multiplicity = static_cast<int>(k);
            break;
        }
    }
    rep.passed = rep.multiplicity == ps.n;
    if (!rep.passed)
        throw AssertionFailure("multiplicity of X = 1 in g mod ell is "
                               + (rep.multiplicity < 0 ? std::string("> n + 1") : std::to_string(rep.multiplicity))
                               + ", expected " + std::to_string(ps.n));
    return rep;
}

bool is_power_of_linear_mod_ell(const IntPolynomial& m, std::int64_t n, std::int64_t ell)
{
    IntPolynomial power = IntPolynomial::constant(1);
    for (int k = 0; k < m.degree(); ++k)
        power = power * IntPolynomial::linear(Rational(n));
    const IntPolynomial diff = m - power;
    for (const auto& c : diff.coeffs())
        if (c != 0 && (!is_p_integral(c, ell) || ord_p(c, ell) < 1))
            return false;
    return is_p_integral(m.coeffs().empty() ? Rational(0) : m.coeffs().back(), ell);
}

InvariantRingData invariant_ring(const ParameterSet& ps)
{
    if (!ps.reduced())
        throw InvalidInput("invariant_ring needs a reduced parameter set");
    InvariantRingData data;
    data.params = ps;
    data.orbits = orbit_structure(ps);
    const std::int64_t modulus = data.orbits.modulus;
    const std::size_t dim = data.orbits.size();

    data.f = orbit_sum(data.orbits, data.orbits.orbit_index[1 % modulus]);
    if (frobenius_map(data.f, ps.q) != data.f)
        throw AssertionFailure("f is not fixed by X -> X^q");

    data.m = IntPolynomial::linear(Rational(ps.n));
    for (int level = 1; level <= ps.r; ++level) {
        data.levels.push_back(omega_and_min_poly(ps, level));
        data.m = data.m * data.levels.back().min_poly;
    }
    if (data.m.degree() != static_cast<int>(dim))
        throw DegreeMismatch("deg m = " + std::to_string(data.m.degree()) + " but there are " + std::to_string(dim)
                             + " orbits");
    if (!has_integer_coefficients(data.m))
        throw IntegralityFailure("m has non-integer coefficients");
    if (!is_power_of_linear_mod_ell(data.m, ps.n, ps.ell))
        throw AssertionFailure("m is not a power of (Y - n) modulo ell");
    if (!evaluate(data.m, data.f).is_zero())
        throw AssertionFailure("m(f) != 0 in R");

    data.change_of_basis = RationalMatrix(dim, dim);
    CycGroupRingElement power(modulus, Rational(1));
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t o = 0; o < dim; ++o) {
            const Rational& c = power[data.orbits.reps[o]];
            for (auto b : data.orbits.orbits[o])
                if (power[b] != c)
                    throw AssertionFailure("f^" + std::to_string(j) + " is not constant on the orbit of "
                                           + std::to_string(data.orbits.reps[o]));
            data.change_of_basis(j, o) = c;
        }
        power = power * data.f;
    }
    auto inverse = data.change_of_basis.inverse();
    if (!inverse)
        throw AssertionFailure("powers of f are linearly dependent in the invariant module");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (!is_p_integral((*inverse)(i, j), ps.ell))
                throw IntegralityFailure("the orbit-sum change of basis is not invertible over the ell-adic integers");
    data.change_of_basis_inverse = std::move(*inverse);
    return data;
}

IntPolynomial express_orbit_sum(const InvariantRingData& data, std::int64_t rep)
{
    const std::int64_t modulus = data.orbits.modulus;
    const std::int64_t a = ((rep % modulus) + modulus) % modulus;
    const std::size_t o = data.orbits.orbit_index[static_cast<std::size_t>(a)];
    if (data.orbits.reps[o] != a)
        throw InvalidInput(std::to_string(rep) + " is not an orbit representative");
    std::vector<Rational> h(data.dimension());
    for (std::size_t j = 0; j < h.size(); ++j)
        h[j] = data.change_of_basis_inverse(o, j);
    IntPolynomial poly(std::move(h));
    if (!is_ell_integral(poly, data.params.ell))
        throw IntegralityFailure("orbit sum of " + std::to_string(rep) + " is not a W(k)-polynomial in f");
    return poly;
}

}  // namespace cuspcenter
