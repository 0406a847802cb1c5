#pragma once

#include <cstdint>
#include <vector>

#include "cuspcenter/cyclotomic.hpp"
#include "cuspcenter/linear_algebra.hpp"
#include "cuspcenter/parameters.hpp"
#include "cuspcenter/polynomial.hpp"

namespace cuspcenter {

/// Element of Q[X]/(X^N - 1), N = ell^r, in the monomial basis
/// X^0, ..., X^{N-1}. Elements of W(k)[X]/(X^N - 1) are those whose
/// coefficients are all ell-integral.
class CycGroupRingElement {
public:
    CycGroupRingElement() = default;
    explicit CycGroupRingElement(std::int64_t modulus) : coeffs_(static_cast<std::size_t>(modulus)) {}
    CycGroupRingElement(std::int64_t modulus, const Rational& constant);

    static CycGroupRingElement monomial(std::int64_t modulus, std::int64_t exponent);

    std::int64_t modulus() const { return static_cast<std::int64_t>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational& operator[](std::int64_t k) { return coeffs_[static_cast<std::size_t>(k)]; }
    const Rational& operator[](std::int64_t k) const { return coeffs_[static_cast<std::size_t>(k)]; }

    bool is_zero() const;
    bool is_integral(std::int64_t ell) const;

    friend CycGroupRingElement operator+(const CycGroupRingElement& a, const CycGroupRingElement& b);
    friend CycGroupRingElement operator-(const CycGroupRingElement& a, const CycGroupRingElement& b);
    friend CycGroupRingElement operator*(const CycGroupRingElement& a, const CycGroupRingElement& b);
    friend CycGroupRingElement operator*(const Rational& c, const CycGroupRingElement& a);
    friend bool operator==(const CycGroupRingElement&, const CycGroupRingElement&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// h(X) -> h(X^a): the coefficient of X^b accumulates into X^{ab mod N}.
CycGroupRingElement frobenius_map(const CycGroupRingElement& x, std::int64_t a);

/// p(x) computed in the group ring.
CycGroupRingElement evaluate(const IntPolynomial& p, const CycGroupRingElement& x);

/// Orbits of multiplication by q on Z/NZ. Representatives are the smallest
/// member of each orbit; orbits are listed in increasing order of their
/// representative, so 0 comes first. This order fixes the slot order of
/// block vectors everywhere else.
struct OrbitStructure {
    std::int64_t modulus = 1;
    std::int64_t q = 1;
    std::vector<std::vector<std::int64_t>> orbits;
    std::vector<std::int64_t> reps;
    /// orbit_index[a] = position of the orbit containing a.
    std::vector<std::size_t> orbit_index;

    std::size_t size() const { return reps.size(); }
};

/// Orbit partition for a reduced parameter set. Asserts that every orbit
/// of a nonzero residue has exactly n elements (so the only short orbit is
/// {0}); throws AssertionFailure otherwise.
OrbitStructure orbit_structure(const ParameterSet& ps);

/// Orbit partition for an arbitrary multiplier and modulus, no checks.
OrbitStructure orbits_of_multiplication(std::int64_t q, std::int64_t modulus);

/// The orbit sum sum_{b in orbit} X^b.
CycGroupRingElement orbit_sum(const OrbitStructure& orbits, std::size_t index);

struct OmegaData {
    int level = 0;
    CyclotomicNumber omega;
    IntPolynomial min_poly;
};

/// omega_i = zeta_i + zeta_i^q + ... + zeta_i^{q^{n-1}} and its minimal
/// polynomial, built as the product over coset representatives a of <q> in
/// (Z/ell^i)^x of (Y - sum_j zeta_i^{a q^j}). Asserts integer coefficients
/// and m_i(omega_i) = 0.
OmegaData omega_and_min_poly(const ParameterSet& ps, int level);

struct UniformizerReport {
    int level = 0;
    long valuation = 0;           ///< nu(omega_i - n)
    long norm_valuation = 0;      ///< nu(N(zeta_i)), N(X) = prod_j (X^{q^j} - 1)
    bool passed = false;
};

/// Checks nu(omega_i - n) = n (omega_i - n is a uniformizer of the fixed
/// field of q). Throws AssertionFailure with the computed valuation.
UniformizerReport uniformizer_check(const ParameterSet& ps, int level);

struct PullbackReport {
    int multiplicity = 0;
    bool passed = false;
};

/// Multiplicity of X = 1 as a root of X + X^q + ... + X^{q^{n-1}} - n over
/// F_ell; must be exactly n. Throws AssertionFailure otherwise.
PullbackReport pullback_mod_ell_check(const ParameterSet& ps);

struct InvariantRingData {
    ParameterSet params;
    OrbitStructure orbits;
    CycGroupRingElement f;
    std::vector<OmegaData> levels;    ///< levels[i-1] for i = 1..r
    IntPolynomial m;
    /// Row j: coordinates of f^j in the orbit-sum basis (D x D, integer).
    RationalMatrix change_of_basis;
    RationalMatrix change_of_basis_inverse;

    std::size_t dimension() const { return orbits.size(); }
};

/// Builds f, every m_i and m, writes f^0..f^{D-1} in the orbit-sum basis
/// and checks that the change of basis is invertible with ell-integral
/// inverse, i.e. every orbit sum is a W(k)-polynomial in f. Also checks
/// deg m = D, m(f) = 0 in R and m = (Y - n)^D mod ell.
InvariantRingData invariant_ring(const ParameterSet& ps);

/// h with deg h < D and O_a = h(f), for a an orbit representative. Throws
/// IntegralityFailure if h is not ell-integral.
IntPolynomial express_orbit_sum(const InvariantRingData& data, std::int64_t rep);

/// m reduced modulo ell equals (Y - n)^D.
bool is_power_of_linear_mod_ell(const IntPolynomial& m, std::int64_t n, std::int64_t ell);

}  // namespace cuspcenter
