#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cuspcenter/classes.hpp"
#include "cuspcenter/cyclotomic.hpp"
#include "cuspcenter/finite_field.hpp"
#include "cuspcenter/invariants.hpp"
#include "cuspcenter/parameters.hpp"

namespace cuspcenter {

/// Fixed data shared by all character evaluations for one reduced parameter
/// set: the eigenvalue field, eps and the orbit representatives I.
class CharacterContext {
public:
    explicit CharacterContext(const ParameterSet& ps);

    const ParameterSet& params() const { return params_; }
    const EigenvalueField& field() const { return field_; }
    const OrbitStructure& orbits() const { return orbits_; }
    /// I without 0.
    std::vector<std::int64_t> cuspidal_indices() const;

    /// theta^i(t) = zeta_r^{i j} where eps^j is the ell-part of t.
    CyclotomicNumber theta(std::int64_t i, FiniteField::Element t) const;

private:
    ParameterSet params_;
    EigenvalueField field_;
    OrbitStructure orbits_;
};

enum class CharacterKind { Steinberg, Cuspidal };

struct CharacterFamily {
    CharacterKind kind = CharacterKind::Steinberg;
    std::int64_t index = 0;  ///< i in I, 0 for Steinberg
    BigInt dimension;
};

/// (q - 1)(q^2 - 1)...(q^{n-1} - 1).
BigInt cuspidal_dimension(const ParameterSet& ps);
/// q^{n(n-1)/2}.
BigInt steinberg_dimension(const ParameterSet& ps);
CharacterFamily character_family(std::int64_t i, const ParameterSet& ps);

/// Value of pi_i (i != 0) on a class; zero off primary classes. Level r.
CyclotomicNumber cuspidal_value(std::int64_t i, const ClassType& ct, const CharacterContext& ctx);

/// Steinberg value: (-1)^{n - rank} times the p-part of the centralizer
/// order on semisimple classes, zero elsewhere.
CyclotomicNumber steinberg_value(const ClassType& ct, const CharacterContext& ctx);

/// pi_0 = Steinberg, pi_i cuspidal otherwise.
CyclotomicNumber character_value(std::int64_t i, const ClassType& ct, const CharacterContext& ctx);

/// Exact arithmetic in Q(zeta_N) for arbitrary N, power basis modulo Phi_N.
/// Used only by the GL_2 oracle, which needs roots of unity of order q^2 - 1.
class UnityRing {
public:
    explicit UnityRing(std::int64_t order);

    std::int64_t order() const { return order_; }
    std::int64_t degree() const { return static_cast<std::int64_t>(phi_.size()) - 1; }
    /// Phi_N, low to high.
    const std::vector<BigInt>& cyclotomic_polynomial() const { return phi_; }

    /// Reduce sum_k c_k zeta^k (k < N) to the power basis.
    std::vector<Rational> reduce(const std::vector<Rational>& dense) const;
    std::vector<BigInt> reduce(const std::vector<BigInt>& dense) const;

private:
    std::int64_t order_;
    std::vector<BigInt> phi_;
};

/// Phi_N over Z, low to high.
std::vector<BigInt> cyclotomic_polynomial(std::int64_t order);

/// Sparse element of Z[zeta_N]: exponent -> integer coefficient. Not reduced.
using UnitySum = std::map<std::int64_t, long>;

enum class GL2ClassKind { Central, CentralUnipotent, Split, Elliptic };

/// Classes of GL_2(F_q) in the classical parametrization. Exponents are
/// discrete logs in F_{q^2} with respect to its primitive element g.
struct GL2Class {
    GL2ClassKind kind;
    std::int64_t k1 = 0;
    std::int64_t k2 = 0;
    BigInt size;
    ClassType type;  ///< the same class in the type enumeration
};

enum class GL2CharacterKind { Linear, Steinberg, PrincipalSeries, Cuspidal };

struct GL2Character {
    GL2CharacterKind kind;
    std::int64_t u1 = 0;  ///< alpha exponents, or theta exponent for Cuspidal
    std::int64_t u2 = 0;
    BigInt dimension;
    std::vector<UnitySum> values;  ///< per class, same order as classes
    std::string label() const;
};

struct GL2Table {
    std::int64_t q = 0;
    std::int64_t order = 0;  ///< N = q^2 - 1
    BigInt group_order;
    std::vector<GL2Class> classes;
    std::vector<GL2Character> characters;
    std::size_t standard_rows = 0;  ///< rows before the theta_list extras
};

/// Value of the character attached to theta_v (theta_v(g^k) = zeta_N^{v k})
/// on a class, by the classical cuspidal formula.
UnitySum gl2_cuspidal_values(std::int64_t q, std::int64_t v, const GL2Class& c);

/// Full character table of GL_2(F_q). theta_list adds one extra cuspidal row
/// per entry (exponent v of theta_v, not necessarily an orbit minimum) after
/// the standard rows, so that callers can read off specific members.
/// Throws ScaleLimit for q^2 - 1 above max_order.
GL2Table gl2_table_oracle(std::int64_t q, const std::vector<std::int64_t>& theta_list = {},
                          std::int64_t max_order = 1023);

struct OrthogonalityReport {
    bool rows = false;
    bool columns = false;
    bool dimensions = false;  ///< sum of squared degrees = |G|
    bool class_sizes = false;  ///< sizes match the type enumeration
    bool passed() const { return rows && columns && dimensions && class_sizes; }
};

/// Checks the standard rows of the table (extra theta_list rows excluded).
OrthogonalityReport check_orthogonality(const GL2Table& table);

/// theta_v exponent for the block member pi_i, under the identification
/// fixed by eps: v = (N / ell^r) i (M^{-1} mod ell^r), M = N / ell^r.
std::int64_t gl2_theta_exponent(std::int64_t i, const ParameterSet& ps);

/// Maps zeta_{ell^level} to zeta_N^{N / ell^level}; returns the reduced
/// coefficient vector in Q(zeta_N).
std::vector<Rational> to_unity_ring(const CyclotomicNumber& x, const UnityRing& ring);

std::vector<Rational> unity_sum_to_rational(const UnitySum& s, const UnityRing& ring);

struct ValueComparison {
    std::string class_label;
    std::int64_t index = 0;  ///< 0 for Steinberg
    bool agree = false;
};

/// Compares steinberg_value and cuspidal_value against the oracle rows on
/// every class of GL_2(F_q); ps must be reduced with n = 2.
std::vector<ValueComparison> compare_with_gl2_oracle(const ParameterSet& ps);

}  // namespace cuspcenter
