#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cuspcenter/characters.hpp"
#include "cuspcenter/classes.hpp"
#include "cuspcenter/cyclotomic.hpp"
#include "cuspcenter/invariants.hpp"
#include "cuspcenter/parameters.hpp"
#include "cuspcenter/polynomial.hpp"

namespace cuspcenter {

/// Element of prod_{i in I} Q(zeta_{ell^r}); slot 0 is the Steinberg slot,
/// the others follow the orbit representatives in ascending order.
struct BlockVector {
    std::int64_t ell = 0;
    int level = 0;
    std::vector<std::int64_t> indices;
    std::vector<CyclotomicNumber> entries;

    std::size_t size() const { return entries.size(); }
    const CyclotomicNumber& operator[](std::size_t k) const { return entries[k]; }

    friend BlockVector operator+(const BlockVector& a, const BlockVector& b);
    friend BlockVector operator-(const BlockVector& a, const BlockVector& b);
    friend BlockVector operator*(const BlockVector& a, const BlockVector& b);
    friend BlockVector operator*(const Rational& c, const BlockVector& a);
    friend bool operator==(const BlockVector& a, const BlockVector& b);

    std::string to_string() const;
};

/// The constant vector (c, c, ..., c).
BlockVector block_constant(const CharacterContext& ctx, const Rational& c);

/// h(v) coordinatewise.
BlockVector evaluate(const IntPolynomial& h, const BlockVector& v);

/// delta_i(beta_C) = |C| chi_i(C) / dim chi_i for every slot. Throws
/// IntegralityFailure if an entry is not ell-integral.
BlockVector delta_class(const ClassType& ct, const CharacterContext& ctx);

/// All power-basis coefficients are ell-integral.
bool is_ell_integral(const CyclotomicNumber& x, std::int64_t ell);

/// Entries i != 0 equal, rational, ell-integral and congruent to entry 0
/// modulo ell^r.
bool s_membership(const BlockVector& v, const ParameterSet& ps);

enum class Bucket {
    NonPrimary,
    SmallDegreeNonDiagonalizable,
    SmallDegreeDiagonalizable,
    DegreeN,
    RealizedWitness,  ///< the regular unipotent class
};

std::string bucket_name(Bucket b);

struct ClassRecord {
    ClassType type;
    ClassPredicates predicates;
    Bucket bucket = Bucket::NonPrimary;
    BlockVector delta;
    bool in_s = false;
    bool block_congruent = false;  ///< entries agree modulo the maximal ideal above ell
};

/// Sign congruence instance: prod_{k<v} (q^{kd} - 1) / v against q^{n(v-1)/2}.
struct SignsCheck {
    int v = 0;
    int d = 0;
    Rational lhs;
    BigInt rhs;
    bool holds = false;
};

std::vector<SignsCheck> sign_congruences(const ParameterSet& ps);

struct CaseAnalysis {
    ParameterSet params;
    std::vector<ClassRecord> records;
    std::map<Bucket, std::size_t> counts;
    std::size_t degree_n_in_s = 0;  ///< informational
    std::vector<SignsCheck> signs;
};

/// Buckets every class and asserts: integrality of delta, congruence of all
/// slots modulo the maximal ideal, equal cuspidal slots on ell-regular
/// classes, S-membership off the degree-n bucket, and the sign congruences.
/// Throws AssertionFailure naming the class and bucket.
CaseAnalysis case_analysis(const ParameterSet& ps, const std::vector<ClassType>& classes);
CaseAnalysis case_analysis(const ParameterSet& ps);

struct IdempotentChain {
    std::string witness;  ///< label of the regular unipotent class
    BlockVector delta;
    Rational unit;        ///< u with delta_i = u ell^r
    BlockVector result;   ///< (ell^r, 0, ..., 0)
};

/// ell^r 1 - u^{-1} delta(regular unipotent).
IdempotentChain reconstruct_scaled_idempotent(const CharacterContext& ctx, const std::vector<ClassType>& classes);

/// (n, sum_k zeta^{i q^k}); asserts m(gamma) = 0 and that m is minimal.
BlockVector gamma(const CharacterContext& ctx, const IntPolynomial& m);

struct GammaChain {
    std::string witness;   ///< class of the minimal polynomial of eps
    BlockVector delta;
    Rational unit;         ///< |C| (-1)^{n-1} / prod_{j<n} (q^j - 1)
    BlockVector normalized;
    Rational correction;   ///< c with normalized + c (ell^r, 0) = gamma
    BlockVector result;
};

GammaChain reconstruct_gamma(const CharacterContext& ctx, const std::vector<ClassType>& classes,
                             const BlockVector& expected_gamma);

/// h with deg h < dimension and sum_j h_j gamma^j = v. Throws NoSolution or
/// IntegralityFailure.
IntPolynomial express_in_gamma(const BlockVector& v, const BlockVector& gamma, std::size_t dimension);
IntPolynomial express_in_gamma(const BlockVector& v, const InvariantRingData& ring);

struct GOfGamma {
    IntPolynomial g;       ///< m / (Y - n)
    BlockVector value;
    Rational a;
    int valuation = 0;     ///< ord_ell(a), asserted equal to r
};

GOfGamma g_of_gamma(const CharacterContext& ctx, const InvariantRingData& ring, const BlockVector& gamma);

struct Certificate {
    std::string class_label;
    Bucket bucket;
    BlockVector delta;
    IntPolynomial h;
};

struct ActionEntry {
    std::int64_t index = 0;  ///< 0 for the Steinberg slot
    std::string representation;
    CyclotomicNumber value;
};

struct EndoRingResult {
    ParameterSet input;
    ParameterSet params;  ///< reduced
    std::int64_t action_exponent = 0;  ///< q^d: invariants under X -> X^{q^d}
    IntPolynomial m;
    BlockVector gamma;
    CaseAnalysis analysis;
    std::vector<Certificate> certificates;
    IdempotentChain idempotent;
    GammaChain gamma_chain;
    GOfGamma g;
    std::vector<ActionEntry> action;
    std::string presentation() const;
};

/// Full pipeline on the reduced parameters. `classes` may be supplied (for
/// example from a cache); otherwise they are enumerated.
EndoRingResult verify_endo_ring(const ParameterSet& ps, const std::vector<ClassType>* classes = nullptr);

/// delta from the classical GL_2 table against delta from the formulas,
/// class by class (ps reduced to n = 2). Returns the labels that disagree.
std::vector<std::string> gl2_delta_mismatches(const ParameterSet& ps);

}  // namespace cuspcenter
