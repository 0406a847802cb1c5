#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cuspcenter/finite_field.hpp"
#include "cuspcenter/number.hpp"
#include "cuspcenter/parameters.hpp"

namespace cuspcenter {

/// Partition with parts in non-increasing order.
using Partition = std::vector<int>;

std::vector<Partition> partitions_of(int total);

/// One (irreducible polynomial, partition) pair of a class type.
struct ClassFactor {
    FqPolynomial poly;  ///< monic irreducible over F_q, never X
    Partition partition;

    int degree() const { return static_cast<int>(poly.size()) - 1; }
    int size() const;  ///< |partition|

    friend auto operator<=>(const ClassFactor&, const ClassFactor&) = default;
    friend bool operator==(const ClassFactor&, const ClassFactor&) = default;
};

/// Conjugacy class of GL_n(F_q) by rational canonical type. Factors are
/// kept sorted, so two types are equal iff they describe the same class.
struct ClassType {
    std::int64_t q = 0;
    int n = 0;
    std::vector<ClassFactor> factors;
    BigInt centralizer_order;
    BigInt class_size;

    bool primary() const { return factors.size() == 1; }
    /// Every partition is all ones (diagonalizable over the algebraic
    /// closure, i.e. semisimple).
    bool diagonalizable() const;
    bool semisimple() const { return diagonalizable(); }
    /// Number of Jordan blocks (parts) of a primary class.
    int jordan_blocks() const;
    /// Degree of the eigenvalues of a primary class.
    int eigenvalue_degree() const;
    /// Sum over factors of the number of parts: the F_q-rank of the
    /// centralizer of the semisimple part.
    int rank_sum() const;

    std::string label() const;

    friend bool operator==(const ClassType& a, const ClassType& b) { return a.q == b.q && a.n == b.n && a.factors == b.factors; }
};

/// Green's z(Q, lambda) = Q^{|lambda| + 2 n(lambda)} prod_i prod_{k=1}^{m_i} (1 - Q^{-k}).
BigInt green_z(const BigInt& Q, const Partition& lambda);

/// prod_j z(q^{a_j}, lambda_j).
BigInt centralizer_order(const ClassType& ct);

/// prod_{i<n} (q^n - q^i).
BigInt gl_order(std::int64_t q, int n);

/// Coefficient of x^n in prod_k (1 - x^k)/(1 - q x^k): the number of
/// conjugacy classes of GL_n(F_q).
BigInt gl_class_count(std::int64_t q, int n);

struct EnumerationLimits {
    /// Bound on q^a for the irreducible-polynomial sieve.
    std::int64_t poly_bound = std::int64_t{1} << 16;
    /// Bound on the number of enumerated classes.
    std::int64_t class_bound = 1'000'000;
};

/// All class types of GL_n(F_q), sorted by degree profile, then polynomial
/// order, then partition. Throws ScaleLimit beyond the limits and
/// AssertionFailure if the count or the class-equation check fails.
std::vector<ClassType> enumerate_classes(std::int64_t q, int n, const EnumerationLimits& limits = {});
std::vector<ClassType> enumerate_classes(const ParameterSet& ps, const EnumerationLimits& limits = {});

struct ClassPredicates {
    bool primary = false;
    bool diagonalizable = false;
    bool ell_regular = false;  ///< every eigenvalue has order prime to ell
    int ord_ell_of_size = 0;
};

/// Flags of a class; asserts that ord_ell(|C|) = r unless the class is
/// primary and diagonalizable (throws AssertionFailure).
ClassPredicates class_predicates(const ClassType& ct, const ParameterSet& ps);

/// True iff the roots of the irreducible `poly` over F_q have order prime
/// to ell.
bool roots_are_ell_regular(const FiniteField& field, const FqPolynomial& poly, std::int64_t ell);

/// n x n matrix over F_q, row-major, entries encoded.
using FqMatrix = std::vector<FiniteField::Element>;

/// Direct sum of companion matrices of P^{lambda_k} over all factors.
FqMatrix representative_matrix(const ClassType& ct, const FiniteField& field);

/// Rational canonical type of an invertible matrix, from the kernel
/// dimensions of P(A)^k for every irreducible P of degree <= n.
ClassType type_of_matrix(const FqMatrix& a, int n, const FiniteField& field);

struct CensusEntry {
    ClassType type;
    BigInt size;
    BigInt centralizer_order;
};

struct ClassCensus {
    std::int64_t q = 0;
    int n = 0;
    BigInt group_order;
    std::vector<CensusEntry> classes;  ///< sorted like enumerate_classes
};

/// Brute-force census: enumerates every invertible matrix, splits the group
/// into conjugacy classes by explicit conjugation, and types each class.
/// Throws ScaleLimit when |GL_n(F_q)| > max_group_order.
ClassCensus matrix_oracle(std::int64_t q, int n, std::int64_t max_group_order);

/// Census from the type enumeration and Green's formula, same layout.
ClassCensus type_census(std::int64_t q, int n, const EnumerationLimits& limits = {});

}  // namespace cuspcenter
