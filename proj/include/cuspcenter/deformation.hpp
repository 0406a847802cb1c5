#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cuspcenter/cyclotomic.hpp"
#include "cuspcenter/invariants.hpp"
#include "cuspcenter/parameters.hpp"
#include "cuspcenter/polynomial.hpp"

namespace cuspcenter {

/// Square matrix over Q(zeta_{ell^i}), row-major.
class CycMatrix {
public:
    CycMatrix() = default;
    explicit CycMatrix(std::size_t n) : n_(n), data_(n * n) {}
    static CycMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    CyclotomicNumber& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const CyclotomicNumber& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    CyclotomicNumber trace() const;
    CycMatrix pow(unsigned exponent) const;
    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
    friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
    friend bool operator==(const CycMatrix& a, const CycMatrix& b);

private:
    std::size_t n_ = 0;
    std::vector<CyclotomicNumber> data_;
};

/// Coefficients c_0..c_n of det(X I - A) (c_n = 1), by Faddeev-LeVerrier.
std::vector<CyclotomicNumber> characteristic_polynomial(const CycMatrix& a);

struct DeformationPoint {
    std::int64_t a = 0;
    std::vector<Rational> entries;  ///< free entries of Fr; empty for the generic a = 0 point
    bool generic = false;
    CycMatrix psi;
    CycMatrix fr;
    std::string label() const;
};

/// Psi = diag(zeta^{a q^k}), Fr with Fr[k-1][k] = c_k and Fr[n-1][0] = c_0.
/// Throws RelationFailure unless Fr Psi = Psi^q Fr and Fr is invertible.
DeformationPoint make_point(const ParameterSet& ps, std::int64_t a, const std::vector<Rational>& entries);

/// Psi = I with an upper unitriangular Fr full of ones (nonzero trace).
DeformationPoint make_generic_point(const ParameterSet& ps);

/// Every a in Z/ell^r with every choice of free entries in {1, -1, 2}^n,
/// plus the generic a = 0 point.
std::vector<DeformationPoint> sample_points(const ParameterSet& ps);

struct PointReport {
    std::string label;
    std::int64_t a = 0;
    bool psi_identity = false;
    std::string branch;   ///< "Y-n relation" or "T relations"
    CyclotomicNumber trace;
    CyclotomicNumber m_value;
    std::vector<CyclotomicNumber> t;  ///< T_1..T_n
    bool commutation = false;
};

/// Asserts the Frobenius-inertia relations at the point; throws
/// AssertionFailure naming the violated generator.
PointReport check_relations(const DeformationPoint& pt, const ParameterSet& ps, const InvariantRingData& ring);

/// A relation y_part(Y) * T_k (t_index = k) or y_part(Y) alone (t_index = 0).
struct Relation {
    IntPolynomial y_part;
    int t_index = 0;
    std::string to_string() const;
};

struct APiPresentation {
    std::vector<std::string> generators;
    std::vector<Relation> relations;
    IntPolynomial f;
    Rational i0_root;  ///< I_0 = <Y - i0_root>
    int t_count = 0;
    std::string to_string() const;
};

/// End(P)[T_1, ..., T_t^{+-1}] / <T_1..T_{t-1}> I_0 with End(P) = W(k)[Y]/(m)
/// and I_0 = <Y - n/d>. t_count = 0 means n (reduced).
APiPresentation emit_a_pi_presentation(const ParameterSet& ps, const IntPolynomial& m, int t_count = 0);

/// <f(Y)> + <Y - n><T_1..T_{n-1}> with f built from its linear factors over
/// Q(zeta_{ell^r}).
APiPresentation factored_presentation(const ParameterSet& ps, int t_count = 0);

/// Every relation evaluates to zero at the reported point.
bool vanishes(const APiPresentation& pres, const PointReport& point);

struct DeformationSuite {
    ParameterSet params;
    APiPresentation a_pi;
    APiPresentation factored;
    std::vector<PointReport> points;
    std::vector<CyclotomicNumber> traces;  ///< distinct, sorted
    bool root_set = false;       ///< traces are exactly the roots of m
    bool a_pi_vanishes = false;
    bool factored_vanishes = false;
    bool same_f = false;         ///< f == m
};

DeformationSuite run_deformation_suite(const ParameterSet& ps, int t_count = 0);

}  // namespace cuspcenter
