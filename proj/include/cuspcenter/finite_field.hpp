#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cuspcenter/parameters.hpp"

namespace cuspcenter {

/// F_{p^e} = F_p[x]/(M) with M the smallest monic irreducible of degree e
/// in lexicographic order of (c_{e-1}, ..., c_0). Elements are encoded as
/// integers sum c_j p^j over their coefficient vectors, so 0 and 1 are the
/// field's zero and one.
///
/// Multiplication goes through exp/log tables over a fixed primitive
/// element (the smallest encoding of multiplicative order p^e - 1).
class FiniteField {
public:
    using Element = std::uint32_t;

    /// Largest supported field size.
    static constexpr std::int64_t kMaxSize = std::int64_t{1} << 20;

    /// Shared, write-once instance per (p, e). Throws ScaleLimit when p^e
    /// exceeds kMaxSize.
    static std::shared_ptr<const FiniteField> get(std::int64_t p, int e);

    FiniteField(std::int64_t p, int e);

    std::int64_t characteristic() const { return p_; }
    int degree() const { return e_; }
    std::int64_t size() const { return size_; }
    /// Monic modulus over F_p, low to high, length e + 1.
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    Element primitive_element() const { return primitive_; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    Element pow(Element a, std::int64_t exponent) const;

    /// Discrete log to the primitive element (a != 0).
    std::int64_t log(Element a) const;
    Element exp(std::int64_t k) const;

    /// Multiplicative order of a != 0.
    std::int64_t order(Element a) const;

    /// F_p-coordinates of a, length e.
    std::vector<std::int64_t> digits(Element a) const;
    Element from_digits(const std::vector<std::int64_t>& digits) const;

    std::string to_string(Element a) const;

private:
    std::int64_t p_;
    int e_;
    std::int64_t size_;
    std::vector<std::int64_t> modulus_;
    Element primitive_ = 0;
    std::vector<Element> exp_;
    std::vector<std::int64_t> log_;

    Element slow_mul(Element a, Element b) const;
};

/// Value type pairing an encoded element with its field.
struct FiniteFieldElement {
    std::shared_ptr<const FiniteField> field;
    FiniteField::Element value = 0;

    friend bool operator==(const FiniteFieldElement& a, const FiniteFieldElement& b)
    {
        return a.field == b.field && a.value == b.value;
    }
};

/// Polynomial over some F_q, coefficients (encoded elements) low to high.
using FqPolynomial = std::vector<FiniteField::Element>;

/// Trim, multiply and reduce polynomials over `field`.
FqPolynomial fq_multiply(const FiniteField& field, const FqPolynomial& a, const FqPolynomial& b);
FqPolynomial fq_remainder(const FiniteField& field, FqPolynomial a, const FqPolynomial& monic_divisor);

/// Evaluates a polynomial over F_q at x in F_{q^m}, with `embed` mapping F_q
/// coefficients into the larger field.
FiniteField::Element fq_evaluate(const FiniteField& big, const std::vector<FiniteField::Element>& embedded_coeffs,
                                 FiniteField::Element x);

/// The a-th monic polynomial of degree `degree` in enumeration order
/// (index in [0, q^degree)).
FqPolynomial monic_from_index(const FiniteField& field, int degree, std::int64_t index);

/// All monic irreducible polynomials of degree a over `field`, in
/// lexicographic order of (c_{a-1}, ..., c_0). Throws ScaleLimit when
/// q^a > bound.
std::vector<FqPolynomial> irreducible_polys(const FiniteField& field, int a, std::int64_t bound = std::int64_t{1} << 16);

/// (1/a) sum_{b | a} mu(a/b) q^b.
std::int64_t irreducible_count(std::int64_t q, int a);

/// Renders a polynomial over F_q; elements of F_q are printed by encoding.
std::string fq_to_string(const FqPolynomial& poly, const std::string& var = "X");

/// F_q together with F_{q^n}, a fixed embedding F_q -> F_{q^n}, and the
/// generator eps of the ell-Sylow subgroup of F_{q^n}^x. eps is
/// g^{(q^n - 1)/ell^r} for the primitive element g of F_{q^n}; together
/// with theta(eps) = zeta_{ell^r} this pins the character theta.
/// Embedding F_q -> F_{q^a} as a lookup table indexed by encoded elements.
/// Sends the generator of the base modulus to its smallest root.
std::vector<FiniteField::Element> field_embedding(const FiniteField& base, const FiniteField& ext);

class EigenvalueField {
public:
    using Element = FiniteField::Element;

    explicit EigenvalueField(const ParameterSet& reduced);

    const FiniteField& base() const { return *base_; }
    const FiniteField& extension() const { return *ext_; }
    std::shared_ptr<const FiniteField> extension_ptr() const { return ext_; }

    Element embed(Element x) const { return embedding_[x]; }
    Element epsilon() const { return epsilon_; }
    std::int64_t ell_power() const { return ell_power_; }

    /// Some root in F_{q^n} of a polynomial over F_q (the smallest encoding),
    /// or nullopt when it has none.
    std::optional<Element> root_of(const FqPolynomial& poly) const;

private:
    std::shared_ptr<const FiniteField> base_;
    std::shared_ptr<const FiniteField> ext_;
    std::vector<Element> embedding_;
    Element epsilon_ = 1;
    std::int64_t ell_power_ = 1;
};

/// Decomposition t = eps^j * t_reg with eps^j of ell-power order and t_reg
/// of order prime to ell.
struct EllPart {
    std::int64_t j = 0;
    FiniteField::Element ell_part = 1;
    FiniteField::Element regular_part = 1;
};

/// Splits t into ell-part and ell-regular part and finds j with
/// eps^j = t_ell by scanning the ell-Sylow subgroup. Throws ZeroElement for
/// t == 0.
EllPart ell_part_and_dlog(const EigenvalueField& field, FiniteField::Element t);

}  // namespace cuspcenter
