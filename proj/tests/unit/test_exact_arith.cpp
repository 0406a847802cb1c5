#include <random>

#include "cuspcenter/cyclotomic.hpp"
#include "cuspcenter/errors.hpp"
#include "cuspcenter/finite_field.hpp"
#include "cuspcenter/number.hpp"
#include "support.hpp"

using namespace cuspcenter;
using testsupport::expected;

TEST(Parameters, ValidatesAndDerivesWAndR)
{
    const auto p = validate_parameters(2, 3, 2);
    EXPECT_EQ(p.w, 2);
    EXPECT_EQ(p.r, 1);
    const auto u = validate_parameters(2, 5, 4, 2);
    EXPECT_EQ(u.w, 4);
    EXPECT_EQ(u.r, 1);
    EXPECT_EQ(validate_parameters(8, 3, 2).r, 2);
}

TEST(Parameters, RejectsInvalidSets)
{
    EXPECT_THROW(validate_parameters(2, 3, 3), DegenerateBlock);
    EXPECT_THROW(validate_parameters(6, 5, 2), InvalidInput);
    EXPECT_THROW(validate_parameters(2, 4, 2), InvalidPrime);
    EXPECT_THROW(validate_parameters(3, 3, 2), InvalidPrime);
    EXPECT_THROW(validate_parameters(2, 5, 4, 4), SupercuspidalCase);
    EXPECT_THROW(validate_parameters(2, 5, 4, 3), DegenerateBlock);
    EXPECT_THROW(validate_parameters(0, 3, 2), InvalidInput);
}

TEST(Parameters, Reduction)
{
    const auto red = reduce_parameters(validate_parameters(2, 5, 4, 2));
    EXPECT_EQ(red.q, 4);
    EXPECT_EQ(red.n, 2);
    EXPECT_EQ(red.d, 1);
    EXPECT_EQ(red.ell, 5);
    for (auto [q, ell, n] : {std::tuple{2, 3, 2}, std::tuple{3, 5, 4}}) {
        const auto ps = validate_parameters(q, ell, n);
        EXPECT_EQ(reduce_parameters(ps), ps);
    }
}

TEST(Cyclotomic, PowerBasisReduction)
{
    const auto z3 = CyclotomicNumber::zeta_power(3, 1, 1);
    EXPECT_EQ(z3 * z3, CyclotomicNumber(3, 1, {Rational(-1), Rational(-1)}));
    EXPECT_EQ(z3 + z3 * z3, CyclotomicNumber(-1));
    EXPECT_TRUE((z3 + z3 * z3).is_rational());

    const auto z7 = CyclotomicNumber::zeta_power(7, 1, 1);
    const auto z7_6 = CyclotomicNumber::zeta_power(7, 1, 6);
    const auto prod = (CyclotomicNumber(1) + z7) * (CyclotomicNumber(1) + z7_6);
    EXPECT_EQ(prod, CyclotomicNumber(2) + z7 + z7_6);
    const std::vector<Rational> basis = {1, 0, -1, -1, -1, -1};
    EXPECT_TRUE(std::equal(prod.coeffs().begin(), prod.coeffs().end(), basis.begin(), basis.end()));
}

TEST(Cyclotomic, Inverse)
{
    const auto x = CyclotomicNumber(2) + CyclotomicNumber::zeta_power(9, 2, 4);
    EXPECT_EQ(x * x.inverse(), CyclotomicNumber(1));
    EXPECT_THROW(CyclotomicNumber(0).inverse(), ZeroArgument);
}

TEST(Valuation, KnownValues)
{
    EXPECT_EQ(ell_valuation(CyclotomicNumber::zeta_power(3, 1, 1) - CyclotomicNumber(1), 3), 1);
    EXPECT_EQ(ell_valuation_at_level(CyclotomicNumber(-3), 3, 1), 2);
    EXPECT_EQ(ell_valuation(CyclotomicNumber::zeta_power(3, 2, 1) - CyclotomicNumber(1), 3), 1);
    EXPECT_EQ(ell_valuation(CyclotomicNumber(Rational(9, 2)), 3), 2);
    EXPECT_THROW(ell_valuation(CyclotomicNumber(0), 3), ZeroArgument);
}

namespace {

CyclotomicNumber random_element(std::mt19937_64& rng, std::int64_t ell, int level)
{
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Rational> c(static_cast<std::size_t>(cyclotomic_degree(ell, level)));
    for (auto& x : c)
        x = coeff(rng);
    return CyclotomicNumber(ell, level, c);
}

}  // namespace

TEST(Valuation, MultiplicativeOnRandomProducts)
{
    std::mt19937_64 rng(20240601);
    for (auto [ell, level] : {std::pair{3L, 1}, std::pair{3L, 2}, std::pair{5L, 1}, std::pair{7L, 1}}) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto x = random_element(rng, ell, level);
            const auto y = random_element(rng, ell, level);
            if (x.is_zero() || y.is_zero())
                continue;
            EXPECT_EQ(ell_valuation_at_level(x * y, ell, level),
                      ell_valuation_at_level(x, ell, level) + ell_valuation_at_level(y, ell, level));
        }
    }
}

TEST(Cyclotomic, EmbeddingCommutesWithArithmetic)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const auto x = random_element(rng, 3, 1);
        const auto y = random_element(rng, 3, 1);
        EXPECT_EQ((x * y).embed(3, 2), x.embed(3, 2) * y.embed(3, 2));
        EXPECT_EQ((x + y).embed(3, 2), x.embed(3, 2) + y.embed(3, 2));
        EXPECT_EQ(x * y.embed(3, 2), (x * y).embed(3, 2));
    }
    EXPECT_EQ(CyclotomicNumber::zeta_power(3, 1, 1).embed(3, 2), CyclotomicNumber::zeta_power(3, 2, 3));
}

TEST(FiniteFieldDlog, KnownValues)
{
    const auto ps = validate_parameters(2, 3, 2);
    const EigenvalueField field(ps);
    const auto& ext = field.extension();
    EXPECT_EQ(ext.size(), 4);
    EXPECT_EQ(ell_part_and_dlog(field, 1).j, 0);
    EXPECT_EQ(ell_part_and_dlog(field, field.epsilon()).j, 1);
    EXPECT_EQ(field.epsilon(), ext.primitive_element());
    EXPECT_EQ(ell_part_and_dlog(field, ext.mul(field.epsilon(), field.epsilon())).j, 2);
    EXPECT_THROW(ell_part_and_dlog(field, 0), ZeroElement);
}

class DlogCase : public testing::TestWithParam<testsupport::Case> {};

TEST_P(DlogCase, ExhaustiveDecomposition)
{
    const auto ps = testsupport::reduced(GetParam());
    const EigenvalueField field(ps);
    const auto& ext = field.extension();
    for (std::int64_t t = 1; t < ext.size(); ++t) {
        const auto e = static_cast<FiniteField::Element>(t);
        const auto split = ell_part_and_dlog(field, e);
        ASSERT_EQ(ext.mul(ext.pow(field.epsilon(), split.j), split.regular_part), e);
        ASSERT_NE(ext.order(split.regular_part) % ps.ell, 0);
        ASSERT_GE(split.j, 0);
        ASSERT_LT(split.j, ps.ell_power());
    }
}

INSTANTIATE_TEST_SUITE_P(Cases, DlogCase, testing::ValuesIn(testsupport::cases()), testsupport::CaseName());

TEST(Irreducibles, KnownValues)
{
    const auto f2 = FiniteField::get(2, 1);
    const auto deg1 = irreducible_polys(*f2, 1);
    ASSERT_EQ(deg1.size(), 2u);
    EXPECT_EQ(deg1[0], (FqPolynomial{0, 1}));
    EXPECT_EQ(deg1[1], (FqPolynomial{1, 1}));
    EXPECT_EQ(irreducible_polys(*f2, 2), (std::vector<FqPolynomial>{{1, 1, 1}}));
    EXPECT_EQ(irreducible_polys(*f2, 3).size(), 2u);
}

TEST(Irreducibles, CountsMatchMoebiusOracle)
{
    for (const auto& [key, value] : expected().at("irreducible_counts").items()) {
        const auto comma = key.find(',');
        const std::int64_t q = std::stoll(key.substr(0, comma));
        const int a = std::stoi(key.substr(comma + 1));
        const auto pp = prime_power_decomposition(q);
        const auto field = FiniteField::get(pp.prime, pp.exponent);
        EXPECT_EQ(static_cast<std::int64_t>(irreducible_polys(*field, a).size()), value.get<std::int64_t>()) << key;
        EXPECT_EQ(irreducible_count(q, a), value.get<std::int64_t>()) << key;
    }
}

TEST(FiniteFieldArith, FieldAxiomsSmall)
{
    for (auto [p, e] : {std::pair{2L, 2}, std::pair{3L, 2}, std::pair{2L, 3}, std::pair{5L, 1}}) {
        const auto f = FiniteField::get(p, e);
        for (std::int64_t a = 1; a < f->size(); ++a) {
            const auto x = static_cast<FiniteField::Element>(a);
            EXPECT_EQ(f->mul(x, f->inv(x)), 1u);
            EXPECT_EQ(f->add(x, f->neg(x)), 0u);
            EXPECT_EQ(f->exp(f->log(x)), x);
        }
        EXPECT_EQ(f->order(f->primitive_element()), f->size() - 1);
    }
}

TEST(FiniteFieldArith, ScaleLimit)
{
    EXPECT_THROW(FiniteField::get(2, 21), ScaleLimit);
}
