#include "cuspcenter/errors.hpp"
#include "cuspcenter/invariants.hpp"
#include "support.hpp"

using namespace cuspcenter;
using testsupport::expected;
using testsupport::poly;

TEST(Frobenius, KnownValues)
{
    const auto x = CycGroupRingElement::monomial(3, 1);
    EXPECT_EQ(frobenius_map(x, 2), CycGroupRingElement::monomial(3, 2));
    const auto f = x + CycGroupRingElement::monomial(3, 2);
    EXPECT_EQ(frobenius_map(f, 2), f);
    EXPECT_EQ(frobenius_map(f, 1), f);
    const auto y = CycGroupRingElement::monomial(9, 5) + Rational(3) * CycGroupRingElement::monomial(9, 7);
    EXPECT_EQ(frobenius_map(y, 1), y);
}

TEST(Orbits, KnownValues)
{
    const auto o1 = orbit_structure(validate_parameters(2, 3, 2));
    EXPECT_EQ(o1.reps, (std::vector<std::int64_t>{0, 1}));
    const auto o2 = orbit_structure(validate_parameters(2, 7, 3));
    EXPECT_EQ(o2.reps, (std::vector<std::int64_t>{0, 1, 3}));
    EXPECT_EQ(o2.orbits[1], (std::vector<std::int64_t>{1, 2, 4}));
    EXPECT_EQ(o2.orbits[2], (std::vector<std::int64_t>{3, 6, 5}));
    const auto o3 = orbit_structure(validate_parameters(8, 3, 2));
    ASSERT_EQ(o3.size(), 5u);
    for (std::size_t k = 1; k < o3.size(); ++k)
        EXPECT_EQ(o3.orbits[k].size(), 2u);
}

TEST(Omega, KnownValues)
{
    const auto a = omega_and_min_poly(validate_parameters(2, 3, 2), 1);
    EXPECT_EQ(a.omega, CyclotomicNumber(-1));
    EXPECT_EQ(a.min_poly, poly({1, 1}));
    EXPECT_EQ(omega_and_min_poly(validate_parameters(2, 7, 3), 1).min_poly, poly({2, 1, 1}));
    EXPECT_EQ(omega_and_min_poly(validate_parameters(8, 3, 2), 2).min_poly.degree(), 3);
}

TEST(Uniformizer, KnownValues)
{
    EXPECT_EQ(uniformizer_check(validate_parameters(2, 3, 2), 1).valuation, 2);
    EXPECT_EQ(uniformizer_check(validate_parameters(2, 7, 3), 1).valuation, 3);
    EXPECT_EQ(uniformizer_check(validate_parameters(8, 3, 2), 2).valuation, 2);
}

TEST(Pullback, KnownValues)
{
    EXPECT_EQ(pullback_mod_ell_check(validate_parameters(2, 3, 2)).multiplicity, 2);
    EXPECT_EQ(pullback_mod_ell_check(validate_parameters(2, 7, 3)).multiplicity, 3);
    EXPECT_EQ(pullback_mod_ell_check(validate_parameters(4, 5, 2)).multiplicity, 2);
}

TEST(InvariantRing, SquareOfFInP1)
{
    const auto ring = invariant_ring(validate_parameters(2, 3, 2));
    const CycGroupRingElement two(3, Rational(2));
    EXPECT_EQ(ring.f * ring.f, ring.f + two);
}

TEST(InvariantRing, ExpressOrbitSumTrivialReps)
{
    const auto ring = invariant_ring(validate_parameters(2, 7, 3));
    EXPECT_EQ(express_orbit_sum(ring, 1), poly({0, 1}));
    EXPECT_EQ(express_orbit_sum(ring, 0), poly({1}));
}

TEST(InvariantRing, P3OrbitThree)
{
    const auto ring = invariant_ring(validate_parameters(8, 3, 2));
    const auto h = express_orbit_sum(ring, 3);
    EXPECT_LE(h.degree(), 4);
    EXPECT_EQ(evaluate(h, ring.f), orbit_sum(ring.orbits, ring.orbits.orbit_index[3]));
}

class InvariantCase : public testing::TestWithParam<testsupport::Case> {
protected:
    const nlohmann::json& oracle() const { return expected().at("cases").at(GetParam().name); }
};

TEST_P(InvariantCase, MinimalPolynomialMatchesOracle)
{
    const auto ring = invariant_ring(testsupport::reduced(GetParam()));
    EXPECT_EQ(ring.m, testsupport::poly_from_json(oracle().at("m")));
    EXPECT_EQ(ring.m.degree(), oracle().at("expected_degree").get<int>());
    EXPECT_EQ(static_cast<int>(ring.dimension()), ring.m.degree());
}

TEST_P(InvariantCase, OrbitsMatchOracle)
{
    const auto orbits = orbit_structure(testsupport::reduced(GetParam()));
    std::vector<std::vector<std::int64_t>> sorted;
    for (auto o : orbits.orbits) {
        std::sort(o.begin(), o.end());
        sorted.push_back(o);
    }
    EXPECT_EQ(sorted, oracle().at("orbits").get<std::vector<std::vector<std::int64_t>>>());
}

TEST_P(InvariantCase, ShortOrbitsOnlyAtZero)
{
    const auto ps = testsupport::reduced(GetParam());
    const auto orbits = orbits_of_multiplication(ps.q, ps.ell_power());
    for (std::int64_t a = 0; a < ps.ell_power(); ++a) {
        const auto& orbit = orbits.orbits[orbits.orbit_index[a]];
        if (static_cast<int>(orbit.size()) < ps.n)
            EXPECT_EQ(a, 0);
    }
}

TEST_P(InvariantCase, UniformizerAtEveryLevel)
{
    const auto ps = testsupport::reduced(GetParam());
    for (int i = 1; i <= ps.r; ++i) {
        const auto rep = uniformizer_check(ps, i);
        EXPECT_TRUE(rep.passed);
        EXPECT_EQ(rep.valuation, ps.n);
        EXPECT_EQ(rep.norm_valuation, ps.n);
    }
}

TEST_P(InvariantCase, PullbackMultiplicityIsN)
{
    const auto ps = testsupport::reduced(GetParam());
    EXPECT_EQ(pullback_mod_ell_check(ps).multiplicity, oracle().at("pullback_multiplicity").get<int>());
    EXPECT_EQ(pullback_mod_ell_check(ps).multiplicity, ps.n);
}

TEST_P(InvariantCase, MIsPowerOfLinearModEll)
{
    const auto ps = testsupport::reduced(GetParam());
    const auto ring = invariant_ring(ps);
    EXPECT_TRUE(is_power_of_linear_mod_ell(ring.m, ps.n, ps.ell));
    EXPECT_TRUE(oracle().at("m_is_power_mod_ell").get<bool>());
    EXPECT_FALSE(is_power_of_linear_mod_ell(ring.m + poly({1}), ps.n, ps.ell));
}

TEST_P(InvariantCase, FIsInvariantAndAnnihilatedByM)
{
    const auto ps = testsupport::reduced(GetParam());
    const auto ring = invariant_ring(ps);
    EXPECT_EQ(frobenius_map(ring.f, ps.q), ring.f);
    EXPECT_TRUE(evaluate(ring.m, ring.f).is_zero());
    EXPECT_TRUE(has_integer_coefficients(ring.m));
}

TEST_P(InvariantCase, InvarianceIsConstancyOnOrbits)
{
    const auto ps = testsupport::reduced(GetParam());
    const auto orbits = orbit_structure(ps);
    const std::int64_t N = ps.ell_power();
    for (std::size_t k = 0; k < orbits.size(); ++k)
        EXPECT_EQ(frobenius_map(orbit_sum(orbits, k), ps.q), orbit_sum(orbits, k));
    for (std::int64_t b = 1; b < N; ++b) {
        const auto x = CycGroupRingElement::monomial(N, b);
        EXPECT_NE(frobenius_map(x, ps.q), x);
        // Moving one unit of mass between two orbit members breaks invariance.
        const auto& orbit = orbits.orbits[orbits.orbit_index[b]];
        auto y = orbit_sum(orbits, orbits.orbit_index[b]);
        y[orbit.front()] += 1;
        EXPECT_NE(frobenius_map(y, ps.q), y);
    }
}

TEST_P(InvariantCase, OrbitSumsArePolynomialsInF)
{
    const auto ps = testsupport::reduced(GetParam());
    const auto ring = invariant_ring(ps);
    for (std::size_t k = 0; k < ring.orbits.size(); ++k) {
        const auto h = express_orbit_sum(ring, ring.orbits.reps[k]);
        EXPECT_LT(h.degree(), static_cast<int>(ring.dimension()));
        EXPECT_TRUE(is_ell_integral(h, ps.ell));
        EXPECT_EQ(evaluate(h, ring.f), orbit_sum(ring.orbits, k));
    }
}

INSTANTIATE_TEST_SUITE_P(Cases, InvariantCase, testing::ValuesIn(testsupport::cases()), testsupport::CaseName());
