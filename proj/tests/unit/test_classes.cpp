#include "cuspcenter/classes.hpp"
#include "cuspcenter/errors.hpp"
#include "support.hpp"

using namespace cuspcenter;
using testsupport::expected;

namespace {

std::pair<std::int64_t, int> parse_key(const std::string& key)
{
    const auto comma = key.find(',');
    return {std::stoll(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
}

const ClassType& find_class(const std::vector<ClassType>& classes, const std::string& label)
{
    for (const auto& c : classes)
        if (c.label() == label)
            return c;
    throw std::runtime_error("no class " + label);
}

std::vector<long> sorted_sizes(const std::vector<ClassType>& classes)
{
    std::vector<long> out;
    for (const auto& c : classes)
        out.push_back(c.class_size.get_si());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Classes, CountsMatchGeneratingFunctionOracle)
{
    for (const auto& [key, value] : expected().at("class_numbers").items()) {
        const auto [q, n] = parse_key(key);
        EXPECT_EQ(gl_class_count(q, n), BigInt(value.get<long>())) << key;
        EXPECT_EQ(static_cast<long>(enumerate_classes(q, n).size()), value.get<long>()) << key;
    }
}

TEST(Classes, SizesMatchBruteForceOracle)
{
    for (const auto& [key, value] : expected().at("census").items()) {
        const auto [q, n] = parse_key(key);
        EXPECT_EQ(gl_order(q, n), BigInt(value.at("order").get<long>()));
        EXPECT_EQ(sorted_sizes(enumerate_classes(q, n)), value.at("sizes").get<std::vector<long>>()) << key;
    }
}

TEST(Classes, ClassEquation)
{
    for (auto [q, n] : {std::pair{2L, 2}, {2L, 3}, {2L, 4}, {3L, 2}, {3L, 3}, {3L, 4}, {4L, 2}, {4L, 3}, {8L, 2}}) {
        BigInt total = 0;
        for (const auto& c : enumerate_classes(q, n))
            total += c.class_size;
        EXPECT_EQ(total, gl_order(q, n)) << q << "," << n;
    }
}

TEST(Classes, CentralizerKnownValues)
{
    const auto gl22 = enumerate_classes(2, 2);
    const auto& unip = find_class(gl22, "{X + 1:[2]}");
    EXPECT_EQ(unip.centralizer_order, 2);
    EXPECT_EQ(unip.class_size, 3);
    const auto& ell = find_class(gl22, "{X^2 + X + 1:[1]}");
    EXPECT_EQ(ell.centralizer_order, 3);
    EXPECT_EQ(ell.class_size, 2);
    const auto gl32 = enumerate_classes(2, 3);
    const auto& unip3 = find_class(gl32, "{X + 1:[3]}");
    EXPECT_EQ(unip3.centralizer_order, expected().at("centralizers").at("2,3,regular_unipotent").get<long>());
    EXPECT_EQ(unip3.class_size, 42);
}

TEST(Classes, GreenFormula)
{
    EXPECT_EQ(green_z(2, {1}), 1);
    EXPECT_EQ(green_z(2, {2}), 2);
    EXPECT_EQ(green_z(2, {1, 1}), 6);
    EXPECT_EQ(green_z(3, {1, 1, 1}), gl_order(3, 3));
}

TEST(Classes, PredicateKnownValues)
{
    const auto p1 = validate_parameters(2, 3, 2);
    const auto gl22 = enumerate_classes(2, 2);
    const auto unip = class_predicates(find_class(gl22, "{X + 1:[2]}"), p1);
    EXPECT_TRUE(unip.primary);
    EXPECT_FALSE(unip.diagonalizable);
    EXPECT_EQ(unip.ord_ell_of_size, 1);
    const auto ell = class_predicates(find_class(gl22, "{X^2 + X + 1:[1]}"), p1);
    EXPECT_TRUE(ell.primary);
    EXPECT_TRUE(ell.diagonalizable);
    EXPECT_EQ(ell.ord_ell_of_size, 0);
    EXPECT_FALSE(ell.ell_regular);

    const auto p2 = validate_parameters(2, 7, 3);
    const auto mixed = find_class(enumerate_classes(2, 3), "{X + 1:[1]}{X^2 + X + 1:[1]}");
    EXPECT_EQ(mixed.class_size, 56);
    const auto pr = class_predicates(mixed, p2);
    EXPECT_FALSE(pr.primary);
    EXPECT_EQ(pr.ord_ell_of_size, 1);
}

TEST(Classes, DeterministicOrder)
{
    const auto a = enumerate_classes(3, 3);
    const auto b = enumerate_classes(3, 3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        EXPECT_EQ(a[k].label(), b[k].label());
    // degree profile descending: the first class is elliptic, the last central
    EXPECT_EQ(a.front().factors.front().degree(), 3);
    EXPECT_EQ(a.back().factors.size(), 1u);
    EXPECT_EQ(a.back().factors.front().degree(), 1);
}

class OracleGroup : public testing::TestWithParam<std::pair<std::int64_t, int>> {};

TEST_P(OracleGroup, TypeCensusEqualsMatrixCensus)
{
    const auto [q, n] = GetParam();
    const auto brute = matrix_oracle(q, n, 5000);
    const auto types = type_census(q, n);
    EXPECT_EQ(brute.group_order, types.group_order);
    ASSERT_EQ(brute.classes.size(), types.classes.size());
    for (std::size_t k = 0; k < brute.classes.size(); ++k) {
        EXPECT_EQ(brute.classes[k].type, types.classes[k].type);
        EXPECT_EQ(brute.classes[k].size, types.classes[k].size);
        EXPECT_EQ(brute.classes[k].centralizer_order, types.classes[k].centralizer_order);
    }
}

TEST_P(OracleGroup, RepresentativeMatricesHaveTheirType)
{
    const auto [q, n] = GetParam();
    const auto pp = prime_power_decomposition(q);
    const auto field = FiniteField::get(pp.prime, pp.exponent);
    for (const auto& ct : enumerate_classes(q, n))
        EXPECT_EQ(type_of_matrix(representative_matrix(ct, *field), n, *field), ct) << ct.label();
}

INSTANTIATE_TEST_SUITE_P(Groups, OracleGroup,
                         testing::Values(std::pair{2L, 2}, std::pair{3L, 2}, std::pair{4L, 2}, std::pair{2L, 3},
                                         std::pair{5L, 2}, std::pair{8L, 2}),
                         [](const auto& info) {
                             return "GL" + std::to_string(info.param.second) + "_F" + std::to_string(info.param.first);
                         });

TEST(Classes, MatrixOracleScaleLimit)
{
    EXPECT_THROW(matrix_oracle(16, 3, 5000), ScaleLimit);
    EXPECT_THROW(enumerate_classes(2, 3, EnumerationLimits{1 << 16, 3}), ScaleLimit);
}

class CaseClasses : public testing::TestWithParam<testsupport::Case> {};

TEST_P(CaseClasses, CentralizerValuationForEveryClass)
{
    const auto ps = testsupport::reduced(GetParam());
    for (const auto& ct : enumerate_classes(ps)) {
        const auto pr = class_predicates(ct, ps);
        if (!(pr.primary && pr.diagonalizable))
            EXPECT_EQ(pr.ord_ell_of_size, ps.r) << ct.label();
        EXPECT_EQ(pr.ord_ell_of_size, ord_p(ct.class_size, ps.ell));
    }
}

TEST_P(CaseClasses, EllPartOfGroupOrder)
{
    const auto ps = testsupport::reduced(GetParam());
    EXPECT_EQ(ord_p(gl_order(ps.q, ps.n), ps.ell), ps.r);
}

INSTANTIATE_TEST_SUITE_P(Cases, CaseClasses, testing::ValuesIn(testsupport::cases()), testsupport::CaseName());
