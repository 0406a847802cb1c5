#include "cuspcenter/characters.hpp"
#include "cuspcenter/errors.hpp"
#include "support.hpp"

using namespace cuspcenter;

namespace {

const ClassType& find_class(const std::vector<ClassType>& classes, const std::string& label)
{
    for (const auto& c : classes)
        if (c.label() == label)
            return c;
    throw std::runtime_error("no class " + label);
}

}  // namespace

TEST(Characters, CuspidalKnownValuesGL2F2)
{
    const CharacterContext ctx(validate_parameters(2, 3, 2));
    const auto classes = enumerate_classes(2, 2);
    EXPECT_EQ(cuspidal_value(1, find_class(classes, "{X + 1:[2]}"), ctx), CyclotomicNumber(-1));
    EXPECT_EQ(cuspidal_value(1, find_class(classes, "{X^2 + X + 1:[1]}"), ctx), CyclotomicNumber(1));
    EXPECT_EQ(cuspidal_value(1, find_class(classes, "{X + 1:[1,1]}"), ctx), CyclotomicNumber(1));
}

TEST(Characters, SteinbergKnownValues)
{
    for (auto [q, ell] : {std::pair{2L, 3L}, std::pair{4L, 5L}, std::pair{5L, 3L}, std::pair{8L, 3L}}) {
        const CharacterContext ctx(validate_parameters(q, ell, 2));
        const auto classes = enumerate_classes(q, 2);
        EXPECT_EQ(steinberg_value(find_class(classes, "{X + 1:[1,1]}"), ctx), CyclotomicNumber(q));
    }
    const CharacterContext ctx(validate_parameters(2, 3, 2));
    EXPECT_EQ(steinberg_value(find_class(enumerate_classes(2, 2), "{X^2 + X + 1:[1]}"), ctx), CyclotomicNumber(-1));
}

TEST(Characters, Dimensions)
{
    const auto p4 = validate_parameters(4, 5, 2);
    EXPECT_EQ(cuspidal_dimension(p4), 3);
    EXPECT_EQ(steinberg_dimension(p4), 4);
    const auto p5 = validate_parameters(3, 5, 4);
    EXPECT_EQ(cuspidal_dimension(p5), 2 * 8 * 26);
    EXPECT_EQ(steinberg_dimension(p5), 729);
}

class CharacterCase : public testing::TestWithParam<testsupport::Case> {};

TEST_P(CharacterCase, VanishingPattern)
{
    const auto ps = testsupport::reduced(GetParam());
    const CharacterContext ctx(ps);
    for (const auto& ct : enumerate_classes(ps)) {
        if (!ct.primary())
            for (auto i : ctx.cuspidal_indices())
                EXPECT_TRUE(cuspidal_value(i, ct, ctx).is_zero()) << ct.label();
        if (!ct.semisimple())
            EXPECT_TRUE(steinberg_value(ct, ctx).is_zero()) << ct.label();
    }
}

TEST_P(CharacterCase, CharacterValuesOnIdentityAreDimensions)
{
    const auto ps = testsupport::reduced(GetParam());
    const CharacterContext ctx(ps);
    const auto classes = enumerate_classes(ps);
    const auto field = FiniteField::get(ps.p, ps.k);
    std::string label = "{" + fq_to_string({field->neg(1), 1}) + ":[1";
    for (int k = 1; k < ps.n; ++k)
        label += ",1";
    const auto& one = find_class(classes, label + "]}");
    ASSERT_EQ(one.class_size, 1);
    EXPECT_EQ(steinberg_value(one, ctx), CyclotomicNumber(Rational(steinberg_dimension(ps))));
    for (auto i : ctx.cuspidal_indices())
        EXPECT_EQ(cuspidal_value(i, one, ctx), CyclotomicNumber(Rational(cuspidal_dimension(ps))));
}

INSTANTIATE_TEST_SUITE_P(Cases, CharacterCase, testing::ValuesIn(testsupport::cases()), testsupport::CaseName());

TEST(GL2Table, S3TableAtQ2)
{
    const auto table = gl2_table_oracle(2);
    std::vector<long> dims;
    for (const auto& ch : table.characters)
        dims.push_back(ch.dimension.get_si());
    std::sort(dims.begin(), dims.end());
    EXPECT_EQ(dims, (std::vector<long>{1, 1, 2}));
    EXPECT_TRUE(check_orthogonality(table).passed());
}

TEST(GL2Table, DegreesAtQ4)
{
    const auto table = gl2_table_oracle(4);
    bool saw_cuspidal = false, saw_steinberg = false;
    for (const auto& ch : table.characters) {
        if (ch.kind == GL2CharacterKind::Cuspidal) {
            EXPECT_EQ(ch.dimension, 3);
            saw_cuspidal = true;
        }
        if (ch.kind == GL2CharacterKind::Steinberg) {
            EXPECT_EQ(ch.dimension, 4);
            saw_steinberg = true;
        }
    }
    EXPECT_TRUE(saw_cuspidal && saw_steinberg);
}

TEST(GL2Table, OrthogonalityAcrossQ)
{
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto rep = check_orthogonality(gl2_table_oracle(q));
        EXPECT_TRUE(rep.rows) << q;
        EXPECT_TRUE(rep.columns) << q;
        EXPECT_TRUE(rep.dimensions) << q;
        EXPECT_TRUE(rep.class_sizes) << q;
    }
    EXPECT_THROW(gl2_table_oracle(64), ScaleLimit);
}

TEST(GL2Table, CuspidalAtEllipticQ8)
{
    const auto ps = validate_parameters(8, 3, 2);
    const auto table = gl2_table_oracle(8);
    const std::int64_t N = table.order;
    const auto v = gl2_theta_exponent(1, ps);
    EXPECT_EQ(N / std::gcd(v, N), 9);
    for (const auto& c : table.classes) {
        if (c.kind != GL2ClassKind::Elliptic)
            continue;
        UnitySum expected;
        expected[v * c.k1 % N] -= 1;
        expected[v * c.k1 * 8 % N] -= 1;
        EXPECT_EQ(gl2_cuspidal_values(8, v, c), expected);
    }
}

class GL2Comparison : public testing::TestWithParam<std::pair<std::int64_t, std::int64_t>> {};

TEST_P(GL2Comparison, FormulaValuesMatchClassicalTable)
{
    const auto [q, ell] = GetParam();
    const auto ps = validate_parameters(q, ell, 2);
    const auto cmp = compare_with_gl2_oracle(ps);
    EXPECT_FALSE(cmp.empty());
    for (const auto& v : cmp)
        EXPECT_TRUE(v.agree) << v.class_label << " index " << v.index;
}

TEST_P(GL2Comparison, SteinbergSignOnSemisimpleClasses)
{
    const auto [q, ell] = GetParam();
    const auto ps = validate_parameters(q, ell, 2);
    const auto classes = enumerate_classes(q, 2);
    std::size_t checked = 0;
    for (const auto& v : compare_with_gl2_oracle(ps)) {
        if (v.index != 0 || !find_class(classes, v.class_label).semisimple())
            continue;
        EXPECT_TRUE(v.agree) << v.class_label;
        ++checked;
    }
    std::size_t semisimple = 0;
    for (const auto& c : classes)
        semisimple += c.semisimple();
    EXPECT_EQ(checked, semisimple);
}

INSTANTIATE_TEST_SUITE_P(Oracle, GL2Comparison,
                         testing::Values(std::pair{2L, 3L}, std::pair{4L, 5L}, std::pair{8L, 3L}, std::pair{5L, 3L}),
                         [](const auto& info) {
                             return "q" + std::to_string(info.param.first) + "_l" + std::to_string(info.param.second);
                         });
