#include "cuspcenter/characters.hpp"

#include <algorithm>
#include <sstream>

#include "cuspcenter/errors.hpp"

namespace cuspcenter {


CharacterContext::CharacterContext(const ParameterSet& ps)
    : params_(reduce_parameters(ps)), field_(params_), orbits_(orbit_structure(params_))
{
}

std::vector<std::int64_t> CharacterContext::cuspidal_indices() const
{
    return {orbits_.reps.begin() + 1, orbits_.reps.end()};
}

CyclotomicNumber CharacterContext::theta(std::int64_t i, FiniteField::Element t) const
{
    const EllPart part = ell_part_and_dlog(field_, t);
    const std::int64_t L = params_.ell_power();
    const std::int64_t e = static_cast<std::int64_t>((static_cast<__int128>(i % L) * part.j) % L);
    return CyclotomicNumber::zeta_power(params_.ell, params_.r, e);
}

BigInt cuspidal_dimension(const ParameterSet& ps)
{
    const ParameterSet red = reduce_parameters(ps);
    BigInt dim = 1;
    for (int j = 1; j < red.n; ++j)
        dim *= ipow(BigInt(static_cast<long>(red.q)), static_cast<unsigned long>(j)) - 1;
    return dim;
}

BigInt steinberg_dimension(const ParameterSet& ps)
{
    const ParameterSet red = reduce_parameters(ps);
    return ipow(BigInt(static_cast<long>(red.q)), static_cast<unsigned long>(red.n * (red.n - 1) / 2));
}

CharacterFamily character_family(std::int64_t i, const ParameterSet& ps)
{
    if (i == 0)
        return {CharacterKind::Steinberg, 0, steinberg_dimension(ps)};
    return {CharacterKind::Cuspidal, i, cuspidal_dimension(ps)};
}

CyclotomicNumber cuspidal_value(std::int64_t i, const ClassType& ct, const CharacterContext& ctx)
{
    const ParameterSet& ps = ctx.params();
    if (!ct.primary())
        return CyclotomicNumber(0).embed(ps.ell, ps.r);
    const ClassFactor& factor = ct.factors.front();
    const int a = factor.degree();
    const int x = static_cast<int>(factor.partition.size());
    const auto t = ctx.field().root_of(factor.poly);
    if (!t)
        throw AssertionFailure("eigenvalue of " + ct.label() + " not found in F_{q^n}");

    BigInt scalar = (ps.n - x) % 2 == 0 ? 1 : -1;
    const BigInt qa = ipow(BigInt(static_cast<long>(ps.q)), static_cast<unsigned long>(a));
    for (int k = 1; k < x; ++k)
        scalar *= ipow(qa, static_cast<unsigned long>(k)) - 1;

    const std::int64_t L = ps.ell_power();
    CyclotomicNumber trace = CyclotomicNumber(0).embed(ps.ell, ps.r);
    std::int64_t exponent = ((i % L) + L) % L;
    for (int k = 0; k < a; ++k) {
        trace += ctx.theta(exponent, *t);
        exponent = (exponent * (ps.q % L)) % L;
    }
    return CyclotomicNumber(Rational(scalar)) * trace;
}

CyclotomicNumber steinberg_value(const ClassType& ct, const CharacterContext& ctx)
{
    const ParameterSet& ps = ctx.params();
    if (!ct.semisimple())
        return CyclotomicNumber(0).embed(ps.ell, ps.r);
    const long e = ord_p(ct.centralizer_order, ps.p);
    BigInt value = ipow(BigInt(static_cast<long>(ps.p)), static_cast<unsigned long>(e));
    if ((ps.n - ct.rank_sum()) % 2 != 0)
        value = -value;
    return CyclotomicNumber(Rational(value)).embed(ps.ell, ps.r);
}

CyclotomicNumber character_value(std::int64_t i, const ClassType& ct, const CharacterContext& ctx)
{
    return i == 0 ? steinberg_value(ct, ctx) : cuspidal_value(i, ct, ctx);
}

std::vector<BigInt> cyclotomic_polynomial(std::int64_t order)
{
    if (order < 1)
        throw InvalidInput("cyclotomic order must be positive");
    std::vector<BigInt> poly(static_cast<std::size_t>(order) + 1);
    poly[0] = -1;
    poly.back() = 1;
    for (std::int64_t d : divisors(order)) {
        if (d == order)
            continue;
        const auto divisor = cyclotomic_polynomial(d);
        // Exact division by a monic polynomial.
        const std::size_t dd = divisor.size() - 1;
        std::vector<BigInt> quotient(poly.size() - dd);
        for (std::size_t k = poly.size(); k-- > dd;) {
            const BigInt c = poly[k];
            quotient[k - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j)
                poly[k - dd + j] -= c * divisor[j];
        }
        poly = std::move(quotient);
    }
    return poly;
}

UnityRing::UnityRing(std::int64_t order) : order_(order), phi_(cuspcenter::cyclotomic_polynomial(order)) {}

namespace {

template <typename T>
std::vector<T> reduce_dense(std::vector<T> a, const std::vector<BigInt>& phi, std::int64_t order)
{
    const std::size_t deg = phi.size() - 1;
    a.resize(std::max(a.size(), static_cast<std::size_t>(order)));
    for (std::size_t k = a.size(); k-- > deg;) {
        if (a[k] == 0)
            continue;
        const T c = a[k];
        for (std::size_t j = 0; j <= deg; ++j)
            a[k - deg + j] -= c * phi[j];
    }
    a.resize(deg);
    return a;
}

}  // namespace

std::vector<Rational> UnityRing::reduce(const std::vector<Rational>& dense) const
{
    return reduce_dense(dense, phi_, order_);
}

std::vector<BigInt> UnityRing::reduce(const std::vector<BigInt>& dense) const
{
    return reduce_dense(dense, phi_, order_);
}

std::string GL2Character::label() const
{
    std::ostringstream os;
    switch (kind) {
    case GL2CharacterKind::Linear: os << "U(" << u1 << ")"; break;
    case GL2CharacterKind::Steinberg: os << "V(" << u1 << ")"; break;
    case GL2CharacterKind::PrincipalSeries: os << "W(" << u1 << "," << u2 << ")"; break;
    case GL2CharacterKind::Cuspidal: os << "X(" << u1 << ")"; break;
    }
    return os.str();
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n)
{
    return ((a % n) + n) % n;
}

void add_term(UnitySum& s, std::int64_t exponent, long coeff, std::int64_t order)
{
    long& c = s[mod(exponent, order)];
    c += coeff;
    if (c == 0)
        s.erase(mod(exponent, order));
}

}  // namespace

UnitySum gl2_cuspidal_values(std::int64_t q, std::int64_t v, const GL2Class& c)
{
    const std::int64_t N = q * q - 1;
    UnitySum s;
    switch (c.kind) {
    case GL2ClassKind::Central: add_term(s, v * c.k1, static_cast<long>(q - 1), N); break;
    case GL2ClassKind::CentralUnipotent: add_term(s, v * c.k1, -1, N); break;
    case GL2ClassKind::Split: break;
    case GL2ClassKind::Elliptic:
        add_term(s, v * c.k1, -1, N);
        add_term(s, v * q * c.k1, -1, N);
        break;
    }
    return s;
}

namespace {

UnitySum linear_values(std::int64_t q, std::int64_t u, const GL2Class& c, bool steinberg)
{
    const std::int64_t N = q * q - 1;
    UnitySum s;
    switch (c.kind) {
    case GL2ClassKind::Central: add_term(s, 2 * u * c.k1, steinberg ? static_cast<long>(q) : 1, N); break;
    case GL2ClassKind::CentralUnipotent:
        if (!steinberg)
            add_term(s, 2 * u * c.k1, 1, N);
        break;
    case GL2ClassKind::Split: add_term(s, u * (c.k1 + c.k2), 1, N); break;
    case GL2ClassKind::Elliptic: add_term(s, u * c.k1 % N * (q + 1), steinberg ? -1 : 1, N); break;
    }
    return s;
}

UnitySum principal_series_values(std::int64_t q, std::int64_t u1, std::int64_t u2, const GL2Class& c)
{
    const std::int64_t N = q * q - 1;
    UnitySum s;
    switch (c.kind) {
    case GL2ClassKind::Central: add_term(s, (u1 + u2) * c.k1, static_cast<long>(q + 1), N); break;
    case GL2ClassKind::CentralUnipotent: add_term(s, (u1 + u2) * c.k1, 1, N); break;
    case GL2ClassKind::Split:
        add_term(s, u1 * c.k1 + u2 * c.k2, 1, N);
        add_term(s, u1 * c.k2 + u2 * c.k1, 1, N);
        break;
    case GL2ClassKind::Elliptic: break;
    }
    return s;
}

// Preimage of a subfield element of the extension under the embedding.
FiniteField::Element preimage(const std::vector<FiniteField::Element>& embedding, FiniteField::Element y)
{
    const auto it = std::find(embedding.begin(), embedding.end(), y);
    if (it == embedding.end())
        throw std::logic_error("element is not in the base field");
    return static_cast<FiniteField::Element>(it - embedding.begin());
}

}  // namespace

GL2Table gl2_table_oracle(std::int64_t q, const std::vector<std::int64_t>& theta_list, std::int64_t max_order)
{
    const PrimePower pp = prime_power_decomposition(q);
    if (pp.prime == 0)
        throw InvalidInput("q is not a prime power");
    const std::int64_t N = q * q - 1;
    if (N > max_order)
        throw ScaleLimit("GL_2 oracle bound exceeded: q^2 - 1 = " + std::to_string(N));

    const auto base = FiniteField::get(pp.prime, pp.exponent);
    const auto ext = FiniteField::get(pp.prime, 2 * pp.exponent);
    const auto embedding = field_embedding(*base, *ext);
    const auto types = enumerate_classes(q, 2);

    GL2Table table;
    table.q = q;
    table.order = N;
    table.group_order = gl_order(q, 2);

    auto element = [&](std::int64_t k) { return preimage(embedding, ext->exp(mod(k, N))); };
    auto linear = [&](std::int64_t k) { return FqPolynomial{base->neg(element(k)), 1}; };
    auto attach = [&](GL2Class c, std::vector<ClassFactor> factors) {
        const auto it = std::find_if(types.begin(), types.end(), [&](const ClassType& ct) {
            return ct.factors.size() == factors.size()
                   && std::is_permutation(ct.factors.begin(), ct.factors.end(), factors.begin());
        });
        if (it == types.end())
            throw AssertionFailure("GL_2 oracle class has no matching type");
        c.type = *it;
        table.classes.push_back(std::move(c));
    };

    const BigInt bq = static_cast<long>(q);
    for (std::int64_t s = 0; s < q - 1; ++s) {
        const std::int64_t k = (q + 1) * s;
        attach({GL2ClassKind::Central, k, k, BigInt(1), {}}, {{linear(k), {1, 1}}});
    }
    for (std::int64_t s = 0; s < q - 1; ++s) {
        const std::int64_t k = (q + 1) * s;
        attach({GL2ClassKind::CentralUnipotent, k, k, bq * bq - 1, {}}, {{linear(k), {2}}});
    }
    for (std::int64_t s1 = 0; s1 < q - 1; ++s1)
        for (std::int64_t s2 = s1 + 1; s2 < q - 1; ++s2) {
            const std::int64_t k1 = (q + 1) * s1, k2 = (q + 1) * s2;
            attach({GL2ClassKind::Split, k1, k2, bq * (bq + 1), {}}, {{linear(k1), {1}}, {linear(k2), {1}}});
        }
    for (std::int64_t k = 1; k < N; ++k) {
        if (k % (q + 1) == 0 || mod(k * q, N) < k)
            continue;
        const auto t = ext->exp(k), tq = ext->exp(mod(k * q, N));
        const FqPolynomial poly = {preimage(embedding, ext->mul(t, tq)),
                                   base->neg(preimage(embedding, ext->add(t, tq))), 1};
        attach({GL2ClassKind::Elliptic, k, mod(k * q, N), bq * (bq - 1), {}}, {{poly, {1}}});
    }

    auto add_row = [&](GL2Character chi, auto&& value_of) {
        for (const auto& c : table.classes)
            chi.values.push_back(value_of(c));
        table.characters.push_back(std::move(chi));
    };
    for (std::int64_t u = 0; u < q - 1; ++u)
        add_row({GL2CharacterKind::Linear, u, 0, BigInt(1), {}},
                [&](const GL2Class& c) { return linear_values(q, u, c, false); });
    for (std::int64_t u = 0; u < q - 1; ++u)
        add_row({GL2CharacterKind::Steinberg, u, 0, bq, {}},
                [&](const GL2Class& c) { return linear_values(q, u, c, true); });
    for (std::int64_t u1 = 0; u1 < q - 1; ++u1)
        for (std::int64_t u2 = u1 + 1; u2 < q - 1; ++u2)
            add_row({GL2CharacterKind::PrincipalSeries, u1, u2, bq + 1, {}},
                    [&](const GL2Class& c) { return principal_series_values(q, u1, u2, c); });
    for (std::int64_t v = 1; v < N; ++v) {
        if (v % (q + 1) == 0 || mod(v * q, N) < v)
            continue;
        add_row({GL2CharacterKind::Cuspidal, v, 0, bq - 1, {}},
                [&](const GL2Class& c) { return gl2_cuspidal_values(q, v, c); });
    }
    table.standard_rows = table.characters.size();
    for (std::int64_t v : theta_list)
        add_row({GL2CharacterKind::Cuspidal, mod(v, N), 0, bq - 1, {}},
                [&](const GL2Class& c) { return gl2_cuspidal_values(q, v, c); });
    return table;
}

namespace {

// sum_c weight_c * a_c * conj(b_c) reduced in Q(zeta_N).
std::vector<BigInt> hermitian_sum(const std::vector<const UnitySum*>& a, const std::vector<const UnitySum*>& b,
                                  const std::vector<BigInt>& weights, const UnityRing& ring)
{
    const std::int64_t N = ring.order();
    std::vector<BigInt> dense(static_cast<std::size_t>(N));
    for (std::size_t c = 0; c < a.size(); ++c)
        for (const auto& [ea, ca] : *a[c])
            for (const auto& [eb, cb] : *b[c])
                dense[static_cast<std::size_t>(mod(ea - eb, N))] += weights[c] * ca * cb;
    return ring.reduce(dense);
}

bool is_constant(const std::vector<BigInt>& v, const BigInt& value)
{
    if (v.empty())
        return value == 0;
    if (v[0] != value)
        return false;
    return std::all_of(v.begin() + 1, v.end(), [](const BigInt& x) { return x == 0; });
}

}  // namespace

OrthogonalityReport check_orthogonality(const GL2Table& table)
{
    const UnityRing ring(table.order);
    const std::size_t rows = table.standard_rows, cols = table.classes.size();
    OrthogonalityReport report;

    std::vector<BigInt> sizes, ones(rows, BigInt(1));
    BigInt total = 0;
    report.class_sizes = cols == static_cast<std::size_t>(table.order);
    for (const auto& c : table.classes) {
        sizes.push_back(c.size);
        total += c.size;
        report.class_sizes = report.class_sizes && c.size == c.type.class_size;
    }
    report.class_sizes = report.class_sizes && total == table.group_order;

    BigInt dims = 0;
    for (std::size_t r = 0; r < rows; ++r)
        dims += table.characters[r].dimension * table.characters[r].dimension;
    report.dimensions = rows == cols && dims == table.group_order;

    report.rows = true;
    for (std::size_t r1 = 0; r1 < rows && report.rows; ++r1)
        for (std::size_t r2 = r1; r2 < rows && report.rows; ++r2) {
            std::vector<const UnitySum*> a, b;
            for (std::size_t c = 0; c < cols; ++c) {
                a.push_back(&table.characters[r1].values[c]);
                b.push_back(&table.characters[r2].values[c]);
            }
            report.rows = is_constant(hermitian_sum(a, b, sizes, ring), r1 == r2 ? table.group_order : BigInt(0));
        }

    report.columns = true;
    for (std::size_t c1 = 0; c1 < cols && report.columns; ++c1)
        for (std::size_t c2 = c1; c2 < cols && report.columns; ++c2) {
            std::vector<const UnitySum*> a, b;
            for (std::size_t r = 0; r < rows; ++r) {
                a.push_back(&table.characters[r].values[c1]);
                b.push_back(&table.characters[r].values[c2]);
            }
            const BigInt expected = c1 == c2 ? BigInt(table.group_order / table.classes[c1].size) : BigInt(0);
            report.columns = is_constant(hermitian_sum(a, b, ones, ring), expected);
        }
    return report;
}

std::int64_t gl2_theta_exponent(std::int64_t i, const ParameterSet& ps)
{
    const ParameterSet red = reduce_parameters(ps);
    if (red.n != 2)
        throw InvalidInput("the GL_2 oracle needs n = 2 after reduction");
    const std::int64_t N = red.q * red.q - 1;
    const std::int64_t L = red.ell_power();
    const std::int64_t M = N / L;
    const std::int64_t u = mod_inverse(M % L, L);
    return static_cast<std::int64_t>((static_cast<__int128>(M) * mod(i, L) % N * u) % N);
}

std::vector<Rational> to_unity_ring(const CyclotomicNumber& x, const UnityRing& ring)
{
    const std::int64_t N = ring.order();
    std::vector<Rational> dense(static_cast<std::size_t>(N));
    const auto coeffs = x.coeffs();
    if (x.level() == 0) {
        dense[0] = coeffs[0];
        return ring.reduce(dense);
    }
    const std::int64_t root_order = ipow64(x.ell(), static_cast<unsigned>(x.level()));
    if (N % root_order != 0)
        throw InvalidInput("Q(zeta_N) does not contain this root of unity");
    const std::int64_t step = N / root_order;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        dense[static_cast<std::size_t>(static_cast<std::int64_t>(j) * step % N)] += coeffs[j];
    return ring.reduce(dense);
}

std::vector<Rational> unity_sum_to_rational(const UnitySum& s, const UnityRing& ring)
{
    std::vector<Rational> dense(static_cast<std::size_t>(ring.order()));
    for (const auto& [e, c] : s)
        dense[static_cast<std::size_t>(mod(e, ring.order()))] += c;
    return ring.reduce(dense);
}

std::vector<ValueComparison> compare_with_gl2_oracle(const ParameterSet& ps)
{
    const CharacterContext ctx(ps);
    const ParameterSet& red = ctx.params();
    const auto indices = ctx.cuspidal_indices();
    std::vector<std::int64_t> thetas;
    for (auto i : indices)
        thetas.push_back(gl2_theta_exponent(i, red));
    const GL2Table table = gl2_table_oracle(red.q, thetas);
    const UnityRing ring(table.order);

    const auto st = std::find_if(table.characters.begin(), table.characters.end(), [](const GL2Character& chi) {
        return chi.kind == GL2CharacterKind::Steinberg && chi.u1 == 0;
    });
    const std::size_t st_row = static_cast<std::size_t>(st - table.characters.begin());

    std::vector<ValueComparison> out;
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        const ClassType& ct = table.classes[c].type;
        out.push_back({ct.label(), 0,
                       to_unity_ring(steinberg_value(ct, ctx), ring)
                           == unity_sum_to_rational(table.characters[st_row].values[c], ring)});
        for (std::size_t k = 0; k < indices.size(); ++k) {
            const auto& row = table.characters[table.standard_rows + k];
            out.push_back({ct.label(), indices[k],
                           to_unity_ring(cuspidal_value(indices[k], ct, ctx), ring)
                               == unity_sum_to_rational(row.values[c], ring)});
        }
    }
    return out;
}

}  // namespace cuspcenter
