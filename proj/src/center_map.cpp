#include "cuspcenter/center_map.hpp"

#include <algorithm>
#include <sstream>

#include "cuspcenter/errors.hpp"
#include "cuspcenter/linear_algebra.hpp"

namespace cuspcenter {

namespace {

BlockVector zip(const BlockVector& a, const BlockVector& b, auto op)
{
    if (a.indices != b.indices)
        throw std::invalid_argument("block vectors over different index sets");
    BlockVector c = a;
    for (std::size_t k = 0; k < c.entries.size(); ++k)
        c.entries[k] = op(a.entries[k], b.entries[k]);
    return c;
}

BlockVector make_block(const CharacterContext& ctx, auto&& entry_of)
{
    const ParameterSet& ps = ctx.params();
    BlockVector v;
    v.ell = ps.ell;
    v.level = ps.r;
    v.indices = ctx.orbits().reps;
    for (auto i : v.indices) {
        CyclotomicNumber x = entry_of(i);
        v.entries.push_back(x.level() < ps.r ? x.embed(ps.ell, ps.r) : x);
    }
    return v;
}

}  // namespace

BlockVector operator+(const BlockVector& a, const BlockVector& b)
{
    return zip(a, b, [](const auto& x, const auto& y) { return x + y; });
}

BlockVector operator-(const BlockVector& a, const BlockVector& b)
{
    return zip(a, b, [](const auto& x, const auto& y) { return x - y; });
}

BlockVector operator*(const BlockVector& a, const BlockVector& b)
{
    return zip(a, b, [](const auto& x, const auto& y) { return x * y; });
}

BlockVector operator*(const Rational& c, const BlockVector& a)
{
    BlockVector out = a;
    for (auto& e : out.entries)
        e = CyclotomicNumber(c) * e;
    for (auto& e : out.entries)
        if (e.level() < a.level)
            e = e.embed(a.ell, a.level);
    return out;
}

bool operator==(const BlockVector& a, const BlockVector& b)
{
    return a.indices == b.indices && a.entries == b.entries;
}

std::string BlockVector::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < entries.size(); ++k)
        os << (k ? ", " : "") << entries[k].to_string();
    os << ")";
    return os.str();
}

BlockVector block_constant(const CharacterContext& ctx, const Rational& c)
{
    return make_block(ctx, [&](std::int64_t) { return CyclotomicNumber(c); });
}

BlockVector evaluate(const IntPolynomial& h, const BlockVector& v)
{
    BlockVector out = v;
    for (auto& e : out.entries) {
        e = h(e);
        if (e.level() < v.level)
            e = e.embed(v.ell, v.level);
    }
    return out;
}

bool is_ell_integral(const CyclotomicNumber& x, std::int64_t ell)
{
    const auto coeffs = x.coeffs();
    return std::all_of(coeffs.begin(), coeffs.end(), [&](const Rational& c) { return is_p_integral(c, ell); });
}

BlockVector delta_class(const ClassType& ct, const CharacterContext& ctx)
{
    const ParameterSet& ps = ctx.params();
    const Rational size(ct.class_size);
    const Rational dim_st(steinberg_dimension(ps)), dim_cusp(cuspidal_dimension(ps));
    BlockVector v = make_block(ctx, [&](std::int64_t i) {
        const Rational scale = size / (i == 0 ? dim_st : dim_cusp);
        return CyclotomicNumber(scale) * character_value(i, ct, ctx);
    });
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!is_ell_integral(v[k], ps.ell))
            throw IntegralityFailure("delta_" + std::to_string(v.indices[k]) + " of class " + ct.label()
                                     + " is not ell-integral: " + v[k].to_string());
    return v;
}

bool s_membership(const BlockVector& v, const ParameterSet& ps)
{
    if (v.size() < 2 || !v[0].is_rational() || !is_ell_integral(v[0], ps.ell))
        return false;
    const CyclotomicNumber& first = v[1];
    if (!first.is_rational() || !is_ell_integral(first, ps.ell))
        return false;
    for (std::size_t k = 2; k < v.size(); ++k)
        if (!(v[k] == first))
            return false;
    return congruent_mod_power(first.rational_part(), v[0].rational_part(), ps.ell, ps.r);
}

std::string bucket_name(Bucket b)
{
    switch (b) {
    case Bucket::NonPrimary: return "non-primary";
    case Bucket::SmallDegreeNonDiagonalizable: return "primary-small-degree-nondiagonalizable";
    case Bucket::SmallDegreeDiagonalizable: return "primary-small-degree-diagonalizable";
    case Bucket::DegreeN: return "degree-n";
    case Bucket::RealizedWitness: return "realized-witness";
    }
    return "unknown";
}

std::vector<SignsCheck> sign_congruences(const ParameterSet& ps)
{
    const ParameterSet red = reduce_parameters(ps);
    const BigInt q = static_cast<long>(red.q);
    std::vector<SignsCheck> out;
    for (std::int64_t v64 : divisors(red.n)) {
        SignsCheck check;
        check.v = static_cast<int>(v64);
        check.d = red.n / check.v;
        BigInt product = 1;
        for (int k = 1; k < check.v; ++k)
            product *= ipow(q, static_cast<unsigned long>(k * check.d)) - 1;
        check.lhs = Rational(product, BigInt(check.v));
        check.lhs.canonicalize();
        check.rhs = ipow(q, static_cast<unsigned long>(red.n * (check.v - 1) / 2));
        check.holds = congruent_mod_power(check.lhs, Rational(check.rhs), red.ell, red.r);
        out.push_back(std::move(check));
    }
    return out;
}

namespace {

bool is_regular_unipotent(const ClassType& ct)
{
    if (!ct.primary() || ct.factors.front().partition != Partition{ct.n})
        return false;
    const PrimePower pp = prime_power_decomposition(ct.q);
    const auto field = FiniteField::get(pp.prime, pp.exponent);
    return ct.factors.front().poly == FqPolynomial{field->neg(1), 1};
}

Bucket bucket_of(const ClassType& ct, const ClassPredicates& pr, int n)
{
    if (!pr.primary)
        return Bucket::NonPrimary;
    if (ct.eigenvalue_degree() == n)
        return Bucket::DegreeN;
    if (is_regular_unipotent(ct))
        return Bucket::RealizedWitness;
    return pr.diagonalizable ? Bucket::SmallDegreeDiagonalizable : Bucket::SmallDegreeNonDiagonalizable;
}

std::string where(const ClassType& ct, Bucket b)
{
    return "class " + ct.label() + " [" + bucket_name(b) + "]";
}

}  // namespace

CaseAnalysis case_analysis(const ParameterSet& ps, const std::vector<ClassType>& classes)
{
    const CharacterContext ctx(ps);
    const ParameterSet& red = ctx.params();
    CaseAnalysis out;
    out.params = red;
    for (const ClassType& ct : classes) {
        ClassRecord rec;
        rec.type = ct;
        rec.predicates = class_predicates(ct, red);
        rec.bucket = bucket_of(ct, rec.predicates, red.n);
        rec.delta = delta_class(ct, ctx);
        rec.in_s = s_membership(rec.delta, red);
        rec.block_congruent = true;
        for (std::size_t k = 1; k < rec.delta.size(); ++k) {
            const CyclotomicNumber diff = rec.delta[k] - rec.delta[0];
            if (!diff.is_zero() && ell_valuation_at_level(diff, red.ell, red.r) < 1)
                rec.block_congruent = false;
        }
        if (!rec.block_congruent)
            throw AssertionFailure(where(ct, rec.bucket) + ": delta entries differ modulo ell: " + rec.delta.to_string());
        if (rec.predicates.ell_regular)
            for (std::size_t k = 2; k < rec.delta.size(); ++k)
                if (!(rec.delta[k] == rec.delta[1]))
                    throw AssertionFailure(where(ct, rec.bucket) + ": ell-regular class with unequal cuspidal slots");
        if (rec.bucket == Bucket::DegreeN)
            out.degree_n_in_s += rec.in_s ? 1 : 0;
        else if (!rec.in_s)
            throw AssertionFailure(where(ct, rec.bucket) + ": delta = " + rec.delta.to_string() + " is not in S");
        ++out.counts[rec.bucket];
        out.records.push_back(std::move(rec));
    }
    out.signs = sign_congruences(red);
    for (const auto& s : out.signs)
        if (!s.holds)
            throw AssertionFailure("sign congruence fails for v = " + std::to_string(s.v) + ", d = " + std::to_string(s.d)
                                   + ": " + to_string(s.lhs) + " vs " + s.rhs.get_str());
    return out;
}

CaseAnalysis case_analysis(const ParameterSet& ps)
{
    return case_analysis(ps, enumerate_classes(reduce_parameters(ps)));
}

IdempotentChain reconstruct_scaled_idempotent(const CharacterContext& ctx, const std::vector<ClassType>& classes)
{
    const ParameterSet& ps = ctx.params();
    const auto it = std::find_if(classes.begin(), classes.end(), is_regular_unipotent);
    if (it == classes.end())
        throw AssertionFailure("regular unipotent class missing");
    IdempotentChain chain;
    chain.witness = it->label();
    chain.delta = delta_class(*it, ctx);
    const Rational L(BigInt(static_cast<long>(ps.ell_power())));
    if (!chain.delta[0].is_zero())
        throw AssertionFailure("regular unipotent: Steinberg slot is " + chain.delta[0].to_string() + ", not 0");
    for (std::size_t k = 1; k < chain.delta.size(); ++k) {
        if (!chain.delta[k].is_rational())
            throw AssertionFailure("regular unipotent: slot " + std::to_string(chain.delta.indices[k]) + " is irrational");
        const Rational u = chain.delta[k].rational_part() / L;
        if (k == 1)
            chain.unit = u;
        else if (u != chain.unit)
            throw AssertionFailure("regular unipotent: slots differ");
    }
    if (chain.unit == 0 || !is_p_unit(chain.unit, ps.ell))
        throw AssertionFailure("regular unipotent: " + to_string(chain.unit) + " is not an ell-unit");
    chain.result = block_constant(ctx, L) - Rational(1 / chain.unit) * chain.delta;
    for (std::size_t k = 0; k < chain.result.size(); ++k)
        if (!(chain.result[k] == CyclotomicNumber(k == 0 ? L : Rational(0)).embed(ps.ell, ps.r)))
            throw AssertionFailure("scaled idempotent reconstruction gave " + chain.result.to_string());
    return chain;
}

BlockVector gamma(const CharacterContext& ctx, const IntPolynomial& m)
{
    const ParameterSet& ps = ctx.params();
    const std::int64_t L = ps.ell_power();
    BlockVector g = make_block(ctx, [&](std::int64_t i) {
        if (i == 0)
            return CyclotomicNumber(static_cast<long>(ps.n));
        CyclotomicNumber s(0);
        std::int64_t e = i % L;
        for (int k = 0; k < ps.n; ++k) {
            s += CyclotomicNumber::zeta_power(ps.ell, ps.r, e);
            e = e * (ps.q % L) % L;
        }
        return s;
    });
    const IntPolynomial dm = m.derivative();
    if (m.degree() != static_cast<int>(g.size()))
        throw AssertionFailure("deg m = " + std::to_string(m.degree()) + " differs from |I| = " + std::to_string(g.size()));
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!m(g[k]).is_zero())
            throw AssertionFailure("m(gamma) != 0 in slot " + std::to_string(g.indices[k]));
        // A simple root in every slot: no proper divisor of m kills gamma.
        if (dm(g[k]).is_zero())
            throw AssertionFailure("m'(gamma) = 0 in slot " + std::to_string(g.indices[k]));
    }
    return g;
}

namespace {

FqPolynomial minimal_polynomial_of_epsilon(const CharacterContext& ctx)
{
    const EigenvalueField& field = ctx.field();
    const FiniteField& ext = field.extension();
    const FiniteField& base = field.base();
    const std::int64_t q = ctx.params().q;
    // prod_k (X - eps^{q^k}) over the extension, high coefficient last.
    std::vector<FiniteField::Element> poly = {1};
    FiniteField::Element root = field.epsilon();
    for (int k = 0; k < ctx.params().n; ++k) {
        std::vector<FiniteField::Element> next(poly.size() + 1, 0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] = ext.add(next[j + 1], poly[j]);
            next[j] = ext.sub(next[j], ext.mul(root, poly[j]));
        }
        poly = std::move(next);
        root = ext.pow(root, q);
    }
    FqPolynomial out;
    for (auto c : poly) {
        std::optional<FiniteField::Element> pre;
        for (std::int64_t x = 0; x < base.size() && !pre; ++x)
            if (field.embed(static_cast<FiniteField::Element>(x)) == c)
                pre = static_cast<FiniteField::Element>(x);
        if (!pre)
            throw AssertionFailure("minimal polynomial of eps is not defined over F_q");
        out.push_back(*pre);
    }
    return out;
}

}  // namespace

GammaChain reconstruct_gamma(const CharacterContext& ctx, const std::vector<ClassType>& classes,
                             const BlockVector& expected_gamma)
{
    const ParameterSet& ps = ctx.params();
    const FqPolynomial poly = minimal_polynomial_of_epsilon(ctx);
    const auto it = std::find_if(classes.begin(), classes.end(), [&](const ClassType& ct) {
        return ct.primary() && ct.factors.front().poly == poly && ct.factors.front().partition == Partition{1};
    });
    if (it == classes.end())
        throw AssertionFailure("no class with eigenvalue eps");

    GammaChain chain;
    chain.witness = it->label();
    chain.delta = delta_class(*it, ctx);
    const Rational dim(cuspidal_dimension(ps));
    chain.unit = Rational(it->class_size) / dim;
    if ((ps.n - 1) % 2 != 0)
        chain.unit = -chain.unit;
    if (!is_p_unit(chain.unit, ps.ell))
        throw AssertionFailure("normalizing factor " + to_string(chain.unit) + " is not an ell-unit");
    chain.normalized = Rational(1 / chain.unit) * chain.delta;
    if (!chain.normalized[0].is_rational())
        throw AssertionFailure("Steinberg slot is irrational");
    const Rational L(BigInt(static_cast<long>(ps.ell_power())));
    chain.correction = (Rational(ps.n) - chain.normalized[0].rational_part()) / L;
    if (!is_p_integral(chain.correction, ps.ell))
        throw AssertionFailure("Steinberg slot " + to_string(chain.normalized[0].rational_part())
                               + " is not congruent to n modulo ell^r");
    BlockVector idempotent = make_block(ctx, [&](std::int64_t i) { return CyclotomicNumber(i == 0 ? L : Rational(0)); });
    chain.result = chain.normalized + chain.correction * idempotent;
    if (!(chain.result == expected_gamma))
        throw AssertionFailure("reconstructed " + chain.result.to_string() + " differs from gamma "
                               + expected_gamma.to_string());
    return chain;
}

IntPolynomial express_in_gamma(const BlockVector& v, const BlockVector& gamma, std::size_t dimension)
{
    if (v.indices != gamma.indices)
        throw InvalidInput("express_in_gamma: index sets differ");
    const std::int64_t ell = gamma.ell;
    const int level = gamma.level;
    const std::size_t width = static_cast<std::size_t>(level == 0 ? 1 : cyclotomic_degree(ell, level));
    auto lift = [&](const CyclotomicNumber& x) { return x.level() < level ? x.embed(ell, level) : x; };

    std::vector<BlockVector> powers;
    BlockVector power = gamma;
    for (auto& e : power.entries)
        e = lift(CyclotomicNumber(1));
    for (std::size_t j = 0; j < dimension; ++j) {
        powers.push_back(power);
        power = power * gamma;
    }
    RationalMatrix a(v.size() * width, dimension);
    std::vector<Rational> b(v.size() * width);
    for (std::size_t s = 0; s < v.size(); ++s) {
        const auto target = lift(v[s]);
        for (std::size_t c = 0; c < width; ++c) {
            b[s * width + c] = target.coeffs()[c];
            for (std::size_t j = 0; j < dimension; ++j)
                a(s * width + c, j) = lift(powers[j][s]).coeffs()[c];
        }
    }
    const auto solution = a.solve(b);
    if (!solution)
        throw NoSolution(v.to_string() + " is not in the Q-span of the powers of gamma");
    IntPolynomial h(*solution);
    if (!is_ell_integral(h, ell))
        throw IntegralityFailure(v.to_string() + " = h(gamma) with h = " + to_string(h) + " not ell-integral");
    return h;
}

IntPolynomial express_in_gamma(const BlockVector& v, const InvariantRingData& ring)
{
    const CharacterContext ctx(ring.params);
    return express_in_gamma(v, gamma(ctx, ring.m), ring.dimension());
}

GOfGamma g_of_gamma(const CharacterContext& ctx, const InvariantRingData& ring, const BlockVector& gamma)
{
    const ParameterSet& ps = ctx.params();
    GOfGamma out;
    const auto [quotient, remainder] = divmod(ring.m, IntPolynomial::linear(Rational(ps.n)));
    if (!remainder.is_zero())
        throw AssertionFailure("Y - n does not divide m");
    out.g = quotient;
    out.value = evaluate(out.g, gamma);
    if (!out.value[0].is_rational())
        throw AssertionFailure("g(gamma) has an irrational Steinberg slot");
    for (std::size_t k = 1; k < out.value.size(); ++k)
        if (!out.value[k].is_zero())
            throw AssertionFailure("g(gamma) is nonzero in slot " + std::to_string(out.value.indices[k]));
    out.a = out.value[0].rational_part();
    if (out.a == 0)
        throw AssertionFailure("g(n) = 0");
    out.valuation = ord_p(out.a, ps.ell);
    if (out.valuation != ps.r)
        throw AssertionFailure("ord_ell(g(n)) = " + std::to_string(out.valuation) + ", expected r = "
                               + std::to_string(ps.r));
    return out;
}

std::string EndoRingResult::presentation() const
{
    return "W(k)[Y]/(" + to_string(m) + ")";
}

EndoRingResult verify_endo_ring(const ParameterSet& ps, const std::vector<ClassType>* classes)
{
    EndoRingResult out;
    out.input = ps;
    out.params = reduce_parameters(ps);
    out.action_exponent = out.params.q;
    const CharacterContext ctx(out.params);
    const InvariantRingData ring = invariant_ring(out.params);
    out.m = ring.m;

    std::vector<ClassType> enumerated;
    if (!classes) {
        enumerated = enumerate_classes(out.params);
        classes = &enumerated;
    }
    out.analysis = case_analysis(out.params, *classes);
    out.gamma = gamma(ctx, ring.m);

    for (const auto& rec : out.analysis.records) {
        Certificate cert{rec.type.label(), rec.bucket, rec.delta, {}};
        cert.h = express_in_gamma(rec.delta, out.gamma, ring.dimension());
        if (!(evaluate(cert.h, out.gamma) == rec.delta))
            throw AssertionFailure("certificate for " + cert.class_label + " does not reproduce delta");
        out.certificates.push_back(std::move(cert));
    }

    out.idempotent = reconstruct_scaled_idempotent(ctx, *classes);
    out.gamma_chain = reconstruct_gamma(ctx, *classes, out.gamma);
    out.g = g_of_gamma(ctx, ring, out.gamma);

    for (std::size_t k = 0; k < out.gamma.size(); ++k) {
        const std::int64_t i = out.gamma.indices[k];
        out.action.push_back({i, i == 0 ? "generalized Steinberg" : "supercuspidal pi_" + std::to_string(i),
                              out.gamma[k]});
    }
    return out;
}

std::vector<std::string> gl2_delta_mismatches(const ParameterSet& ps)
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

    std::vector<std::string> mismatches;
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        const auto& cls = table.classes[c];
        const BlockVector formula = delta_class(cls.type, ctx);
        auto scaled = [&](const UnitySum& value, const BigInt& dim) {
            auto x = unity_sum_to_rational(value, ring);
            for (auto& coeff : x)
                coeff *= Rational(cls.size) / Rational(dim);
            return x;
        };
        bool agree = to_unity_ring(formula[0], ring) == scaled(st->values[c], st->dimension);
        for (std::size_t k = 0; k < indices.size(); ++k) {
            const auto& row = table.characters[table.standard_rows + k];
            agree = agree && to_unity_ring(formula[k + 1], ring) == scaled(row.values[c], row.dimension);
        }
        if (!agree)
            mismatches.push_back(cls.type.label());
    }
    return mismatches;
}

}  // namespace cuspcenter
