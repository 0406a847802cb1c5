#include "cuspcenter/deformation.hpp"

#include <algorithm>
#include <sstream>

#include "cuspcenter/errors.hpp"

namespace cuspcenter {

CycMatrix CycMatrix::identity(std::size_t n)
{
    CycMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = CyclotomicNumber(1);
    return m;
}

CyclotomicNumber CycMatrix::trace() const
{
    CyclotomicNumber t(0);
    for (std::size_t i = 0; i < n_; ++i)
        t += (*this)(i, i);
    return t;
}

CycMatrix CycMatrix::pow(unsigned exponent) const
{
    CycMatrix result = identity(n_), base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result = result * base;
        exponent >>= 1;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b)
{
    const std::size_t n = a.size();
    CycMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b(k, j).is_zero())
                    c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b)
{
    CycMatrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            c(i, j) += b(i, j);
    return c;
}

bool operator==(const CycMatrix& a, const CycMatrix& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!(a(i, j) - b(i, j)).is_zero())
                return false;
    return true;
}

std::vector<CyclotomicNumber> characteristic_polynomial(const CycMatrix& a)
{
    const std::size_t n = a.size();
    std::vector<CyclotomicNumber> c(n + 1, CyclotomicNumber(0));
    c[n] = CyclotomicNumber(1);
    CycMatrix m(n);
    for (std::size_t k = 1; k <= n; ++k) {
        CycMatrix shift = CycMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            shift(i, i) = c[n - k + 1];
        m = a * m + shift;
        c[n - k] = CyclotomicNumber(Rational(-1, static_cast<long>(k))) * (a * m).trace();
    }
    return c;
}

std::string DeformationPoint::label() const
{
    std::ostringstream os;
    os << "a=" << a;
    if (generic) {
        os << " generic";
    } else {
        os << " c=(";
        for (std::size_t k = 0; k < entries.size(); ++k)
            os << (k ? "," : "") << entries[k];
        os << ")";
    }
    return os.str();
}

namespace {

CycMatrix psi_matrix(const ParameterSet& ps, std::int64_t a)
{
    const std::int64_t L = ps.ell_power();
    CycMatrix psi(static_cast<std::size_t>(ps.n));
    std::int64_t e = ((a % L) + L) % L;
    for (int k = 0; k < ps.n; ++k) {
        psi(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = CyclotomicNumber::zeta_power(ps.ell, ps.r, e);
        e = e * (ps.q % L) % L;
    }
    return psi;
}

void assert_commutation(const DeformationPoint& pt, const ParameterSet& ps)
{
    if (!(pt.fr * pt.psi == pt.psi.pow(static_cast<unsigned>(ps.q)) * pt.fr))
        throw RelationFailure("Fr Psi Fr^-1 != Psi^q at " + pt.label());
    if (characteristic_polynomial(pt.fr).front().is_zero())
        throw RelationFailure("Fr is singular at " + pt.label());
}

}  // namespace

DeformationPoint make_point(const ParameterSet& ps, std::int64_t a, const std::vector<Rational>& entries)
{
    const ParameterSet red = reduce_parameters(ps);
    const auto n = static_cast<std::size_t>(red.n);
    if (entries.size() != n)
        throw InvalidInput("make_point needs n free entries");
    DeformationPoint pt;
    pt.a = ((a % red.ell_power()) + red.ell_power()) % red.ell_power();
    pt.entries = entries;
    pt.psi = psi_matrix(red, pt.a);
    pt.fr = CycMatrix(n);
    for (std::size_t k = 1; k < n; ++k)
        pt.fr(k - 1, k) = CyclotomicNumber(entries[k]);
    pt.fr(n - 1, 0) = CyclotomicNumber(entries[0]);
    assert_commutation(pt, red);
    return pt;
}

DeformationPoint make_generic_point(const ParameterSet& ps)
{
    const ParameterSet red = reduce_parameters(ps);
    const auto n = static_cast<std::size_t>(red.n);
    DeformationPoint pt;
    pt.generic = true;
    pt.psi = CycMatrix::identity(n);
    pt.fr = CycMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            pt.fr(i, j) = CyclotomicNumber(1);
    assert_commutation(pt, red);
    return pt;
}

std::vector<DeformationPoint> sample_points(const ParameterSet& ps)
{
    const ParameterSet red = reduce_parameters(ps);
    const std::vector<Rational> units = {Rational(1), Rational(-1), Rational(2)};
    const auto n = static_cast<std::size_t>(red.n);
    std::size_t combos = 1;
    for (std::size_t k = 0; k < n; ++k)
        combos *= units.size();
    std::vector<DeformationPoint> out;
    for (std::int64_t a = 0; a < red.ell_power(); ++a) {
        for (std::size_t idx = 0; idx < combos; ++idx) {
            std::vector<Rational> entries(n);
            std::size_t v = idx;
            for (std::size_t k = 0; k < n; ++k) {
                entries[k] = units[v % units.size()];
                v /= units.size();
            }
            out.push_back(make_point(red, a, entries));
        }
        if (a == 0)
            out.push_back(make_generic_point(red));
    }
    return out;
}

PointReport check_relations(const DeformationPoint& pt, const ParameterSet& ps, const InvariantRingData& ring)
{
    const ParameterSet red = reduce_parameters(ps);
    PointReport rep;
    rep.label = pt.label();
    rep.a = pt.a;
    rep.psi_identity = pt.psi == CycMatrix::identity(pt.psi.size());
    rep.branch = rep.psi_identity ? "Y-n relation" : "T relations";
    assert_commutation(pt, red);
    rep.commutation = true;
    rep.trace = pt.psi.trace();
    rep.m_value = ring.m(rep.trace);
    const auto c = characteristic_polynomial(pt.fr);
    const auto n = static_cast<std::size_t>(red.n);
    for (std::size_t k = 1; k <= n; ++k)
        rep.t.push_back(c[n - k]);

    if (!rep.m_value.is_zero())
        throw AssertionFailure("m(Tr Psi) != 0 at " + rep.label);
    if (rep.psi_identity) {
        if (!(rep.trace - CyclotomicNumber(static_cast<long>(red.n))).is_zero())
            throw AssertionFailure("Tr Psi - n != 0 at " + rep.label);
    } else {
        for (std::size_t k = 0; k + 1 < n; ++k)
            if (!rep.t[k].is_zero())
                throw AssertionFailure("T_" + std::to_string(k + 1) + " != 0 at " + rep.label);
    }
    if (!rep.t.back().is_rational() || !is_p_unit(rep.t.back().rational_part(), red.ell))
        throw AssertionFailure("T_n is not a unit at " + rep.label);
    const CyclotomicNumber y_minus_n = rep.trace - CyclotomicNumber(static_cast<long>(red.n));
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (!(y_minus_n * rep.t[k]).is_zero())
            throw AssertionFailure("(Y - n) T_" + std::to_string(k + 1) + " != 0 at " + rep.label);
    return rep;
}

std::string Relation::to_string() const
{
    const std::string y = cuspcenter::to_string(y_part);
    if (t_index == 0)
        return y;
    return "(" + y + ")*T_" + std::to_string(t_index);
}

std::string APiPresentation::to_string() const
{
    std::ostringstream os;
    os << "W(k)[";
    for (std::size_t k = 0; k < generators.size(); ++k)
        os << (k ? ", " : "") << generators[k];
    os << "]/(";
    for (std::size_t k = 0; k < relations.size(); ++k)
        os << (k ? ", " : "") << relations[k].to_string();
    os << ")";
    return os.str();
}

namespace {

int resolve_t_count(const ParameterSet& red, int t_count)
{
    if (t_count == 0)
        return red.n;
    if (t_count < 1 || t_count > red.n)
        throw InvalidInput("T-count must lie between 1 and n");
    return t_count;
}

APiPresentation build(const IntPolynomial& f, const Rational& root, int t_count)
{
    APiPresentation p;
    p.f = f;
    p.i0_root = root;
    p.t_count = t_count;
    p.generators.push_back("Y");
    for (int k = 1; k < t_count; ++k)
        p.generators.push_back("T_" + std::to_string(k));
    p.generators.push_back("T_" + std::to_string(t_count) + "^{+-1}");
    p.relations.push_back({f, 0});
    for (int k = 1; k < t_count; ++k)
        p.relations.push_back({IntPolynomial::linear(root), k});
    return p;
}

}  // namespace

APiPresentation emit_a_pi_presentation(const ParameterSet& ps, const IntPolynomial& m, int t_count)
{
    const ParameterSet red = reduce_parameters(ps);
    // n/d of the input equals n after reduction.
    Rational root(ps.n, ps.d);
    root.canonicalize();
    return build(m, root, resolve_t_count(red, t_count));
}

APiPresentation factored_presentation(const ParameterSet& ps, int t_count)
{
    const ParameterSet red = reduce_parameters(ps);
    const OrbitStructure orbits = orbit_structure(red);
    const std::int64_t L = red.ell_power();
    CycPolynomial f = CycPolynomial::constant(CyclotomicNumber(1));
    for (auto i : orbits.reps) {
        CyclotomicNumber s(0);
        std::int64_t e = i;
        for (int k = 0; k < red.n; ++k) {
            s += CyclotomicNumber::zeta_power(red.ell, red.r, e);
            e = e * (red.q % L) % L;
        }
        f = f * CycPolynomial::linear(s);
    }
    return build(to_rational_polynomial(f), Rational(red.n), resolve_t_count(red, t_count));
}

bool vanishes(const APiPresentation& pres, const PointReport& point)
{
    for (const auto& rel : pres.relations) {
        CyclotomicNumber value = rel.y_part(point.trace);
        if (rel.t_index > 0)
            value *= point.t[static_cast<std::size_t>(rel.t_index - 1)];
        if (!value.is_zero())
            return false;
    }
    return true;
}

DeformationSuite run_deformation_suite(const ParameterSet& ps, int t_count)
{
    DeformationSuite suite;
    suite.params = reduce_parameters(ps);
    const InvariantRingData ring = invariant_ring(suite.params);
    suite.a_pi = emit_a_pi_presentation(ps, ring.m, t_count);
    suite.factored = factored_presentation(ps, t_count);
    suite.same_f = suite.factored.f == ring.m;

    suite.a_pi_vanishes = true;
    suite.factored_vanishes = true;
    for (const auto& pt : sample_points(suite.params)) {
        PointReport rep = check_relations(pt, suite.params, ring);
        suite.a_pi_vanishes = suite.a_pi_vanishes && vanishes(suite.a_pi, rep);
        suite.factored_vanishes = suite.factored_vanishes && vanishes(suite.factored, rep);
        if (std::find(suite.traces.begin(), suite.traces.end(), rep.trace) == suite.traces.end())
            suite.traces.push_back(rep.trace);
        suite.points.push_back(std::move(rep));
    }
    std::sort(suite.traces.begin(), suite.traces.end());

    const bool squarefree = gcd(ring.m, ring.m.derivative()).degree() == 0;
    const bool all_roots = std::all_of(suite.traces.begin(), suite.traces.end(),
                                       [&](const CyclotomicNumber& y) { return ring.m(y).is_zero(); });
    suite.root_set = squarefree && all_roots && static_cast<int>(suite.traces.size()) == ring.m.degree();
    return suite;
}

}  // namespace cuspcenter
