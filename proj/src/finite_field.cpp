#include "cuspcenter/finite_field.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cuspcenter/errors.hpp"
#include "cuspcenter/number.hpp"

namespace cuspcenter {

namespace {

using PrimePoly = std::vector<std::int64_t>;

// Remainder of a modulo a monic b over F_p.
PrimePoly prime_remainder(PrimePoly a, const PrimePoly& b, std::int64_t p)
{
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::int64_t c = a.back() % p;
        if (c != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j <= db; ++j)
                a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
        }
        a.pop_back();
    }
    return a;
}

PrimePoly prime_monic(std::int64_t p, int degree, std::int64_t index)
{
    PrimePoly poly(static_cast<std::size_t>(degree) + 1);
    for (int j = 0; j < degree; ++j) {
        poly[static_cast<std::size_t>(j)] = index % p;
        index /= p;
    }
    poly.back() = 1;
    return poly;
}

bool prime_irreducible(const PrimePoly& f, std::int64_t p)
{
    const int e = static_cast<int>(f.size()) - 1;
    for (int b = 1; 2 * b <= e; ++b) {
        const std::int64_t count = ipow64(p, static_cast<unsigned>(b));
        for (std::int64_t idx = 0; idx < count; ++idx) {
            const PrimePoly rem = prime_remainder(f, prime_monic(p, b, idx), p);
            bool zero = true;
            for (auto c : rem)
                zero = zero && c == 0;
            if (zero)
                return false;
        }
    }
    return true;
}

// Lexicographic order of (c_{e-1}, ..., c_0) coincides with the order of
// the base-p encoding with c_j as digit j.
PrimePoly smallest_irreducible(std::int64_t p, int e)
{
    const std::int64_t count = ipow64(p, static_cast<unsigned>(e));
    for (std::int64_t idx = 0; idx < count; ++idx) {
        PrimePoly f = prime_monic(p, e, idx);
        if (prime_irreducible(f, p))
            return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

std::shared_ptr<const FiniteField> FiniteField::get(std::int64_t p, int e)
{
    static std::mutex mutex;
    static std::map<std::pair<std::int64_t, int>, std::shared_ptr<const FiniteField>> table;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = table[{p, e}];
    if (!slot)
        slot = std::make_shared<const FiniteField>(p, e);
    return slot;
}

FiniteField::FiniteField(std::int64_t p, int e) : p_(p), e_(e)
{
    if (!is_prime(p) || e < 1)
        throw InvalidInput("finite field needs a prime characteristic and positive degree");
    const BigInt size = ipow(BigInt(static_cast<long>(p)), static_cast<unsigned long>(e));
    if (size > kMaxSize)
        throw ScaleLimit("finite field of size " + size.get_str() + " exceeds the supported bound");
    size_ = size.get_si();
    modulus_ = smallest_irreducible(p, e);

    exp_.resize(static_cast<std::size_t>(size_ - 1));
    log_.assign(static_cast<std::size_t>(size_), -1);
    for (Element g = 1; g < size_; ++g) {
        Element x = 1;
        std::int64_t k = 0;
        bool primitive = true;
        do {
            if (k == size_ - 1) {
                primitive = false;
                break;
            }
            exp_[static_cast<std::size_t>(k)] = x;
            x = slow_mul(x, g);
            ++k;
        } while (x != 1);
        if (primitive && k == size_ - 1) {
            primitive_ = g;
            break;
        }
    }
    if (size_ == 2)
        primitive_ = 1;
    for (std::int64_t k = 0; k < size_ - 1; ++k)
        log_[exp_[static_cast<std::size_t>(k)]] = k;
}

std::vector<std::int64_t> FiniteField::digits(Element a) const
{
    std::vector<std::int64_t> d(static_cast<std::size_t>(e_));
    std::int64_t v = a;
    for (int j = 0; j < e_; ++j) {
        d[static_cast<std::size_t>(j)] = v % p_;
        v /= p_;
    }
    return d;
}

FiniteField::Element FiniteField::from_digits(const std::vector<std::int64_t>& digits) const
{
    std::int64_t v = 0;
    for (int j = e_ - 1; j >= 0; --j) {
        const std::int64_t d = j < static_cast<int>(digits.size()) ? digits[static_cast<std::size_t>(j)] : 0;
        v = v * p_ + ((d % p_) + p_) % p_;
    }
    return static_cast<Element>(v);
}

FiniteField::Element FiniteField::add(Element a, Element b) const
{
    if (p_ == 2)
        return a ^ b;
    std::int64_t x = a, y = b, out = 0, place = 1;
    for (int j = 0; j < e_; ++j) {
        out += ((x % p_ + y % p_) % p_) * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return static_cast<Element>(out);
}

FiniteField::Element FiniteField::neg(Element a) const
{
    if (p_ == 2)
        return a;
    std::int64_t x = a, out = 0, place = 1;
    for (int j = 0; j < e_; ++j) {
        out += ((p_ - x % p_) % p_) * place;
        x /= p_;
        place *= p_;
    }
    return static_cast<Element>(out);
}

FiniteField::Element FiniteField::sub(Element a, Element b) const
{
    return add(a, neg(b));
}

FiniteField::Element FiniteField::slow_mul(Element a, Element b) const
{
    const auto da = digits(a), db = digits(b);
    PrimePoly prod(static_cast<std::size_t>(2 * e_ - 1));
    for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
    return from_digits(prime_remainder(prod, modulus_, p_));
}

FiniteField::Element FiniteField::mul(Element a, Element b) const
{
    if (a == 0 || b == 0)
        return 0;
    const std::int64_t k = (log_[a] + log_[b]) % (size_ - 1);
    return exp_[static_cast<std::size_t>(k)];
}

FiniteField::Element FiniteField::inv(Element a) const
{
    if (a == 0)
        throw ZeroElement("inverse of zero in a finite field");
    return exp_[static_cast<std::size_t>((size_ - 1 - log_[a]) % (size_ - 1))];
}

FiniteField::Element FiniteField::pow(Element a, std::int64_t exponent) const
{
    if (a == 0)
        return exponent == 0 ? 1 : 0;
    const std::int64_t m = size_ - 1;
    const std::int64_t e = ((exponent % m) + m) % m;
    const auto k = static_cast<std::int64_t>((static_cast<__int128>(log_[a]) * e) % m);
    return exp_[static_cast<std::size_t>(k)];
}

std::int64_t FiniteField::log(Element a) const
{
    if (a == 0)
        throw ZeroElement("log of zero");
    return log_[a];
}

FiniteField::Element FiniteField::exp(std::int64_t k) const
{
    const std::int64_t m = size_ - 1;
    return exp_[static_cast<std::size_t>(((k % m) + m) % m)];
}

std::int64_t FiniteField::order(Element a) const
{
    if (a == 0)
        throw ZeroElement("order of zero");
    const std::int64_t m = size_ - 1;
    return m / std::gcd(m, log_[a]);
}

std::string FiniteField::to_string(Element a) const
{
    return std::to_string(a);
}

FqPolynomial fq_multiply(const FiniteField& field, const FqPolynomial& a, const FqPolynomial& b)
{
    if (a.empty() || b.empty())
        return {};
    FqPolynomial c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = field.add(c[i + j], field.mul(a[i], b[j]));
    }
    while (!c.empty() && c.back() == 0)
        c.pop_back();
    return c;
}

FqPolynomial fq_remainder(const FiniteField& field, FqPolynomial a, const FqPolynomial& monic_divisor)
{
    const std::size_t db = monic_divisor.size() - 1;
    while (a.size() > db) {
        const auto c = a.back();
        if (c != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j <= db; ++j)
                a[shift + j] = field.sub(a[shift + j], field.mul(c, monic_divisor[j]));
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

FiniteField::Element fq_evaluate(const FiniteField& big, const std::vector<FiniteField::Element>& embedded_coeffs,
                                 FiniteField::Element x)
{
    FiniteField::Element acc = 0;
    for (auto it = embedded_coeffs.rbegin(); it != embedded_coeffs.rend(); ++it)
        acc = big.add(big.mul(acc, x), *it);
    return acc;
}

FqPolynomial monic_from_index(const FiniteField& field, int degree, std::int64_t index)
{
    FqPolynomial poly(static_cast<std::size_t>(degree) + 1);
    for (int j = 0; j < degree; ++j) {
        poly[static_cast<std::size_t>(j)] = static_cast<FiniteField::Element>(index % field.size());
        index /= field.size();
    }
    poly.back() = 1;
    return poly;
}

namespace {

std::int64_t index_of_monic(const FiniteField& field, const FqPolynomial& poly)
{
    std::int64_t idx = 0;
    for (int j = static_cast<int>(poly.size()) - 2; j >= 0; --j)
        idx = idx * field.size() + poly[static_cast<std::size_t>(j)];
    return idx;
}

}  // namespace

std::vector<FqPolynomial> irreducible_polys(const FiniteField& field, int a, std::int64_t bound)
{
    if (a < 1)
        throw InvalidInput("irreducible_polys: degree must be positive");
    const BigInt total = ipow(BigInt(static_cast<long>(field.size())), static_cast<unsigned long>(a));
    if (total > bound)
        throw ScaleLimit("q^a = " + total.get_str() + " exceeds the enumeration bound " + std::to_string(bound));
    const std::int64_t count = total.get_si();
    std::vector<bool> reducible(static_cast<std::size_t>(count), false);
    // Sieve: every reducible monic of degree a is a product of monics of
    // degrees b and a - b with 1 <= b <= a/2.
    for (int b = 1; 2 * b <= a; ++b) {
        const std::int64_t nb = ipow64(field.size(), static_cast<unsigned>(b));
        const std::int64_t nc = ipow64(field.size(), static_cast<unsigned>(a - b));
        for (std::int64_t i = 0; i < nb; ++i) {
            const FqPolynomial u = monic_from_index(field, b, i);
            for (std::int64_t j = 0; j < nc; ++j) {
                const FqPolynomial prod = fq_multiply(field, u, monic_from_index(field, a - b, j));
                reducible[static_cast<std::size_t>(index_of_monic(field, prod))] = true;
            }
        }
    }
    std::vector<FqPolynomial> out;
    for (std::int64_t idx = 0; idx < count; ++idx)
        if (!reducible[static_cast<std::size_t>(idx)])
            out.push_back(monic_from_index(field, a, idx));
    return out;
}

std::int64_t irreducible_count(std::int64_t q, int a)
{
    BigInt total = 0;
    for (auto b : divisors(a))
        total += moebius(a / b) * ipow(BigInt(static_cast<long>(q)), static_cast<unsigned long>(b));
    return BigInt(total / a).get_si();
}

std::string fq_to_string(const FqPolynomial& poly, const std::string& var)
{
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(poly.size()) - 1; k >= 0; --k) {
        const auto c = poly[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        if (!first)
            os << " + ";
        if (k == 0 || c != 1)
            os << (k > 0 ? "[" + std::to_string(c) + "]" : std::to_string(c));
        if (k > 0) {
            os << var;
            if (k > 1)
                os << "^" << k;
        }
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

std::vector<FiniteField::Element> field_embedding(const FiniteField& base, const FiniteField& ext)
{
    using Element = FiniteField::Element;
    if (ext.characteristic() != base.characteristic() || ext.degree() % base.degree() != 0)
        throw InvalidInput("no embedding between these fields");
    // The smallest root of the base modulus in the extension fixes the map.
    std::vector<Element> modulus_coeffs;
    for (auto c : base.modulus())
        modulus_coeffs.push_back(static_cast<Element>(c));
    std::optional<Element> beta;
    if (base.degree() == 1) {
        beta = 0;  // F_p embeds by its digits.
    } else {
        for (std::int64_t x = 0; x < ext.size() && !beta; ++x)
            if (fq_evaluate(ext, modulus_coeffs, static_cast<Element>(x)) == 0)
                beta = static_cast<Element>(x);
    }
    if (!beta)
        throw std::logic_error("no embedding of the base field");
    std::vector<Element> embedding(static_cast<std::size_t>(base.size()));
    for (std::int64_t x = 0; x < base.size(); ++x) {
        const auto d = base.digits(static_cast<Element>(x));
        Element acc = 0, power = 1;
        for (auto c : d) {
            acc = ext.add(acc, ext.mul(static_cast<Element>(c), power));
            power = ext.mul(power, base.degree() == 1 ? 1 : *beta);
        }
        embedding[static_cast<std::size_t>(x)] = acc;
    }
    return embedding;
}

EigenvalueField::EigenvalueField(const ParameterSet& reduced)
{
    if (!reduced.reduced())
        throw InvalidInput("EigenvalueField needs a reduced parameter set");
    base_ = FiniteField::get(reduced.p, reduced.k);
    ext_ = FiniteField::get(reduced.p, reduced.k * reduced.n);
    ell_power_ = reduced.ell_power();

    embedding_ = field_embedding(*base_, *ext_);
    epsilon_ = ext_->pow(ext_->primitive_element(), (ext_->size() - 1) / ell_power_);
}

std::optional<EigenvalueField::Element> EigenvalueField::root_of(const FqPolynomial& poly) const
{
    std::vector<Element> coeffs;
    for (auto c : poly)
        coeffs.push_back(embed(c));
    for (std::int64_t x = 0; x < ext_->size(); ++x)
        if (fq_evaluate(*ext_, coeffs, static_cast<Element>(x)) == 0)
            return static_cast<Element>(x);
    return std::nullopt;
}

EllPart ell_part_and_dlog(const EigenvalueField& field, FiniteField::Element t)
{
    if (t == 0)
        throw ZeroElement("ell_part_and_dlog of zero");
    const FiniteField& f = field.extension();
    const std::int64_t group = f.size() - 1;
    const std::int64_t sylow = field.ell_power();
    const std::int64_t m = group / sylow;
    // e == 1 mod ell^r and e == 0 mod m, so t^e is the ell-part of t.
    const std::int64_t e = static_cast<std::int64_t>(
        (static_cast<__int128>(m) * mod_inverse(m % sylow, sylow)) % group);
    EllPart out;
    out.ell_part = f.pow(t, e);
    out.regular_part = f.mul(t, f.inv(out.ell_part));
    FiniteField::Element power = 1;
    for (std::int64_t j = 0; j < sylow; ++j) {
        if (power == out.ell_part) {
            out.j = j;
            return out;
        }
        power = f.mul(power, field.epsilon());
    }
    throw std::logic_error("ell-part is not a power of eps");
}

}  // namespace cuspcenter
