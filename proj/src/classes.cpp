#include "cuspcenter/classes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cuspcenter/errors.hpp"

namespace cuspcenter {

namespace {

// Lexicographic order of (c_{a-1}, ..., c_0) for monic polynomials of equal
// degree; lower degree first otherwise.
bool poly_less(const FqPolynomial& a, const FqPolynomial& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

bool factor_less(const ClassFactor& a, const ClassFactor& b)
{
    if (a.poly != b.poly)
        return poly_less(a.poly, b.poly);
    return a.partition < b.partition;
}

// Degrees repeated by partition size, largest first: [3], [2, 1], [1, 1, 1].
std::vector<int> degree_profile(const ClassType& ct)
{
    std::vector<int> profile;
    for (const auto& f : ct.factors)
        for (int i = 0; i < f.size(); ++i)
            profile.push_back(f.degree());
    std::sort(profile.rbegin(), profile.rend());
    return profile;
}

bool class_less(const ClassType& a, const ClassType& b)
{
    const auto pa = degree_profile(a), pb = degree_profile(b);
    if (pa != pb)
        return pa > pb;
    return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
                                        factor_less);
}

void normalize(ClassType& ct)
{
    std::sort(ct.factors.begin(), ct.factors.end(), factor_less);
    ct.centralizer_order = centralizer_order(ct);
    ct.class_size = gl_order(ct.q, ct.n) / ct.centralizer_order;
}

}  // namespace

std::vector<Partition> partitions_of(int total)
{
    std::vector<Partition> out;
    Partition current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(total, total);
    return out;
}

int ClassFactor::size() const
{
    return std::accumulate(partition.begin(), partition.end(), 0);
}

bool ClassType::diagonalizable() const
{
    return std::all_of(factors.begin(), factors.end(), [](const ClassFactor& f) {
        return std::all_of(f.partition.begin(), f.partition.end(), [](int part) { return part == 1; });
    });
}

int ClassType::jordan_blocks() const
{
    return primary() ? static_cast<int>(factors.front().partition.size()) : 0;
}

int ClassType::eigenvalue_degree() const
{
    return primary() ? factors.front().degree() : 0;
}

int ClassType::rank_sum() const
{
    int total = 0;
    for (const auto& f : factors)
        total += static_cast<int>(f.partition.size());
    return total;
}

std::string ClassType::label() const
{
    std::ostringstream os;
    for (const auto& f : factors) {
        os << "{" << fq_to_string(f.poly) << ":[";
        for (std::size_t i = 0; i < f.partition.size(); ++i)
            os << (i ? "," : "") << f.partition[i];
        os << "]}";
    }
    return os.str();
}

BigInt green_z(const BigInt& Q, const Partition& lambda)
{
    long size = 0, n_lambda = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        size += lambda[i];
        n_lambda += static_cast<long>(i) * lambda[i];
    }
    std::map<int, long> multiplicity;
    for (int part : lambda)
        ++multiplicity[part];
    long exponent = size + 2 * n_lambda;
    BigInt product = 1;
    for (const auto& [part, m] : multiplicity) {
        for (long k = 1; k <= m; ++k) {
            product *= ipow(Q, static_cast<unsigned long>(k)) - 1;
            exponent -= k;
        }
    }
    if (exponent < 0)
        throw std::logic_error("negative exponent in Green's formula");
    return ipow(Q, static_cast<unsigned long>(exponent)) * product;
}

BigInt centralizer_order(const ClassType& ct)
{
    BigInt total = 1;
    for (const auto& f : ct.factors)
        total *= green_z(ipow(BigInt(static_cast<long>(ct.q)), static_cast<unsigned long>(f.degree())), f.partition);
    return total;
}

BigInt gl_order(std::int64_t q, int n)
{
    const BigInt bq = static_cast<long>(q);
    const BigInt qn = ipow(bq, static_cast<unsigned long>(n));
    BigInt total = 1;
    for (int i = 0; i < n; ++i)
        total *= qn - ipow(bq, static_cast<unsigned long>(i));
    return total;
}

BigInt gl_class_count(std::int64_t q, int n)
{
    // Power series truncated at degree n.
    std::vector<BigInt> series(static_cast<std::size_t>(n) + 1);
    series[0] = 1;
    for (int k = 1; k <= n; ++k) {
        // Multiply by (1 - x^k).
        for (int d = n; d >= k; --d)
            series[static_cast<std::size_t>(d)] -= series[static_cast<std::size_t>(d - k)];
        // Divide by (1 - q x^k): s_d += q s_{d-k}, ascending.
        for (int d = k; d <= n; ++d)
            series[static_cast<std::size_t>(d)] += static_cast<long>(q) * series[static_cast<std::size_t>(d - k)];
    }
    return series[static_cast<std::size_t>(n)];
}

std::vector<ClassType> enumerate_classes(std::int64_t q, int n, const EnumerationLimits& limits)
{
    const PrimePower pp = prime_power_decomposition(q);
    if (pp.prime == 0)
        throw InvalidInput("q is not a prime power");
    if (n < 1)
        throw InvalidInput("n must be positive");
    const BigInt expected_count = gl_class_count(q, n);
    if (expected_count > limits.class_bound)
        throw ScaleLimit("GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ") has " + expected_count.get_str()
                         + " classes, above the bound");
    const auto field = FiniteField::get(pp.prime, pp.exponent);

    std::vector<FqPolynomial> polys;
    for (int a = 1; a <= n; ++a)
        for (auto& poly : irreducible_polys(*field, a, limits.poly_bound))
            if (!(a == 1 && poly[0] == 0))
                polys.push_back(std::move(poly));

    std::vector<ClassType> out;
    ClassType current;
    current.q = q;
    current.n = n;
    std::function<void(std::size_t, int)> rec = [&](std::size_t index, int remaining) {
        if (remaining == 0) {
            ClassType ct = current;
            normalize(ct);
            out.push_back(std::move(ct));
            return;
        }
        for (std::size_t i = index; i < polys.size(); ++i) {
            const int deg = static_cast<int>(polys[i].size()) - 1;
            for (int b = 1; deg * b <= remaining; ++b) {
                for (auto& lambda : partitions_of(b)) {
                    current.factors.push_back({polys[i], lambda});
                    rec(i + 1, remaining - deg * b);
                    current.factors.pop_back();
                }
            }
        }
    };
    rec(0, n);
    std::sort(out.begin(), out.end(), class_less);

    if (BigInt(static_cast<long>(out.size())) != expected_count)
        throw AssertionFailure("enumerated " + std::to_string(out.size()) + " classes, generating function gives "
                               + expected_count.get_str());
    BigInt total = 0;
    for (const auto& ct : out)
        total += ct.class_size;
    if (total != gl_order(q, n))
        throw AssertionFailure("class sizes do not add up to |GL_n(F_q)|");
    return out;
}

std::vector<ClassType> enumerate_classes(const ParameterSet& ps, const EnumerationLimits& limits)
{
    return enumerate_classes(ps.q, ps.n, limits);
}

namespace {

// X^e mod poly over F_q.
FqPolynomial power_of_x_mod(const FiniteField& field, std::int64_t e, const FqPolynomial& poly)
{
    FqPolynomial result = fq_remainder(field, {1}, poly);
    FqPolynomial base = fq_remainder(field, {0, 1}, poly);
    while (e > 0) {
        if (e & 1)
            result = fq_remainder(field, fq_multiply(field, result, base), poly);
        e >>= 1;
        if (e > 0)
            base = fq_remainder(field, fq_multiply(field, base, base), poly);
    }
    return result;
}

}  // namespace

bool roots_are_ell_regular(const FiniteField& field, const FqPolynomial& poly, std::int64_t ell)
{
    const int a = static_cast<int>(poly.size()) - 1;
    BigInt m = ipow(BigInt(static_cast<long>(field.size())), static_cast<unsigned long>(a)) - 1;
    const BigInt bl = static_cast<long>(ell);
    while (mpz_divisible_p(m.get_mpz_t(), bl.get_mpz_t()))
        m /= bl;
    if (!m.fits_slong_p())
        throw ScaleLimit("field too large for the ell-regularity test");
    const FqPolynomial r = power_of_x_mod(field, m.get_si(), poly);
    return r.size() == 1 && r[0] == 1;
}

ClassPredicates class_predicates(const ClassType& ct, const ParameterSet& ps)
{
    const auto field = FiniteField::get(ps.p, ps.k);
    ClassPredicates pr;
    pr.primary = ct.primary();
    pr.diagonalizable = ct.diagonalizable();
    pr.ell_regular = std::all_of(ct.factors.begin(), ct.factors.end(), [&](const ClassFactor& f) {
        return roots_are_ell_regular(*field, f.poly, ps.ell);
    });
    pr.ord_ell_of_size = ord_p(ct.class_size, ps.ell);
    if (!(pr.primary && pr.diagonalizable) && pr.ord_ell_of_size != ps.r)
        throw AssertionFailure("class " + ct.label() + " is not primary diagonalizable but ord_ell|C| = "
                               + std::to_string(pr.ord_ell_of_size) + " != r = " + std::to_string(ps.r));
    return pr;
}

namespace {

FqMatrix mat_mul(const FiniteField& f, const FqMatrix& a, const FqMatrix& b, int n)
{
    FqMatrix c(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const auto x = a[static_cast<std::size_t>(i * n + k)];
            if (x == 0)
                continue;
            for (int j = 0; j < n; ++j)
                c[static_cast<std::size_t>(i * n + j)] =
                    f.add(c[static_cast<std::size_t>(i * n + j)], f.mul(x, b[static_cast<std::size_t>(k * n + j)]));
        }
    return c;
}

FqMatrix mat_identity(int n)
{
    FqMatrix m(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i * n + i)] = 1;
    return m;
}

int mat_rank(const FiniteField& f, FqMatrix m, int n)
{
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = rank;
        while (sel < n && m[static_cast<std::size_t>(sel * n + col)] == 0)
            ++sel;
        if (sel == n)
            continue;
        for (int j = 0; j < n; ++j)
            std::swap(m[static_cast<std::size_t>(sel * n + j)], m[static_cast<std::size_t>(rank * n + j)]);
        const auto inv = f.inv(m[static_cast<std::size_t>(rank * n + col)]);
        for (int i = 0; i < n; ++i) {
            if (i == rank || m[static_cast<std::size_t>(i * n + col)] == 0)
                continue;
            const auto factor = f.mul(m[static_cast<std::size_t>(i * n + col)], inv);
            for (int j = 0; j < n; ++j)
                m[static_cast<std::size_t>(i * n + j)] =
                    f.sub(m[static_cast<std::size_t>(i * n + j)], f.mul(factor, m[static_cast<std::size_t>(rank * n + j)]));
        }
        ++rank;
    }
    return rank;
}

FqMatrix mat_inverse(const FiniteField& f, const FqMatrix& a, int n)
{
    FqMatrix m = a, inv = mat_identity(n);
    for (int col = 0; col < n; ++col) {
        int sel = col;
        while (sel < n && m[static_cast<std::size_t>(sel * n + col)] == 0)
            ++sel;
        if (sel == n)
            throw std::domain_error("singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(m[static_cast<std::size_t>(sel * n + j)], m[static_cast<std::size_t>(col * n + j)]);
            std::swap(inv[static_cast<std::size_t>(sel * n + j)], inv[static_cast<std::size_t>(col * n + j)]);
        }
        const auto pivot_inv = f.inv(m[static_cast<std::size_t>(col * n + col)]);
        for (int j = 0; j < n; ++j) {
            m[static_cast<std::size_t>(col * n + j)] = f.mul(m[static_cast<std::size_t>(col * n + j)], pivot_inv);
            inv[static_cast<std::size_t>(col * n + j)] = f.mul(inv[static_cast<std::size_t>(col * n + j)], pivot_inv);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col)
                continue;
            const auto factor = m[static_cast<std::size_t>(i * n + col)];
            if (factor == 0)
                continue;
            for (int j = 0; j < n; ++j) {
                m[static_cast<std::size_t>(i * n + j)] =
                    f.sub(m[static_cast<std::size_t>(i * n + j)], f.mul(factor, m[static_cast<std::size_t>(col * n + j)]));
                inv[static_cast<std::size_t>(i * n + j)] =
                    f.sub(inv[static_cast<std::size_t>(i * n + j)], f.mul(factor, inv[static_cast<std::size_t>(col * n + j)]));
            }
        }
    }
    return inv;
}

FqMatrix poly_of_matrix(const FiniteField& f, const FqPolynomial& poly, const FqMatrix& a, int n)
{
    FqMatrix acc(static_cast<std::size_t>(n * n), 0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        acc = mat_mul(f, acc, a, n);
        for (int i = 0; i < n; ++i)
            acc[static_cast<std::size_t>(i * n + i)] = f.add(acc[static_cast<std::size_t>(i * n + i)], *it);
    }
    return acc;
}

}  // namespace

FqMatrix representative_matrix(const ClassType& ct, const FiniteField& field)
{
    const int n = ct.n;
    FqMatrix m(static_cast<std::size_t>(n * n), 0);
    int offset = 0;
    for (const auto& f : ct.factors) {
        for (int part : f.partition) {
            FqPolynomial block_poly = {1};
            for (int k = 0; k < part; ++k)
                block_poly = fq_multiply(field, block_poly, f.poly);
            const int size = static_cast<int>(block_poly.size()) - 1;
            // Companion matrix: ones on the subdiagonal, -c_j in the last column.
            for (int i = 1; i < size; ++i)
                m[static_cast<std::size_t>((offset + i) * n + offset + i - 1)] = 1;
            for (int i = 0; i < size; ++i)
                m[static_cast<std::size_t>((offset + i) * n + offset + size - 1)] =
                    field.neg(block_poly[static_cast<std::size_t>(i)]);
            offset += size;
        }
    }
    return m;
}

ClassType type_of_matrix(const FqMatrix& a, int n, const FiniteField& field)
{
    ClassType ct;
    ct.q = field.size();
    ct.n = n;
    int covered = 0;
    for (int deg = 1; deg <= n && covered < n; ++deg) {
        for (const auto& poly : irreducible_polys(field, deg, std::int64_t{1} << 24)) {
            if (deg == 1 && poly[0] == 0)
                continue;
            const FqMatrix b = poly_of_matrix(field, poly, a, n);
            std::vector<int> kernel(static_cast<std::size_t>(n) + 1, 0);
            FqMatrix power = mat_identity(n);
            for (int k = 1; k <= n; ++k) {
                power = mat_mul(field, power, b, n);
                kernel[static_cast<std::size_t>(k)] = n - mat_rank(field, power, n);
            }
            if (kernel[static_cast<std::size_t>(n)] == 0)
                continue;
            // kernel[k] / deg = number of cells in the first k columns of lambda.
            std::vector<int> conjugate;
            for (int k = 1; k <= n; ++k) {
                const int column = (kernel[static_cast<std::size_t>(k)] - kernel[static_cast<std::size_t>(k - 1)]) / deg;
                if (column > 0)
                    conjugate.push_back(column);
            }
            Partition lambda;
            for (int row = 0; row < conjugate.front(); ++row) {
                int part = 0;
                for (int c : conjugate)
                    part += c > row ? 1 : 0;
                lambda.push_back(part);
            }
            ct.factors.push_back({poly, lambda});
            covered += kernel[static_cast<std::size_t>(n)];
        }
    }
    if (covered != n)
        throw AssertionFailure("matrix type does not account for the full dimension");
    normalize(ct);
    return ct;
}

ClassCensus matrix_oracle(std::int64_t q, int n, std::int64_t max_group_order)
{
    const PrimePower pp = prime_power_decomposition(q);
    if (pp.prime == 0)
        throw InvalidInput("q is not a prime power");
    const BigInt order = gl_order(q, n);
    if (order > max_group_order)
        throw ScaleLimit("|GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ")| = " + order.get_str()
                         + " exceeds the matrix-oracle bound " + std::to_string(max_group_order));
    const auto field = FiniteField::get(pp.prime, pp.exponent);
    const std::int64_t entries = static_cast<std::int64_t>(n) * n;
    const std::int64_t total = ipow64(q, static_cast<unsigned>(entries));

    auto encode = [&](const FqMatrix& m) {
        std::int64_t idx = 0;
        for (std::int64_t i = entries - 1; i >= 0; --i)
            idx = idx * q + m[static_cast<std::size_t>(i)];
        return idx;
    };

    std::vector<FqMatrix> group;
    std::vector<std::int64_t> position(static_cast<std::size_t>(total), -1);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        FqMatrix m(static_cast<std::size_t>(entries));
        std::int64_t v = idx;
        for (std::int64_t i = 0; i < entries; ++i) {
            m[static_cast<std::size_t>(i)] = static_cast<FiniteField::Element>(v % q);
            v /= q;
        }
        if (mat_rank(*field, m, n) == n) {
            position[static_cast<std::size_t>(idx)] = static_cast<std::int64_t>(group.size());
            group.push_back(std::move(m));
        }
    }
    if (BigInt(static_cast<long>(group.size())) != order)
        throw AssertionFailure("invertible matrix count differs from |GL_n(F_q)|");
    std::vector<FqMatrix> inverses;
    inverses.reserve(group.size());
    for (const auto& g : group)
        inverses.push_back(mat_inverse(*field, g, n));

    ClassCensus census;
    census.q = q;
    census.n = n;
    census.group_order = order;
    std::vector<bool> seen(group.size(), false);
    for (std::size_t g = 0; g < group.size(); ++g) {
        if (seen[g])
            continue;
        long size = 0;
        for (std::size_t h = 0; h < group.size(); ++h) {
            const FqMatrix c = mat_mul(*field, mat_mul(*field, group[h], group[g], n), inverses[h], n);
            const auto pos = static_cast<std::size_t>(position[static_cast<std::size_t>(encode(c))]);
            if (!seen[pos]) {
                seen[pos] = true;
                ++size;
            }
        }
        CensusEntry entry;
        entry.type = type_of_matrix(group[g], n, *field);
        entry.size = size;
        entry.centralizer_order = order / entry.size;
        census.classes.push_back(std::move(entry));
    }
    std::sort(census.classes.begin(), census.classes.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return class_less(a.type, b.type); });
    return census;
}

ClassCensus type_census(std::int64_t q, int n, const EnumerationLimits& limits)
{
    ClassCensus census;
    census.q = q;
    census.n = n;
    census.group_order = gl_order(q, n);
    for (auto& ct : enumerate_classes(q, n, limits)) {
        CensusEntry entry;
        entry.size = ct.class_size;
        entry.centralizer_order = ct.centralizer_order;
        entry.type = std::move(ct);
        census.classes.push_back(std::move(entry));
    }
    return census;
}

}  // namespace cuspcenter
