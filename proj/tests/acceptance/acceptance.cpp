// One line per acceptance criterion. Exit status is the number of failures.

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cuspcenter/center_map.hpp"
#include "cuspcenter/characters.hpp"
#include "cuspcenter/deformation.hpp"
#include "cuspcenter/errors.hpp"
#include "cuspcenter/invariants.hpp"
#include "cuspcenter/report.hpp"

using namespace cuspcenter;

namespace {

struct Case {
    const char* name;
    std::int64_t q, ell;
    int n, d;
};

const Case kCases[] = {
    {"P1", 2, 3, 2, 1}, {"P2", 2, 7, 3, 1}, {"P3", 8, 3, 2, 1},
    {"P4", 4, 5, 2, 1}, {"P5", 3, 5, 4, 1}, {"P4u", 2, 5, 4, 2},
};

const nlohmann::json& oracle()
{
    static const nlohmann::json data = [] {
        std::ifstream in(CUSPCENTER_ORACLE_FILE);
        return nlohmann::json::parse(in);
    }();
    return data;
}

IntPolynomial oracle_m(const Case& c)
{
    std::vector<Rational> coeffs;
    for (const auto& x : oracle().at("cases").at(c.name).at("m"))
        coeffs.emplace_back(x.get<long>());
    return IntPolynomial(coeffs);
}

class Criterion {
public:
    explicit Criterion(int id) : id_(id) {}

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            passed_ = false;
            failures_ << (failures_.tellp() > 0 ? "; " : "") << what;
        }
    }

    void note(const std::string& s) { notes_ << (notes_.tellp() > 0 ? ", " : "") << s; }

    template <typename F>
    void guard(const std::string& where, F&& body)
    {
        try {
            body();
        } catch (const std::exception& e) {
            require(false, where + ": " + e.what());
        }
    }

    bool report(const std::string& title)
    {
        std::cout << "criterion " << id_ << " [" << (passed_ ? "PASS" : "FAIL") << "] " << title;
        if (notes_.tellp() > 0)
            std::cout << " (" << notes_.str() << ")";
        if (!passed_)
            std::cout << " failures: " << failures_.str();
        std::cout << std::endl;
        return passed_;
    }

private:
    int id_;
    bool passed_ = true;
    std::ostringstream notes_;
    std::ostringstream failures_;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << s << "s";
    return os.str();
}

std::string sha256(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

bool criterion_pipeline()
{
    Criterion c(1);
    for (const auto& k : kCases) {
        c.guard(k.name, [&] {
            const auto t0 = std::chrono::steady_clock::now();
            const auto ps = validate_parameters(k.q, k.ell, k.n, k.d);
            const auto res = verify_endo_ring(ps);
            const auto red = res.params;
            c.require(res.m == oracle_m(k), std::string(k.name) + ": m = " + to_string(res.m));
            c.require(evaluate(res.m, res.gamma) == block_constant(CharacterContext(ps), 0),
                      std::string(k.name) + ": m(gamma) != 0");
            for (const auto& cert : res.certificates) {
                c.require(is_ell_integral(cert.h, red.ell), std::string(k.name) + ": h not integral for " + cert.class_label);
                c.require(evaluate(cert.h, res.gamma) == cert.delta,
                          std::string(k.name) + ": h(gamma) != delta for " + cert.class_label);
            }
            c.require(res.gamma_chain.result == res.gamma, std::string(k.name) + ": gamma not reconstructed");
            const double s = seconds_since(t0);
            c.require(s < (std::string(k.name) == "P5" ? 600.0 : 60.0), std::string(k.name) + ": too slow");
            c.note(std::string(k.name) + " " + res.presentation() + " " + std::to_string(res.certificates.size())
                   + " certificates " + fmt_seconds(s));
        });
    }
    return c.report("image of delta is W(k)[gamma] with the expected m(Y) and integral certificates");
}

bool criterion_invariants()
{
    Criterion c(2);
    for (const auto& k : kCases) {
        c.guard(k.name, [&] {
            const auto t0 = std::chrono::steady_clock::now();
            const auto ps = reduce_parameters(validate_parameters(k.q, k.ell, k.n, k.d));
            const std::int64_t L = ps.ell_power();
            const auto orbits = orbits_of_multiplication(ps.q, L);
            for (std::int64_t a = 1; a < L; ++a)
                c.require(static_cast<int>(orbits.orbits[orbits.orbit_index[a]].size()) == ps.n,
                          std::string(k.name) + ": short orbit at " + std::to_string(a));
            for (int i = 1; i <= ps.r; ++i)
                c.require(uniformizer_check(ps, i).valuation == ps.n,
                          std::string(k.name) + ": valuation at level " + std::to_string(i));
            c.require(pullback_mod_ell_check(ps).multiplicity == ps.n, std::string(k.name) + ": pullback multiplicity");
            const auto ring = invariant_ring(ps);
            const auto expected_degree = 1 + (L - 1) / ps.n;
            c.require(ring.m.degree() == expected_degree, std::string(k.name) + ": degree");
            c.require(ring.m.degree() == (L + ps.n - 1) / ps.n, std::string(k.name) + ": ceiling exponent");
            c.require(is_power_of_linear_mod_ell(ring.m, ps.n, ps.ell), std::string(k.name) + ": m mod ell");
            const double s = seconds_since(t0);
            c.require(s < 5.0, std::string(k.name) + ": too slow");
            c.note(std::string(k.name) + " deg " + std::to_string(expected_degree) + " " + fmt_seconds(s));
        });
    }
    return c.report("orbit, uniformizer, pullback, degree and mod-ell checks");
}

bool criterion_signs()
{
    Criterion c(3);
    std::size_t pairs = 0;
    for (const auto& k : kCases) {
        c.guard(k.name, [&] {
            for (const auto& s : sign_congruences(validate_parameters(k.q, k.ell, k.n, k.d))) {
                c.require(s.holds, std::string(k.name) + ": v=" + std::to_string(s.v) + " d=" + std::to_string(s.d));
                ++pairs;
            }
        });
    }
    c.guard("spot values", [&] {
        const auto s1 = sign_congruences(validate_parameters(2, 3, 2)).back();
        c.require(s1.lhs == Rational(1, 2) && reduce_mod(s1.lhs, 3) == 2 && s1.rhs == 2, "q=2 n=2");
        const auto s2 = sign_congruences(validate_parameters(2, 7, 3)).back();
        c.require(s2.lhs == 1 && s2.rhs == 8 && reduce_mod(Rational(s2.rhs), 7) == 1, "q=2 n=3");
    });
    c.note(std::to_string(pairs) + " divisor pairs");
    return c.report("sign congruence for every divisor pair v*d = n");
}

bool criterion_oracles()
{
    Criterion c(4);
    const auto t0 = std::chrono::steady_clock::now();
    for (auto [q, n] : {std::pair{2L, 2}, std::pair{3L, 2}, std::pair{4L, 2}, std::pair{2L, 3}}) {
        const std::string key = std::to_string(q) + "," + std::to_string(n);
        c.guard("census " + key, [&] {
            const auto brute = matrix_oracle(q, n, 5000);
            const auto types = type_census(q, n);
            bool same = brute.classes.size() == types.classes.size();
            for (std::size_t i = 0; same && i < brute.classes.size(); ++i)
                same = brute.classes[i].type == types.classes[i].type && brute.classes[i].size == types.classes[i].size;
            c.require(same, "census " + key);
            std::vector<long> sizes;
            for (const auto& e : brute.classes)
                sizes.push_back(e.size.get_si());
            std::sort(sizes.begin(), sizes.end());
            c.require(sizes == oracle().at("census").at(key).at("sizes").get<std::vector<long>>(), "sizes " + key);
            c.note("GL" + std::to_string(n) + "(F" + std::to_string(q) + ") " + std::to_string(brute.classes.size()));
        });
    }
    for (auto [q, ell] : {std::pair{2L, 3L}, std::pair{4L, 5L}, std::pair{8L, 3L}}) {
        const std::string key = "(" + std::to_string(q) + "," + std::to_string(ell) + ")";
        c.guard("delta " + key, [&] {
            const auto ps = validate_parameters(q, ell, 2);
            const auto bad = gl2_delta_mismatches(ps);
            c.require(bad.empty(), "delta " + key + (bad.empty() ? "" : " at " + bad.front()));
            const auto classes = enumerate_classes(q, 2);
            std::size_t semisimple = 0;
            for (const auto& v : compare_with_gl2_oracle(ps)) {
                if (v.index != 0)
                    continue;
                const auto it = std::find_if(classes.begin(), classes.end(),
                                             [&](const ClassType& ct) { return ct.label() == v.class_label; });
                if (it == classes.end() || !it->semisimple())
                    continue;
                c.require(v.agree, "Steinberg sign " + key + " at " + v.class_label);
                ++semisimple;
            }
            c.note("delta " + key + " ok, " + std::to_string(semisimple) + " semisimple Steinberg values");
        });
    }
    const double s = seconds_since(t0);
    c.note(fmt_seconds(s));
    return c.report("matrix census, GL2 table delta and Steinberg sign agree with the formulas");
}

bool criterion_case_analysis()
{
    Criterion c(5);
    for (const auto& k : kCases) {
        c.guard(k.name, [&] {
            const auto ps = validate_parameters(k.q, k.ell, k.n, k.d);
            const auto red = reduce_parameters(ps);
            const auto analysis = case_analysis(ps);
            std::size_t witnesses = 0;
            for (const auto& rec : analysis.records) {
                const std::string where = std::string(k.name) + " " + rec.type.label();
                for (const auto& e : rec.delta.entries)
                    c.require(is_ell_integral(e, red.ell), where + ": not integral");
                c.require(rec.block_congruent, where + ": slots differ mod ell");
                const bool small = rec.bucket == Bucket::NonPrimary || rec.bucket == Bucket::SmallDegreeNonDiagonalizable
                                   || rec.bucket == Bucket::SmallDegreeDiagonalizable;
                if (small)
                    c.require(rec.in_s, where + ": not in S");
                if (rec.bucket == Bucket::RealizedWitness) {
                    ++witnesses;
                    c.require(rec.delta[0].is_zero(), where + ": Steinberg slot nonzero");
                    for (std::size_t i = 1; i < rec.delta.size(); ++i)
                        c.require(rec.delta[i] == rec.delta[1] && rec.delta[i].is_rational()
                                      && ord_p(rec.delta[i].rational_part(), red.ell) == red.r,
                                  where + ": witness slot " + std::to_string(i));
                }
            }
            c.require(witnesses == 1, std::string(k.name) + ": witness count");
            c.note(std::string(k.name) + " " + std::to_string(analysis.records.size()) + " classes, "
                   + std::to_string(analysis.degree_n_in_s) + " degree-n in S");
        });
    }
    return c.report("integrality, congruence and S-membership over every class");
}

bool criterion_deformation()
{
    Criterion c(6);
    for (const auto& k : kCases) {
        c.guard(k.name, [&] {
            const auto t0 = std::chrono::steady_clock::now();
            const auto ps = validate_parameters(k.q, k.ell, k.n, k.d);
            const auto red = reduce_parameters(ps);
            const auto suite = run_deformation_suite(ps);
            std::set<std::int64_t> seen;
            for (const auto& p : suite.points) {
                seen.insert(p.a);
                c.require(p.commutation && p.m_value.is_zero(), std::string(k.name) + " " + p.label);
                if (p.psi_identity)
                    c.require(p.trace == CyclotomicNumber(red.n), std::string(k.name) + " " + p.label + ": trace");
                else
                    for (int i = 0; i + 1 < red.n; ++i)
                        c.require(p.t[i].is_zero(), std::string(k.name) + " " + p.label + ": T_" + std::to_string(i + 1));
            }
            c.require(static_cast<std::int64_t>(seen.size()) == red.ell_power(), std::string(k.name) + ": a coverage");
            c.require(suite.root_set, std::string(k.name) + ": root set");
            c.require(suite.a_pi_vanishes && suite.factored_vanishes, std::string(k.name) + ": presentations");
            c.require(suite.same_f, std::string(k.name) + ": f != m");
            const double s = seconds_since(t0);
            c.require(s < 5.0, std::string(k.name) + ": too slow");
            c.note(std::string(k.name) + " " + std::to_string(suite.points.size()) + " points " + fmt_seconds(s));
        });
    }
    return c.report("Frobenius/inertia relations at every point and both presentations vanish");
}

bool criterion_determinism()
{
    Criterion c(7);
    std::size_t reports = 0;
    for (const auto& k : kCases) {
        for (const char* cmd : {"invariants", "endo-ring", "classes", "deformation", "oracle"}) {
            if (std::string(cmd) == "oracle" && reduce_parameters(validate_parameters(k.q, k.ell, k.n, k.d)).n != 2)
                continue;
            c.guard(std::string(k.name) + " " + cmd, [&] {
                const CommandInput in{cmd, k.q, k.ell, k.n, k.d};
                const auto a = sha256(render_json(run_command(in, RunOptions{}).envelope));
                const auto b = sha256(render_json(run_command(in, RunOptions{}).envelope));
                c.require(a == b, std::string(k.name) + " " + cmd);
                ++reports;
            });
        }
    }
    c.note(std::to_string(reports) + " reports hashed twice");
    return c.report("byte-identical JSON reports across runs");
}

}  // namespace

int main()
{
    const std::vector<std::function<bool()>> criteria = {
        criterion_pipeline, criterion_invariants, criterion_signs, criterion_oracles,
        criterion_case_analysis, criterion_deformation, criterion_determinism,
    };
    int failures = 0;
    for (const auto& run : criteria)
        failures += run() ? 0 : 1;
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures;
}
