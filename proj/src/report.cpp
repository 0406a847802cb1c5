#include "cuspcenter/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "cuspcenter/characters.hpp"
#include "cuspcenter/deformation.hpp"
#include "cuspcenter/errors.hpp"
#include "cuspcenter/invariants.hpp"
#include "cuspcenter/number.hpp"

namespace cuspcenter {

Json to_json(const Rational& x)
{
    return Json{{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}};
}

Rational rational_from_json(const Json& j)
{
    Rational x(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
    x.canonicalize();
    return x;
}

Json to_json(const CyclotomicNumber& x)
{
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs())
        coeffs.push_back(to_json(c));
    return Json{{"ell", x.level() == 0 ? 0 : x.ell()}, {"level", x.level()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const IntPolynomial& p)
{
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(to_json(c));
    return Json{{"coeffs", std::move(coeffs)}, {"text", to_string(p)}};
}

Json to_json(const BlockVector& v)
{
    Json entries = Json::array();
    for (std::size_t k = 0; k < v.size(); ++k)
        entries.push_back(Json{{"index", v.indices[k]}, {"value", to_json(v[k])}});
    return entries;
}

Json to_json(const ParameterSet& ps)
{
    return Json{{"q", ps.q}, {"ell", ps.ell}, {"n", ps.n}, {"d", ps.d}, {"w", ps.w}, {"r", ps.r}};
}

Json to_json(const ClassType& ct)
{
    Json factors = Json::array();
    for (const auto& f : ct.factors)
        factors.push_back(Json{{"poly", f.poly}, {"partition", f.partition}});
    return Json{{"label", ct.label()},
                {"factors", std::move(factors)},
                {"class_size", ct.class_size.get_str()},
                {"centralizer_order", ct.centralizer_order.get_str()}};
}

Json census_to_json(std::int64_t q, int n, const std::vector<ClassType>& classes)
{
    Json list = Json::array();
    for (const auto& ct : classes)
        list.push_back(to_json(ct));
    return Json{{"schema", "cuspcenter-census"},
                {"schema_version", kCensusSchemaVersion},
                {"q", q},
                {"n", n},
                {"classes", std::move(list)}};
}

std::vector<ClassType> census_from_json(const Json& j)
{
    if (j.at("schema").get<std::string>() != "cuspcenter-census"
        || j.at("schema_version").get<int>() != kCensusSchemaVersion)
        throw std::runtime_error("census schema mismatch");
    const auto q = j.at("q").get<std::int64_t>();
    const int n = j.at("n").get<int>();
    const BigInt order = gl_order(q, n);
    std::vector<ClassType> out;
    BigInt total = 0;
    for (const auto& entry : j.at("classes")) {
        ClassType ct;
        ct.q = q;
        ct.n = n;
        for (const auto& f : entry.at("factors"))
            ct.factors.push_back({f.at("poly").get<FqPolynomial>(), f.at("partition").get<Partition>()});
        ct.centralizer_order = centralizer_order(ct);
        ct.class_size = order / ct.centralizer_order;
        if (ct.class_size.get_str() != entry.at("class_size").get<std::string>())
            throw std::runtime_error("census entry " + ct.label() + " has a wrong class size");
        total += ct.class_size;
        out.push_back(std::move(ct));
    }
    if (BigInt(static_cast<long>(out.size())) != gl_class_count(q, n) || total != order)
        throw std::runtime_error("cached census is incomplete");
    return out;
}

namespace {

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < length; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

}  // namespace

std::filesystem::path CensusCache::path_for(std::int64_t q, int n) const
{
    const std::string key = "cuspcenter-census/v" + std::to_string(kCensusSchemaVersion) + "/q=" + std::to_string(q)
                            + "/n=" + std::to_string(n);
    return dir_ / ("census-q" + std::to_string(q) + "-n" + std::to_string(n) + "-" + sha256_hex(key).substr(0, 16)
                   + ".json");
}

std::optional<std::vector<ClassType>> CensusCache::load(std::int64_t q, int n) const
{
    std::ifstream in(path_for(q, n));
    if (!in)
        return std::nullopt;
    try {
        const Json j = Json::parse(in);
        if (j.at("q").get<std::int64_t>() != q || j.at("n").get<int>() != n)
            return std::nullopt;
        return census_from_json(j);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void CensusCache::store(std::int64_t q, int n, const std::vector<ClassType>& classes) const
{
    std::filesystem::create_directories(dir_);
    const auto target = path_for(q, n);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << census_to_json(q, n, classes).dump(1) << "\n";
    }
    std::filesystem::rename(tmp, target);
}

std::vector<ClassType> load_classes(std::int64_t q, int n, const RunOptions& opts)
{
    if (!opts.cache_dir)
        return enumerate_classes(q, n, opts.limits);
    const CensusCache cache(*opts.cache_dir);
    if (auto cached = cache.load(q, n))
        return *cached;
    auto classes = enumerate_classes(q, n, opts.limits);
    try {
        cache.store(q, n, classes);
    } catch (const std::exception&) {
        // An unwritable cache only costs a recomputation next time.
    }
    return classes;
}

namespace {

class Checks {
public:
    template <typename F>
    bool run(const std::string& name, F&& body)
    {
        try {
            Json witness = body();
            Json entry{{"name", name}, {"status", "pass"}};
            if (!witness.is_null())
                entry["witness"] = std::move(witness);
            list_.push_back(std::move(entry));
            return true;
        } catch (const VerificationFailure& e) {
            fail(name, e.what());
            return false;
        }
    }

    void fail(const std::string& name, const std::string& why)
    {
        list_.push_back(Json{{"name", name}, {"status", "fail"}, {"witness", why}});
        ok_ = false;
    }

    bool ok() const { return ok_; }
    Json json() const { return list_; }

private:
    Json list_ = Json::array();
    bool ok_ = true;
};

Json envelope(const std::string& command, Json parameters)
{
    return Json{{"tool", "cuspcenter"},
                {"tool_version", kToolVersion},
                {"schema_version", kReportSchemaVersion},
                {"command", command},
                {"parameters", std::move(parameters)},
                {"status", "fail"},
                {"checks", Json::array()},
                {"artifacts", Json::object()}};
}

Json parameter_json(const ParameterSet& ps)
{
    Json j = to_json(ps);
    j["reduced"] = to_json(reduce_parameters(ps));
    return j;
}

Report finish(Json env, const Checks& checks)
{
    env["status"] = checks.ok() ? "pass" : "fail";
    env["checks"] = checks.json();
    return {std::move(env), checks.ok()};
}

}  // namespace

Report run_invariants(const ParameterSet& ps, const RunOptions&)
{
    const ParameterSet red = reduce_parameters(ps);
    Json env = envelope("invariants", parameter_json(ps));
    Json& art = env["artifacts"];
    Checks checks;

    std::optional<OrbitStructure> orbits;
    checks.run("orbit_order", [&] {
        orbits = orbit_structure(red);
        return Json{{"orbits", orbits->size()}, {"modulus", orbits->modulus}};
    });
    for (int i = 1; i <= red.r; ++i)
        checks.run("unity_q_inv[level=" + std::to_string(i) + "]", [&] {
            const auto rep = uniformizer_check(red, i);
            if (!rep.passed)
                throw AssertionFailure("nu(omega_" + std::to_string(i) + " - n) = " + std::to_string(rep.valuation));
            return Json{{"valuation", rep.valuation}};
        });
    checks.run("pullback_mod_ell", [&] {
        const auto rep = pullback_mod_ell_check(red);
        if (!rep.passed)
            throw AssertionFailure("multiplicity " + std::to_string(rep.multiplicity));
        return Json{{"multiplicity", rep.multiplicity}};
    });
    std::optional<InvariantRingData> ring;
    checks.run("invariant_ring", [&] {
        ring = invariant_ring(red);
        return Json{{"dimension", ring->dimension()}};
    });
    if (ring) {
        const std::int64_t expected = 1 + (red.ell_power() - 1) / red.n;
        checks.run("degree", [&] {
            if (ring->m.degree() != expected)
                throw DegreeMismatch("deg m = " + std::to_string(ring->m.degree()));
            return Json{{"degree", expected}};
        });
        checks.run("mod_ell_power", [&] {
            if (!is_power_of_linear_mod_ell(ring->m, red.n, red.ell))
                throw AssertionFailure("m is not a power of Y - n modulo ell");
            return Json{{"exponent", expected}};
        });

        art["m"] = to_json(ring->m);
        Json levels = Json::array();
        for (const auto& lv : ring->levels)
            levels.push_back(Json{{"level", lv.level}, {"omega", to_json(lv.omega)}, {"min_poly", to_json(lv.min_poly)}});
        art["levels"] = std::move(levels);
        Json orbit_list = Json::array();
        for (std::size_t k = 0; k < ring->orbits.size(); ++k) {
            Json entry{{"rep", ring->orbits.reps[k]}, {"members", ring->orbits.orbits[k]}};
            try {
                entry["h"] = to_json(express_orbit_sum(*ring, ring->orbits.reps[k]));
            } catch (const VerificationFailure& e) {
                checks.fail("express_orbit_sum[" + std::to_string(ring->orbits.reps[k]) + "]", e.what());
            }
            orbit_list.push_back(std::move(entry));
        }
        art["orbits"] = std::move(orbit_list);
    }
    return finish(std::move(env), checks);
}

Report run_endo_ring(const ParameterSet& ps, const RunOptions& opts)
{
    const ParameterSet red = reduce_parameters(ps);
    Json env = envelope("endo-ring", parameter_json(ps));
    Json& art = env["artifacts"];
    Checks checks;

    const CharacterContext ctx(red);
    std::optional<InvariantRingData> ring;
    checks.run("invariant_ring", [&] {
        ring = invariant_ring(red);
        return Json{{"dimension", ring->dimension()}};
    });
    const auto classes = load_classes(red.q, red.n, opts);

    std::optional<CaseAnalysis> analysis;
    checks.run("case_analysis", [&] {
        analysis = case_analysis(red, classes);
        Json counts = Json::object();
        for (const auto& [bucket, count] : analysis->counts)
            counts[bucket_name(bucket)] = count;
        return Json{{"classes", classes.size()}, {"buckets", std::move(counts)}};
    });
    checks.run("sign_congruences", [&] {
        Json list = Json::array();
        for (const auto& s : sign_congruences(red)) {
            if (!s.holds)
                throw AssertionFailure("v = " + std::to_string(s.v) + ", d = " + std::to_string(s.d));
            list.push_back(Json{{"v", s.v}, {"d", s.d}, {"lhs", to_json(s.lhs)}, {"rhs", s.rhs.get_str()}});
        }
        return list;
    });
    if (!ring || !analysis)
        return finish(std::move(env), checks);

    std::optional<BlockVector> g;
    checks.run("gamma_minimal_polynomial", [&] {
        g = gamma(ctx, ring->m);
        return Json{{"degree", ring->m.degree()}};
    });
    if (!g)
        return finish(std::move(env), checks);

    Json certs = Json::array();
    checks.run("image_in_gamma_algebra", [&] {
        for (const auto& rec : analysis->records) {
            const IntPolynomial h = express_in_gamma(rec.delta, *g, ring->dimension());
            if (!(evaluate(h, *g) == rec.delta))
                throw AssertionFailure("certificate for " + rec.type.label() + " does not reproduce delta");
            certs.push_back(Json{{"class", rec.type.label()},
                                 {"bucket", bucket_name(rec.bucket)},
                                 {"in_s", rec.in_s},
                                 {"delta", to_json(rec.delta)},
                                 {"h", to_json(h)}});
        }
        return Json{{"certificates", certs.size()}};
    });
    checks.run("scaled_idempotent", [&] {
        const auto chain = reconstruct_scaled_idempotent(ctx, classes);
        art["idempotent_chain"] = Json{{"witness", chain.witness},
                                       {"delta", to_json(chain.delta)},
                                       {"unit", to_json(chain.unit)},
                                       {"result", to_json(chain.result)}};
        return Json{{"witness", chain.witness}};
    });
    checks.run("gamma_in_image", [&] {
        const auto chain = reconstruct_gamma(ctx, classes, *g);
        art["gamma_chain"] = Json{{"witness", chain.witness},
                                  {"delta", to_json(chain.delta)},
                                  {"unit", to_json(chain.unit)},
                                  {"normalized", to_json(chain.normalized)},
                                  {"correction", to_json(chain.correction)},
                                  {"result", to_json(chain.result)}};
        return Json{{"witness", chain.witness}};
    });
    checks.run("g_of_gamma", [&] {
        const auto out = g_of_gamma(ctx, *ring, *g);
        art["g_of_gamma"] = Json{{"g", to_json(out.g)}, {"a", to_json(out.a)}, {"valuation", out.valuation}};
        return Json{{"valuation", out.valuation}};
    });

    Json action = Json::array();
    for (std::size_t k = 0; k < g->size(); ++k) {
        const std::int64_t i = g->indices[k];
        action.push_back(Json{{"index", i},
                              {"representation", i == 0 ? "generalized Steinberg" : "supercuspidal pi_" + std::to_string(i)},
                              {"value", to_json((*g)[k])}});
    }
    art["presentation"] = "W(k)[Y]/(" + to_string(ring->m) + ")";
    art["action_exponent"] = red.q;
    art["m"] = to_json(ring->m);
    art["gamma"] = to_json(*g);
    art["action"] = std::move(action);
    art["degree_n_in_s"] = analysis->degree_n_in_s;
    art["certificates"] = std::move(certs);
    return finish(std::move(env), checks);
}

Report run_classes(std::int64_t q, int n, const std::optional<ParameterSet>& ps, const RunOptions& opts)
{
    std::int64_t gq = q;
    int gn = n;
    Json params{{"q", q}, {"n", n}};
    if (ps) {
        const ParameterSet red = reduce_parameters(*ps);
        gq = red.q;
        gn = red.n;
        params = parameter_json(*ps);
    }
    Json env = envelope("classes", params);
    Checks checks;
    const auto classes = load_classes(gq, gn, opts);
    checks.run("class_count", [&] {
        const BigInt expected = gl_class_count(gq, gn);
        if (BigInt(static_cast<long>(classes.size())) != expected)
            throw AssertionFailure("count " + std::to_string(classes.size()) + " != " + expected.get_str());
        return Json{{"count", classes.size()}};
    });
    checks.run("class_equation", [&] {
        BigInt total = 0;
        for (const auto& ct : classes)
            total += ct.class_size;
        if (total != gl_order(gq, gn))
            throw AssertionFailure("class sizes sum to " + total.get_str());
        return Json{{"group_order", total.get_str()}};
    });

    std::optional<CharacterContext> ctx;
    if (ps)
        ctx.emplace(*ps);
    Json list = Json::array();
    checks.run("cent_order", [&] {
        for (const auto& ct : classes) {
            Json entry = to_json(ct);
            if (ctx) {
                const auto pr = class_predicates(ct, ctx->params());
                entry["primary"] = pr.primary;
                entry["diagonalizable"] = pr.diagonalizable;
                entry["ell_regular"] = pr.ell_regular;
                entry["ord_ell_of_size"] = pr.ord_ell_of_size;
            }
            list.push_back(std::move(entry));
        }
        return Json();
    });
    env["artifacts"]["group_order"] = gl_order(gq, gn).get_str();
    env["artifacts"]["classes"] = std::move(list);
    return finish(std::move(env), checks);
}

Report run_oracle(std::int64_t q, int n, const std::optional<ParameterSet>& ps, const RunOptions& opts)
{
    std::int64_t gq = q;
    int gn = n;
    Json params{{"q", q}, {"n", n}};
    if (ps) {
        const ParameterSet red = reduce_parameters(*ps);
        gq = red.q;
        gn = red.n;
        params = parameter_json(*ps);
    }
    Json env = envelope("oracle", params);
    Json& art = env["artifacts"];
    Checks checks;

    const ClassCensus brute = matrix_oracle(gq, gn, opts.max_group_order);
    const auto classes = load_classes(gq, gn, opts);
    checks.run("matrix_census", [&] {
        if (brute.classes.size() != classes.size())
            throw AssertionFailure("matrix census has " + std::to_string(brute.classes.size()) + " classes, types give "
                                   + std::to_string(classes.size()));
        for (std::size_t k = 0; k < classes.size(); ++k) {
            const auto& b = brute.classes[k];
            if (!(b.type == classes[k]) || b.size != classes[k].class_size
                || b.centralizer_order != classes[k].centralizer_order)
                throw AssertionFailure("class " + classes[k].label() + " differs from matrix class " + b.type.label());
        }
        return Json{{"classes", classes.size()}};
    });
    Json sizes = Json::array();
    for (const auto& c : brute.classes)
        sizes.push_back(Json{{"class", c.type.label()}, {"size", c.size.get_str()}});
    art["group_order"] = brute.group_order.get_str();
    art["matrix_census"] = std::move(sizes);

    if (gn == 2) {
        checks.run("gl2_orthogonality", [&] {
            const auto table = gl2_table_oracle(gq);
            const auto rep = check_orthogonality(table);
            if (!rep.passed())
                throw AssertionFailure(std::string("rows ") + (rep.rows ? "ok" : "fail") + ", columns "
                                       + (rep.columns ? "ok" : "fail") + ", degrees " + (rep.dimensions ? "ok" : "fail")
                                       + ", sizes " + (rep.class_sizes ? "ok" : "fail"));
            return Json{{"characters", table.standard_rows}};
        });
        if (ps) {
            const auto values = compare_with_gl2_oracle(*ps);
            checks.run("gl2_character_values", [&] {
                for (const auto& v : values)
                    if (!v.agree)
                        throw AssertionFailure("chi_" + std::to_string(v.index) + " on " + v.class_label);
                return Json{{"comparisons", values.size()}};
            });
            checks.run("steinberg_sign", [&] {
                std::size_t semisimple = 0;
                for (const auto& v : values) {
                    if (v.index != 0)
                        continue;
                    const auto ct = std::find_if(classes.begin(), classes.end(),
                                                 [&](const ClassType& c) { return c.label() == v.class_label; });
                    if (ct == classes.end())
                        throw AssertionFailure("no class " + v.class_label);
                    const bool is_semisimple = std::all_of(ct->factors.begin(), ct->factors.end(), [](const auto& f) {
                        return std::all_of(f.partition.begin(), f.partition.end(), [](int part) { return part == 1; });
                    });
                    if (!is_semisimple)
                        continue;
                    if (!v.agree)
                        throw AssertionFailure("Steinberg value on " + v.class_label);
                    ++semisimple;
                }
                return Json{{"classes", semisimple}};
            });
            checks.run("gl2_delta", [&] {
                const auto bad = gl2_delta_mismatches(*ps);
                if (!bad.empty())
                    throw AssertionFailure("delta differs on " + bad.front());
                return Json{{"classes", classes.size()}};
            });
        }
    }
    return finish(std::move(env), checks);
}

Report run_deformation(const ParameterSet& ps, const RunOptions& opts)
{
    const ParameterSet red = reduce_parameters(ps);
    Json env = envelope("deformation", parameter_json(ps));
    Json& art = env["artifacts"];
    Checks checks;

    std::optional<DeformationSuite> suite;
    checks.run("point_relations", [&] {
        suite = run_deformation_suite(ps, opts.t_count);
        return Json{{"points", suite->points.size()}};
    });
    if (!suite)
        return finish(std::move(env), checks);
    checks.run("root_set", [&] {
        if (!suite->root_set)
            throw AssertionFailure("traces do not form the root set of m");
        return Json{{"roots", suite->traces.size()}};
    });
    checks.run("a_pi_presentation_vanishes", [&] {
        if (!suite->a_pi_vanishes)
            throw AssertionFailure("a relation of " + suite->a_pi.to_string() + " is nonzero at a point");
        return Json();
    });
    checks.run("factored_presentation_vanishes", [&] {
        if (!suite->factored_vanishes)
            throw AssertionFailure("a relation of " + suite->factored.to_string() + " is nonzero at a point");
        return Json();
    });
    checks.run("presentations_agree", [&] {
        if (!suite->same_f)
            throw AssertionFailure("f = " + to_string(suite->factored.f) + " differs from m");
        return Json();
    });

    Json per_a = Json::array();
    for (std::int64_t a = 0; a < red.ell_power(); ++a) {
        std::size_t count = 0;
        const PointReport* first = nullptr;
        for (const auto& p : suite->points)
            if (p.a == a) {
                ++count;
                if (!first)
                    first = &p;
            }
        per_a.push_back(Json{{"a", a}, {"branch", first->branch}, {"trace", to_json(first->trace)}, {"points", count}});
    }
    Json traces = Json::array();
    for (const auto& t : suite->traces)
        traces.push_back(to_json(t));
    auto relations = [](const APiPresentation& p) {
        Json list = Json::array();
        for (const auto& r : p.relations)
            list.push_back(r.to_string());
        return list;
    };
    art["t_count"] = suite->a_pi.t_count;
    art["a_pi_presentation"] = Json{{"text", suite->a_pi.to_string()}, {"i0_root", to_json(suite->a_pi.i0_root)},
                                     {"relations", relations(suite->a_pi)}};
    art["factored_presentation"] = Json{{"text", suite->factored.to_string()},
                                           {"f", to_json(suite->factored.f)},
                                           {"relations", relations(suite->factored)}};
    art["points"] = std::move(per_a);
    art["traces"] = std::move(traces);
    return finish(std::move(env), checks);
}

ParameterSet command_parameters(const CommandInput& in)
{
    if (!in.ell)
        throw InvalidInput(in.command + " requires --ell");
    const std::int64_t ell = *in.ell;
    int n = 0;
    if (in.n)
        n = *in.n;
    else if (ell > 1 && in.q > 0 && in.d > 0 && std::gcd(in.q, ell) == 1) {
        std::int64_t qd = 1;
        for (int k = 0; k < in.d; ++k)
            qd = qd * (in.q % ell) % ell;
        n = static_cast<int>(multiplicative_order(qd, ell)) * in.d;
    }
    return validate_parameters(in.q, ell, n, in.d);
}

Report run_command(const CommandInput& in, const RunOptions& opts)
{
    if (in.command == "invariants")
        return run_invariants(command_parameters(in), opts);
    if (in.command == "endo-ring")
        return run_endo_ring(command_parameters(in), opts);
    if (in.command == "deformation")
        return run_deformation(command_parameters(in), opts);
    if (in.command != "classes" && in.command != "oracle")
        throw InvalidInput("unknown command " + in.command);

    std::optional<ParameterSet> ps;
    if (in.ell)
        ps = command_parameters(in);
    if (!in.n && !ps)
        throw InvalidInput(in.command + " requires --n");
    if (in.n && *in.n < 1)
        throw InvalidInput("n must be positive");
    if (in.q < 2 || prime_power_decomposition(in.q).prime == 0)
        throw InvalidInput("q must be a prime power");
    const int n = in.n ? *in.n : ps->n;
    if (in.command == "classes")
        return run_classes(in.q, n, ps, opts);
    return run_oracle(in.q, n, ps, opts);
}

std::string render_json(const Json& envelope)
{
    return envelope.dump(2) + "\n";
}

std::string render_text(const Json& env)
{
    std::ostringstream os;
    os << "cuspcenter " << env.at("tool_version").get<std::string>() << "  " << env.at("command").get<std::string>()
       << "\n";
    os << "parameters:";
    for (const auto& [key, value] : env.at("parameters").items())
        if (!value.is_object())
            os << " " << key << "=" << value.dump();
    os << "\nstatus: " << env.at("status").get<std::string>() << "\n";
    for (const auto& c : env.at("checks")) {
        os << "  [" << c.at("status").get<std::string>() << "] " << c.at("name").get<std::string>();
        if (c.contains("witness"))
            os << "  " << (c["witness"].is_string() ? c["witness"].get<std::string>() : c["witness"].dump());
        os << "\n";
    }
    const Json& art = env.at("artifacts");
    for (const char* key : {"presentation", "group_order"})
        if (art.contains(key))
            os << key << ": " << art[key].get<std::string>() << "\n";
    if (art.contains("m"))
        os << "m(Y) = " << art["m"]["text"].get<std::string>() << "\n";
    if (art.contains("a_pi_presentation"))
        os << "A_pi = " << art["a_pi_presentation"]["text"].get<std::string>() << "\n";
    if (art.contains("classes") && art["classes"].is_array())
        for (const auto& c : art["classes"])
            os << "  " << c.at("label").get<std::string>() << "  |C| = " << c.at("class_size").get<std::string>() << "\n";
    if (art.contains("matrix_census"))
        for (const auto& c : art["matrix_census"])
            os << "  " << c.at("class").get<std::string>() << "  |C| = " << c.at("size").get<std::string>() << "\n";
    return os.str();
}

}  // namespace cuspcenter
