#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cuspcenter/center_map.hpp"
#include "cuspcenter/classes.hpp"
#include "cuspcenter/cyclotomic.hpp"
#include "cuspcenter/parameters.hpp"
#include "cuspcenter/polynomial.hpp"

namespace cuspcenter {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kCensusSchemaVersion = 1;

Json to_json(const Rational& x);
Json to_json(const CyclotomicNumber& x);
Json to_json(const IntPolynomial& p);
Json to_json(const BlockVector& v);
Json to_json(const ParameterSet& ps);
Json to_json(const ClassType& ct);

Rational rational_from_json(const Json& j);

/// On-disk store of class enumerations keyed by (q, n).
class CensusCache {
public:
    explicit CensusCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::filesystem::path path_for(std::int64_t q, int n) const;
    /// Returns the cached classes if the file exists, has the current schema
    /// and passes the count and class-equation checks; nullopt otherwise.
    std::optional<std::vector<ClassType>> load(std::int64_t q, int n) const;
    void store(std::int64_t q, int n, const std::vector<ClassType>& classes) const;

private:
    std::filesystem::path dir_;
};

Json census_to_json(std::int64_t q, int n, const std::vector<ClassType>& classes);
std::vector<ClassType> census_from_json(const Json& j);

struct RunOptions {
    std::int64_t max_group_order = 5000;
    int t_count = 0;  ///< 0: n
    std::optional<std::filesystem::path> cache_dir;
    EnumerationLimits limits;
};

struct Report {
    Json envelope;
    bool passed = false;
};

/// Classes of GL_n(F_q), through the cache when one is configured.
std::vector<ClassType> load_classes(std::int64_t q, int n, const RunOptions& opts);

Report run_invariants(const ParameterSet& ps, const RunOptions& opts);
Report run_endo_ring(const ParameterSet& ps, const RunOptions& opts);
/// ps given: classes of the reduced group annotated with predicates and
/// buckets. Otherwise plain census of GL_n(F_q).
Report run_classes(std::int64_t q, int n, const std::optional<ParameterSet>& ps, const RunOptions& opts);
Report run_oracle(std::int64_t q, int n, const std::optional<ParameterSet>& ps, const RunOptions& opts);
Report run_deformation(const ParameterSet& ps, const RunOptions& opts);

/// Command-line semantics: ell is required except for classes and oracle,
/// and n defaults to d times the order of q^d modulo ell.
struct CommandInput {
    std::string command;
    std::int64_t q = 0;
    std::optional<std::int64_t> ell;
    std::optional<int> n;
    int d = 1;
};

ParameterSet command_parameters(const CommandInput& in);
Report run_command(const CommandInput& in, const RunOptions& opts);

std::string render_json(const Json& envelope);
std::string render_text(const Json& envelope);

}  // namespace cuspcenter
