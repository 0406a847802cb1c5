#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "cuspcenter/errors.hpp"
#include "cuspcenter/report.hpp"

using namespace cuspcenter;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;

}  // namespace

int main(int argc, char** argv)
{
    CommandInput input;
    RunOptions opts;
    std::string out = "json";
    std::optional<std::string> cache_dir;

    CLI::App app{"Exact checks for the centre of the l-block of a cuspidal type"};
    app.add_option("command", input.command, "invariants | endo-ring | classes | oracle | deformation")
        ->required()
        ->check(CLI::IsMember({"invariants", "endo-ring", "classes", "oracle", "deformation"}));
    app.add_option("--q", input.q, "order of the residue field")->required();
    app.add_option("--ell", input.ell, "the prime l");
    app.add_option("--n", input.n, "rank; defaults to d times the order of q^d mod l");
    app.add_option("--d", input.d, "block size of the unreduced form")->capture_default_str();
    app.add_option("--out", out, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--cache-dir", cache_dir, "census cache directory (fallback: $CUSPCENTER_CACHE)");
    app.add_option("--max-group-order", opts.max_group_order, "largest group the matrix oracle enumerates")
        ->capture_default_str();
    app.add_option("--t-count", opts.t_count, "number of T generators in emitted presentations (0: n)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitInvalid;
    }

    if (cache_dir)
        opts.cache_dir = *cache_dir;
    else if (const char* env = std::getenv("CUSPCENTER_CACHE"); env && *env)
        opts.cache_dir = env;

    try {
        const Report report = run_command(input, opts);
        std::cout << (out == "json" ? render_json(report.envelope) : render_text(report.envelope));
        return report.passed ? kExitPass : kExitFailure;
    } catch (const InvalidInput& e) {
        std::cerr << "cuspcenter: invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "cuspcenter: " << e.what() << "\n";
        return kExitFailure;
    }
}
