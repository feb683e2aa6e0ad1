#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>

#include "einq/algebra.hpp"
#include "einq/errors.hpp"
#include "einq/families.hpp"
#include "einq/fixtures.hpp"
#include "einq/products.hpp"
#include "einq/report.hpp"
#include "einq/scan.hpp"
#include "einq/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
    std::string tol = "1/1000000000000";
    long max_iter = 1000000;
    bool json = false;
    bool table = false;
    bool timing = false;
};

einq::SolveOptions solve_options(const CommonOpts& c) {
    einq::SolveOptions opts;
    opts.tol = einq::parse_rational(c.tol);
    if (opts.tol <= 0) throw einq::parameter_error("--tol must be positive");
    opts.max_iter = c.max_iter;
    return opts;
}

int emit_report(const einq::Quadruple& q, const CommonOpts& common) {
    auto start = std::chrono::steady_clock::now();
    einq::SolveReport report;
    report.quadruple = q;
    report.exception_class =
        q.equal_h_branch() && q.uniform_fiber_constants() ? einq::exception_detect(q)
                                                          : einq::ExceptionClass::NotExceptional;
    report.solutions = einq::solve_all(q, solve_options(common));
    report.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (common.table && !common.json)
        std::cout << einq::solve_report_to_table(report);
    else
        std::cout << einq::solve_report_to_json(report, common.timing);
    return kExitOk;
}

int run_analyze(const std::string& family, const einq::FamilyParams& params,
                const CommonOpts& common) {
    auto id = einq::parse_family(family);
    if (!id) throw einq::parameter_error("unknown family: " + family);
    return emit_report(einq::instantiate(*id, params), common);
}

int run_verify(const std::string& scope, bool corrupt) {
    std::vector<einq::VerifyCheck> checks;
    auto add = [&](std::vector<einq::VerifyCheck> more) {
        checks.insert(checks.end(), more.begin(), more.end());
    };
    if (scope == "table-c" || scope == "all") add(einq::table_c_checks());
    if (scope == "appendix-a" || scope == "all") add(einq::appendix_a_checks());
    if (scope == "appendix-b" || scope == "all") add(einq::appendix_b_checks());
    if (checks.empty()) throw einq::parameter_error("unknown scope: " + scope);
    if (corrupt) checks = einq::corrupt_one(std::move(checks));
    std::cout << einq::verify_checks_to_csv(checks);
    for (const auto& c : checks)
        if (!c.pass) return kExitVerifyFailed;
    return kExitOk;
}

int run_scan(int max_n, int max_k, int max_m, const std::string& family_filter, bool serial) {
    if (max_n < 2 || max_k < 1)
        throw einq::parameter_error(
            "scan bounds below family minima (need max-n >= 2, max-k >= 1)");
    einq::ScanBounds bounds{max_n, max_k, max_m};
    auto rows =
        einq::scan_exceptions(bounds, serial ? einq::Execution::Serial : einq::Execution::Parallel);
    std::vector<einq::ExceptionScanRow> flagged;
    for (auto& r : rows) {
        if (!family_filter.empty() && family_filter != einq::family_name(r.id)) continue;
        if (r.omega_negative || r.exception_class != einq::ExceptionClass::NotExceptional)
            flagged.push_back(std::move(r));
    }
    std::cout << einq::exception_rows_to_csv(flagged);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Einstein-metric computations for chains of compact subgroups"};
    app.require_subcommand(1);

    CommonOpts common;
    einq::FamilyParams params;
    std::string family, scope = "all", family_filter;
    int max_n = 0, max_k = 0, max_m = 3;
    long long count_n = 0;
    bool corrupt = false, serial = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", common.tol, "residual tolerance (rational or 1e-N)");
        cmd->add_option("--max-iter", common.max_iter, "bisection budget");
        cmd->add_flag("--json", common.json, "machine-readable JSON output (default)");
        cmd->add_flag("--table", common.table, "human-readable output instead of JSON");
        cmd->add_flag("--timing", common.timing, "include timing_ms in JSON output");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "solve one family instance");
    analyze->add_option("--family", family, "family id (A1..A11, B1..B18)")->required();
    int n1 = 0, n2 = 0, n3 = 0, k = 0;
    long dim_h = 0, dim_k = 0;
    analyze->add_option("--n1", n1, "first block count");
    analyze->add_option("--n2", n2, "second block count");
    analyze->add_option("--n3", n3, "third block count");
    analyze->add_option("--k", k, "innermost block size");
    analyze->add_option("--dim-h", dim_h, "dimension of the user-classified subalgebra (A3)");
    analyze->add_option("--dim-k", dim_k, "dimension of the user-classified subalgebra (B2)");
    add_common(analyze);

    CLI::App* verify = app.add_subcommand("verify-tables", "run the fixture comparisons");
    verify->add_option("--scope", scope, "table-c | appendix-a | appendix-b | all");
    verify->add_flag("--self-test-corrupt", corrupt,
                     "corrupt one expected value to exercise the failure path");

    CLI::App* scan = app.add_subcommand("scan", "negative-omega and exception scan");
    scan->add_option("--max-n", max_n, "upper bound for every n_i")->required();
    scan->add_option("--max-k", max_k, "upper bound for k")->required();
    scan->add_option("--max-m", max_m, "extra sweep bound for the sp-chain collision subfamily");
    scan->add_option("--family", family_filter, "restrict output to one family");
    scan->add_flag("--serial", serial, "use the serial reference kernel");

    CLI::App* count = app.add_subcommand("count", "non-naturally-reductive metric count bound");
    count->add_option("n", count_n, "number of simple factors")->required();

    CLI::App* raw = app.add_subcommand("solve-raw", "solve a quadruple JSON record from stdin");
    add_common(raw);

    std::string which = "algebras";
    CLI::App* catalog = app.add_subcommand("catalog", "print the serialized catalog tables");
    catalog->add_option("--which", which, "algebras | indices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) {
            if (analyze->count("--n1")) params.n1 = n1;
            if (analyze->count("--n2")) params.n2 = n2;
            if (analyze->count("--n3")) params.n3 = n3;
            if (analyze->count("--k")) params.k = k;
            if (analyze->count("--dim-h")) params.dim_h = dim_h;
            if (analyze->count("--dim-k")) params.dim_k = dim_k;
            return run_analyze(family, params, common);
        }
        if (verify->parsed()) return run_verify(scope, corrupt);
        if (scan->parsed()) return run_scan(max_n, max_k, max_m, family_filter, serial);
        if (count->parsed()) {
            std::cout << einq::count_nonnaturally_reductive(count_n) << "\n";
            return kExitOk;
        }
        if (raw->parsed()) {
            std::string text((std::istreambuf_iterator<char>(std::cin)),
                             std::istreambuf_iterator<char>());
            return emit_report(einq::quadruple_from_json(text), common);
        }
        if (catalog->parsed()) {
            if (which == "algebras")
                std::cout << einq::serialize_algebra_catalog();
            else if (which == "indices")
                std::cout << einq::serialize_embedding_indices();
            else
                throw einq::parameter_error("unknown catalog table: " + which);
            return kExitOk;
        }
    } catch (const einq::refinement_budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
