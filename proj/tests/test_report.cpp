#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "einq/families.hpp"
#include "einq/fixtures.hpp"
#include "einq/report.hpp"

using namespace einq;

namespace {

SolveReport make_report(FamilyId id) {
    SolveReport report;
    report.quadruple = instantiate(id);
    report.exception_class = exception_detect(report.quadruple);
    report.solutions = solve_all(report.quadruple, SolveOptions{});
    report.timing_ms = 3.25;
    return report;
}

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    std::string in_file = std::string(EINQ_CLI_PATH) + "_stdin.tmp";
    std::string out_file = std::string(EINQ_CLI_PATH) + "_stdout.tmp";
    {
        std::ofstream f(in_file);
        f << stdin_text;
    }
    std::string cmd = std::string(EINQ_CLI_PATH) + " " + args + " < " + in_file + " > " + out_file +
                      " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream f(out_file);
    std::stringstream buf;
    buf << f.rdbuf();
    std::remove(in_file.c_str());
    std::remove(out_file.c_str());
    return {WEXITSTATUS(status), buf.str()};
}

}  // namespace

TEST_CASE("report JSON is schema-valid and lossless") {
    SolveReport report = make_report(FamilyId::A6);
    std::string json = solve_report_to_json(report);
    CHECK(validate_solve_report_json(json).empty());

    // quadruple block round-trips losslessly
    Quadruple back = quadruple_from_json(json);
    CHECK(back.casimir == report.quadruple.casimir);
    CHECK(back.c1 == report.quadruple.c1);

    // solutions are sorted by (branch, x lower bound)
    CHECK(json.find("\"x=1\"") < json.find("\"x=y\""));
    CHECK(json.find("\"x=y\"") < json.find("\"generic\""));

    // timing only on request
    CHECK(json.find("timing_ms") == std::string::npos);
    CHECK(solve_report_to_json(report, true).find("timing_ms") != std::string::npos);

    std::vector<std::string> problems = validate_solve_report_json("{\"schema_version\": 1}");
    CHECK_FALSE(problems.empty());
}

TEST_CASE("deterministic output across repeated solves") {
    std::string a = solve_report_to_json(make_report(FamilyId::B5));
    std::string b = solve_report_to_json(make_report(FamilyId::B5));
    CHECK(a == b);
}

TEST_CASE("verify CSV escaping and status column") {
    std::vector<VerifyCheck> checks = {{"scope", "na,me", "1/2", "1/2", true},
                                       {"scope", "other", "1", "2", false}};
    std::string csv = verify_checks_to_csv(checks);
    CHECK(csv.find("\"na,me\"") != std::string::npos);
    CHECK(csv.find("PASS") != std::string::npos);
    CHECK(csv.find("FAIL") != std::string::npos);
}

TEST_CASE("fixture inventories pass wholesale") {
    for (const auto& c : table_c_checks()) CHECK(c.pass);
    for (const auto& c : appendix_a_checks()) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
    for (const auto& c : appendix_b_checks()) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
    auto corrupted = corrupt_one(table_c_checks());
    CHECK_FALSE(corrupted.front().pass);
}

TEST_CASE("cli: analyze output, exit codes, determinism") {
    CliResult a6 = run_cli("analyze --family A6");
    CHECK(a6.exit_code == 0);
    CHECK(validate_solve_report_json(a6.output).empty());
    CliResult again = run_cli("analyze --family A6");
    CHECK(a6.output == again.output);  // byte-identical reports

    CHECK(run_cli("analyze --family A5").output.find("\"A5\"") != std::string::npos);
    CHECK(run_cli("analyze --family Z9").exit_code == 2);
    CHECK(run_cli("analyze --family A4 --n1 1 --n2 2 --n3 2 --k 1").exit_code == 2);
    CHECK(run_cli("analyze --family A6 --max-iter 2").exit_code == 3);
}

TEST_CASE("cli: verify-tables exit codes") {
    CHECK(run_cli("verify-tables --scope table-c").exit_code == 0);
    CHECK(run_cli("verify-tables --scope all").exit_code == 0);
    CHECK(run_cli("verify-tables --scope appendix-a --self-test-corrupt").exit_code == 1);
    CHECK(run_cli("verify-tables --scope bogus").exit_code == 2);
}

TEST_CASE("cli: scan surface") {
    CliResult scan = run_cli("scan --max-n 5 --max-k 5");
    CHECK(scan.exit_code == 0);
    CHECK(scan.output.find("A5,") != std::string::npos);
    CHECK(scan.output.find("B3_K1") != std::string::npos);
    CHECK(scan.output.find("A4_FAMILY") != std::string::npos);
    CliResult b1 = run_cli("scan --max-n 8 --max-k 8 --family B1");
    std::string header = "family,n1,n2,n3,k,c1,c2,l_p,k_p,h_p,omega1,omega2,exception_class\n";
    CHECK(b1.output == header);  // zero exception rows
    CHECK(run_cli("scan").exit_code == 2);              // empty bounds
    CHECK(run_cli("scan --max-n 1 --max-k 1").exit_code == 2);
}

TEST_CASE("cli: count and solve-raw") {
    CHECK(run_cli("count 12").output == "4\n");
    CHECK(run_cli("count 7").output == "0\n");
    CHECK(run_cli("count 1").exit_code == 2);

    std::string quad = quadruple_to_json(instantiate(FamilyId::B4));
    CliResult raw = run_cli("solve-raw", quad);
    CHECK(raw.exit_code == 0);
    CHECK(validate_solve_report_json(raw.output).empty());
    CHECK(run_cli("solve-raw", "{not json").exit_code == 2);
}
