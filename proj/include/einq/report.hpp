#ifndef EINQ_REPORT_HPP
#define EINQ_REPORT_HPP

#include <string>
#include <vector>

#include "einq/quadruple.hpp"
#include "einq/scan.hpp"
#include "einq/solver.hpp"

namespace einq {

struct SolveReport {
    Quadruple quadruple;
    std::vector<EinsteinSolution> solutions;
    ExceptionClass exception_class = ExceptionClass::NotExceptional;
    double timing_ms = 0.0;
};

// Deterministic JSON: solutions come pre-sorted from the solver, keys are in
// fixed order, rationals are "p/q" strings and enclosures ["lo","hi"] pairs.
// Timing is emitted only on request so default output is byte-stable.
std::string solve_report_to_json(const SolveReport& report, bool include_timing = false);

std::string solve_report_to_table(const SolveReport& report);

// Structural validation against the shipped schema (share/solve_report.schema.json
// documents the same shape); returns problem descriptions, empty when valid.
std::vector<std::string> validate_solve_report_json(const std::string& json_text);

// CSV surfaces. verify rows: scope,check,expected,actual,status.
struct VerifyCheck {
    std::string scope;
    std::string name;
    std::string expected;
    std::string actual;
    bool pass;
};
std::string verify_checks_to_csv(const std::vector<VerifyCheck>& checks);

// scan CSV: family,n1,n2,n3,k,c1,c2,l_p,k_p,h_p,omega1,omega2,exception_class
std::string exception_rows_to_csv(const std::vector<ExceptionScanRow>& rows);

}  // namespace einq

#endif
