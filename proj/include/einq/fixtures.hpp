#ifndef EINQ_FIXTURES_HPP
#define EINQ_FIXTURES_HPP

#include <vector>

#include "einq/report.hpp"

namespace einq {

// Machine-checked fixture inventories behind `verify-tables`. Expected values
// are literal pins; actuals are recomputed through the library.
std::vector<VerifyCheck> table_c_checks();
std::vector<VerifyCheck> appendix_a_checks();
std::vector<VerifyCheck> appendix_b_checks();

// Same set with one expected value intentionally corrupted, for testing the
// failure path of the harness end to end.
std::vector<VerifyCheck> corrupt_one(std::vector<VerifyCheck> checks);

}  // namespace einq

#endif
