#include <doctest.h>

#include "einq/scan.hpp"

using namespace einq;

// The OpenMP kernels must be bit-identical to the serial reference.

TEST_CASE("exception scan: serial reference equals parallel kernel") {
    ScanBounds bounds{5, 5, 3};
    auto serial = scan_exceptions(bounds, Execution::Serial);
    auto parallel = scan_exceptions(bounds, Execution::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].id == parallel[i].id);
        CHECK(serial[i].params.to_string() == parallel[i].params.to_string());
        CHECK(serial[i].omega1 == parallel[i].omega1);
        CHECK(serial[i].omega2 == parallel[i].omega2);
        CHECK(serial[i].omega_negative == parallel[i].omega_negative);
        CHECK(serial[i].exception_class == parallel[i].exception_class);
    }
}

TEST_CASE("certification: serial reference equals parallel kernel") {
    ScanBounds bounds{3, 2, 1};
    SolveOptions opts;
    auto serial = certify_families(bounds, opts, Execution::Serial);
    auto parallel = certify_families(bounds, opts, Execution::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].id == parallel[i].id);
        CHECK(serial[i].params.to_string() == parallel[i].params.to_string());
        CHECK(serial[i].generic_solutions == parallel[i].generic_solutions);
        CHECK(serial[i].window_ok == parallel[i].window_ok);
        CHECK(serial[i].residual_bound == parallel[i].residual_bound);
        CHECK(serial[i].exception_class == parallel[i].exception_class);
    }
}

TEST_CASE("certification rows behave per the classification") {
    ScanBounds bounds{3, 2, 1};
    auto rows = certify_families(bounds, SolveOptions{}, Execution::Parallel);
    CHECK(!rows.empty());
    for (const auto& row : rows) {
        if (row.exception_class == ExceptionClass::NotExceptional) {
            CHECK(row.generic_solutions >= 1);
            CHECK(row.residual_bound < rat(1, 10000000000L));
        } else {
            CHECK(row.generic_solutions == 0);
        }
        if (row.omegas_nonnegative) CHECK(row.window_ok);
    }
}
