#ifndef EINQ_SCAN_HPP
#define EINQ_SCAN_HPP

#include <vector>

#include "einq/families.hpp"
#include "einq/solver.hpp"

namespace einq {

// Every scan kernel exists in two variants sharing one per-instance body:
// a serial reference and an OpenMP-parallel version. Results are written by
// index, so output order is identical regardless of execution mode.
enum class Execution { Serial, Parallel };

struct ScanBounds {
    int max_n = 8;
    int max_k = 8;
    int max_m = 3;  // extra sweep of the sp-chain collision subfamily (n1 = 9m+1)
};

struct ExceptionScanRow {
    FamilyId id;
    FamilyParams params;
    Rational omega1;
    Rational omega2;
    bool omega_negative;
    ExceptionClass exception_class;
};

// All instances within bounds (plus the A4 collision subfamily up to max_m),
// with omega signs and exception classes. A3/B2 rows are reported from their
// positive omega forms alone: a strictly positive omega pair already rules the
// collisions out, no user-classified subalgebra needed.
std::vector<ExceptionScanRow> scan_exceptions(const ScanBounds& bounds, Execution mode);

struct CertificationRow {
    FamilyId id;
    FamilyParams params;
    ExceptionClass exception_class;
    bool omegas_nonnegative;
    int generic_solutions;
    bool window_ok;          // generic roots certified inside (1, beta); vacuous when none
    Rational residual_bound; // max certified residual over generic solutions
};

// Runs the generic solver over every instantiable instance within bounds.
std::vector<CertificationRow> certify_families(const ScanBounds& bounds, const SolveOptions& opts,
                                               Execution mode);

}  // namespace einq

#endif
