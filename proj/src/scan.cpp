#include "einq/scan.hpp"

#include <omp.h>

#include <stdexcept>

namespace einq {

namespace {

constexpr FamilyId kAllFamilies[] = {
    FamilyId::A1,  FamilyId::A2,  FamilyId::A3,  FamilyId::A4,  FamilyId::A5,  FamilyId::A6,
    FamilyId::A7,  FamilyId::A8,  FamilyId::A9,  FamilyId::A10, FamilyId::A11, FamilyId::B1,
    FamilyId::B2,  FamilyId::B3,  FamilyId::B4,  FamilyId::B5,  FamilyId::B6,  FamilyId::B7,
    FamilyId::B8,  FamilyId::B9,  FamilyId::B10, FamilyId::B11, FamilyId::B12, FamilyId::B13,
    FamilyId::B14, FamilyId::B15, FamilyId::B16, FamilyId::B17, FamilyId::B18,
};

struct Instance {
    FamilyId id;
    FamilyParams params;
};

std::vector<Instance> grid_instances(const ScanBounds& bounds, bool include_a4_specials) {
    std::vector<Instance> out;
    for (FamilyId id : kAllFamilies)
        for (const auto& p : enumerate_params(id, bounds.max_n, bounds.max_k))
            out.push_back({id, p});
    if (include_a4_specials) {
        for (int m = 1; m <= bounds.max_m; ++m) {
            FamilyParams p;
            p.n1 = 9 * m + 1;
            p.n2 = 2;
            p.n3 = 2;
            p.k = 2 * m;
            if (p.n1 <= bounds.max_n && p.k <= bounds.max_k) continue;  // already on the grid
            out.push_back({FamilyId::A4, p});
        }
    }
    return out;
}

template <typename Row, typename Kernel>
std::vector<Row> run_kernel(const std::vector<Instance>& instances, Execution mode,
                            Kernel&& kernel) {
    std::vector<Row> rows(instances.size());
    if (mode == Execution::Parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(instances.size()); ++i) {
            try {
                rows[static_cast<size_t>(i)] = kernel(instances[static_cast<size_t>(i)]);
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    } else {
        for (size_t i = 0; i < instances.size(); ++i) rows[i] = kernel(instances[i]);
    }
    return rows;
}

ExceptionScanRow exception_row(const Instance& inst) {
    ExceptionScanRow row;
    row.id = inst.id;
    row.params = inst.params;
    OmegaClosedForm w = omega_closed_form(inst.id, inst.params);
    row.omega1 = w.omega1;
    row.omega2 = w.omega2;
    row.omega_negative = (w.omega1 < 0 && inst.id != FamilyId::B2) ||
                         (w.omega2 < 0 && !w.omega2_is_lower_bound);
    if (inst.id == FamilyId::A3 || inst.id == FamilyId::B2) {
        // Both omegas strictly positive: the extra root sits strictly inside
        // (1, beta), so it cannot collide with either known metric.
        row.exception_class = ExceptionClass::NotExceptional;
    } else {
        row.exception_class = exception_detect(instantiate(inst.id, inst.params));
    }
    return row;
}

CertificationRow certification_row(const Instance& inst, const SolveOptions& opts) {
    CertificationRow row;
    row.id = inst.id;
    row.params = inst.params;
    Quadruple q = instantiate(inst.id, inst.params);
    row.exception_class = exception_detect(q);
    OmegaClosedForm w = omega_closed_form(inst.id, inst.params);
    row.omegas_nonnegative = w.omega1 >= 0 && w.omega2 >= 0;
    MFactorization mf = m_factorization(q);

    row.generic_solutions = 0;
    row.window_ok = true;
    row.residual_bound = Rational(0);
    for (const auto& sol : solve_generic(q, opts)) {
        if (sol.branch != Branch::Generic) continue;
        ++row.generic_solutions;
        if (sol.residual_bound > row.residual_bound) row.residual_bound = sol.residual_bound;
        bool inside = sol.x.enclosure.lo > 1 && sol.x.enclosure.hi < mf.beta;
        if (!inside) row.window_ok = false;
    }
    return row;
}

}  // namespace

std::vector<ExceptionScanRow> scan_exceptions(const ScanBounds& bounds, Execution mode) {
    std::vector<Instance> instances = grid_instances(bounds, true);
    return run_kernel<ExceptionScanRow>(instances, mode,
                                        [](const Instance& i) { return exception_row(i); });
}

std::vector<CertificationRow> certify_families(const ScanBounds& bounds, const SolveOptions& opts,
                                               Execution mode) {
    std::vector<Instance> all = grid_instances(bounds, false);
    std::vector<Instance> solvable;
    for (const auto& inst : all)
        if (inst.id != FamilyId::A3 && inst.id != FamilyId::B2) solvable.push_back(inst);
    return run_kernel<CertificationRow>(
        solvable, mode, [&](const Instance& i) { return certification_row(i, opts); });
}

}  // namespace einq
