#ifndef EINQ_ERRORS_HPP
#define EINQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace einq {

// Malformed algebra descriptor, e.g. so(2) or su(1).
struct invalid_algebra_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// so(3) has no Table-C normalization of its own; callers convert to su(2).
struct use_su2_normalization_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Embedding pair not in the curated index table. Never computed silently.
struct not_in_catalog_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural constants contradict one of the trace identities. Carries both sides.
struct inconsistency_error : std::runtime_error {
    inconsistency_error(const std::string& what, std::string lhs, std::string rhs)
        : std::runtime_error(what + " (lhs=" + lhs + ", rhs=" + rhs + ")"),
          lhs_value(std::move(lhs)), rhs_value(std::move(rhs)) {}
    std::string lhs_value;
    std::string rhs_value;
};

// Evaluation outside the metric domain (x <= 0 or y <= 0).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation requires the other h_n/h_u branch.
struct branch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Family parameter outside its constraint box; names the violated bound.
struct parameter_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Certification could not reach the requested tolerance within the bisection budget.
struct refinement_budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal algebraic cross-check failed; signals bad structural constants.
struct internal_consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace einq

#endif
