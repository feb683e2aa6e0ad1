#ifndef EINQ_SOLVER_HPP
#define EINQ_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "einq/polynomial.hpp"
#include "einq/quadruple.hpp"
#include "einq/rational.hpp"

namespace einq {

enum class Branch { XEqualsOne, XEqualsY, Generic };
const char* branch_name(Branch b);

enum class ExceptionClass { NotExceptional, A4Family, A5, B3K1 };
const char* exception_class_name(ExceptionClass e);

// A certified value: exact rational, or an enclosure with exact endpoints.
struct CertifiedValue {
    std::optional<Rational> exact;
    RationalInterval enclosure;

    static CertifiedValue from_exact(Rational v) {
        return {v, RationalInterval(v)};
    }
    bool is_exact() const { return exact.has_value(); }
    Rational lower() const { return enclosure.lo; }
};

struct EinsteinSolution {
    CertifiedValue x;
    CertifiedValue y;
    CertifiedValue lambda;
    Branch branch = Branch::Generic;
    bool naturally_reductive = false;
    std::vector<std::string> reasons;  // subset of {"x=1", "x=y", "k-ideal-in-l"}
    Rational residual_bound;           // certified sup of the three residual magnitudes
};

struct SolveOptions {
    Rational tol = Rational(1, 1000000000000L);  // residual certification target
    long max_iter = 1000000;                     // total bisection budget
};

// Quadratic governing the x != 1 elimination:
// Delta(x) = M x^2 - (k_u/2 + c1/4) x + (k_u - h_u)/2 + (c1 - c2)/4,  M = c2/4 + h_n/2.
RationalPolynomial delta_quadratic(const Quadruple& q);

// Linear factor on the h_n = h_u branch, Delta(x) = (x-1) delta(x), plus its root.
struct DeltaLinear {
    RationalPolynomial poly;
    Rational delta0;
};
DeltaLinear delta_linear(const Quadruple& q);

// Delta(x) - (1-c1)/4 (x-1) = M (x-alpha)(x-beta); alpha = 1 on the equal-h
// branch and the expansion is re-checked coefficient by coefficient.
struct MFactorization {
    Rational M;
    Rational alpha;
    Rational beta;
};
MFactorization m_factorization(const Quadruple& q);

// eta(x) = (x/2)(1/2 + l_p - k_p - c1/2) + (k_p - h_p)/2.
RationalPolynomial eta_linear(const Quadruple& q);

// The cubic whose positive roots off {1, beta} give the new Einstein metrics:
// fbar(x) = M (x - beta) eta(x)^2 + (1-c1)/8 (1/2 + l_p) x (omega1 x + k_p - h_p).
RationalPolynomial fbar_cubic(const Quadruple& q);

// Degree-six polynomial (lhs - rhs) of the squared Einstein condition in x.
RationalPolynomial einstein_sextic(const Quadruple& q);

// Exact identity: einstein_sextic == -M (x-1)^2 (x-beta) fbar on the equal-h
// branch with uniform fiber constants.
bool sextic_identity_holds(const Quadruple& q);

// Metrics with x = 1 (scaling the p-summand): the quadratic in y of the
// equal-h branch; returns all positive roots. Requires h_n = h_u.
std::vector<EinsteinSolution> solve_x_equals_one(const Quadruple& q, const SolveOptions& opts = {});

// Metrics with x = y and generic roots, certified against the unsquared
// system. Deduplicated, sorted by (branch, x lower bound).
std::vector<EinsteinSolution> solve_generic(const Quadruple& q, const SolveOptions& opts = {});

// Full solution set: x=1 branch plus generic branch, deduplicated and sorted.
std::vector<EinsteinSolution> solve_all(const Quadruple& q, const SolveOptions& opts = {});

// Fills the naturally-reductive classification on a certified solution.
EinsteinSolution classify(const Quadruple& q, EinsteinSolution sol);

// Collision of the extra root with a known metric: fbar(1) = 0 or fbar(beta) = 0.
struct FbarCollisions {
    bool at_one = false;
    bool at_beta = false;
};
FbarCollisions fbar_collisions(const Quadruple& q);

// Maps collisions to the named exceptional classes using the family id
// embedded in the provenance tag ("A4", "A5", "B3", ...).
ExceptionClass exception_detect(const Quadruple& q);

}  // namespace einq

#endif
