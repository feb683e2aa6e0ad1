#include "einq/solver.hpp"

#include <algorithm>

#include "einq/errors.hpp"
#include "einq/ricci.hpp"

namespace einq {

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::XEqualsOne: return "x=1";
        case Branch::XEqualsY: return "x=y";
        case Branch::Generic: return "generic";
    }
    return "?";
}

const char* exception_class_name(ExceptionClass e) {
    switch (e) {
        case ExceptionClass::NotExceptional: return "none";
        case ExceptionClass::A4Family: return "A4_FAMILY";
        case ExceptionClass::A5: return "A5";
        case ExceptionClass::B3K1: return "B3_K1";
    }
    return "?";
}

namespace {

Rational casimir_M(const Quadruple& q) { return q.c2 / 4 + q.casimir.h_n / 2; }

RationalPolynomial poly(std::vector<Rational> coeffs) {
    return RationalPolynomial(std::move(coeffs));
}

}  // namespace

RationalPolynomial delta_quadratic(const Quadruple& q) {
    const CasimirConstants& c = q.casimir;
    return poly({(c.k_u - c.h_u) / 2 + (q.c1 - q.c2) / 4, -(c.k_u / 2 + q.c1 / 4), casimir_M(q)});
}

DeltaLinear delta_linear(const Quadruple& q) {
    if (!q.equal_h_branch())
        throw branch_error("delta(x) is defined only on the h_n = h_u branch");
    const CasimirConstants& c = q.casimir;
    Rational M = casimir_M(q);
    Rational constant = (c.k_u - c.h_u) / 2 + (q.c1 - q.c2) / 4;
    DeltaLinear out;
    out.poly = poly({-constant, M});
    out.delta0 = constant / M;
    return out;
}

MFactorization m_factorization(const Quadruple& q) {
    if (!q.equal_h_branch())
        throw branch_error("the (x-1)(x-beta) factorization requires h_n = h_u");
    const CasimirConstants& c = q.casimir;
    MFactorization mf;
    mf.M = casimir_M(q);
    mf.alpha = Rational(1);
    mf.beta = (2 * c.k_p - 2 * c.h_p + 1 - q.c2) / (q.c2 + 2 * c.h_p);

    // Expanding M (x-1)(x-beta) must reproduce Delta(x) - (1-c1)/4 (x-1) exactly.
    RationalPolynomial lhs =
        delta_quadratic(q) - (1 - q.c1) / 4 * poly({Rational(-1), Rational(1)});
    RationalPolynomial rhs = mf.M * (RationalPolynomial::linear_root(mf.alpha) *
                                     RationalPolynomial::linear_root(mf.beta));
    if (!(lhs == rhs))
        throw internal_consistency_error(
            "quadratic factorization mismatch; structural constants are inconsistent (expected " +
            lhs.to_string() + ", got " + rhs.to_string() + ")");
    if (!(mf.beta > 1))
        throw internal_consistency_error("beta = " + format_rational(mf.beta) +
                                         " <= 1; not a standard-quadruple configuration");
    return mf;
}

RationalPolynomial eta_linear(const Quadruple& q) {
    const CasimirConstants& c = q.casimir;
    return poly({(c.k_p - c.h_p) / 2,
                 (Rational(1, 2) + c.l_p - c.k_p - q.c1 / 2) / 2});
}

RationalPolynomial fbar_cubic(const Quadruple& q) {
    MFactorization mf = m_factorization(q);
    const CasimirConstants& c = q.casimir;
    RationalPolynomial eta = eta_linear(q);
    auto [w1, w2] = omega(q);
    (void)w2;
    RationalPolynomial first = mf.M * (RationalPolynomial::linear_root(mf.beta) * eta * eta);
    Rational scale = (1 - q.c1) / 8 * (Rational(1, 2) + c.l_p);
    RationalPolynomial second =
        scale * (RationalPolynomial::x() * poly({c.k_p - c.h_p, w1}));
    return first + second;
}

RationalPolynomial einstein_sextic(const Quadruple& q) {
    const CasimirConstants& c = q.casimir;
    RationalPolynomial delta = delta_quadratic(q);
    RationalPolynomial x = RationalPolynomial::x();
    RationalPolynomial xm1 = RationalPolynomial::linear_root(Rational(1));
    Rational lp_half = Rational(1, 4) + c.l_p / 2;

    RationalPolynomial lhs =
        (1 - q.c1) / 4 * lp_half * lp_half * (x * x * xm1 * delta);
    RationalPolynomial a =
        poly({(c.k_p - c.h_p) / 2 + (1 - q.c1) / 4, (c.l_p - c.k_p) / 2});
    RationalPolynomial b = poly({(q.c1 - q.c2) / 4, Rational(0), casimir_M(q)});
    RationalPolynomial inner = a * delta + (1 - q.c1) / 4 * (xm1 * b);
    return lhs - inner * inner;
}

bool sextic_identity_holds(const Quadruple& q) {
    if (!q.equal_h_branch() || !q.uniform_fiber_constants()) return false;
    MFactorization mf = m_factorization(q);
    RationalPolynomial xm1 = RationalPolynomial::linear_root(Rational(1));
    RationalPolynomial expected =
        Rational(-1) * mf.M * (xm1 * xm1 * RationalPolynomial::linear_root(mf.beta) * fbar_cubic(q));
    return einstein_sextic(q) == expected;
}

namespace {

struct CertifyBudget {
    long remaining;
    void spend(long n) {
        remaining -= n;
        if (remaining < 0)
            throw refinement_budget_error("bisection budget exhausted before tolerance reached");
    }
};

// Builds an exact solution record and verifies the residuals vanish exactly.
// Returns nothing when (x, y) fails the unsquared system.
std::optional<EinsteinSolution> exact_solution(const Quadruple& q, const Rational& x,
                                               const Rational& y, Branch branch) {
    RicciCoefficients r = ricci_coeffs(q, x, y);
    Rational lambda = r.r_n;
    auto [p1, p2, p3] = einstein_residuals(q, x, y, lambda);
    if (p1 != 0 || p2 != 0 || p3 != 0) return std::nullopt;
    EinsteinSolution sol;
    sol.x = CertifiedValue::from_exact(x);
    sol.y = CertifiedValue::from_exact(y);
    sol.lambda = CertifiedValue::from_exact(lambda);
    sol.branch = branch;
    sol.residual_bound = Rational(0);
    return sol;
}

Rational interval_residual_bound(const RationalInterval& a, const RationalInterval& b,
                                 const RationalInterval& c) {
    return std::max(a.mag(), std::max(b.mag(), c.mag()));
}

bool interval_excludes_zero(const RationalInterval& v) { return v.lo > 0 || v.hi < 0; }

// Exact candidate (z rational, y^2 given): the third Einstein equation is
// linear in y once y^2 is known, so y itself must be rational at a genuine
// solution; reconstruct it and re-verify the whole system exactly.
std::optional<EinsteinSolution> exact_candidate(const Quadruple& q, const Rational& z,
                                                const Rational& y2) {
    if (z <= 0 || y2 <= 0) return std::nullopt;
    const CasimirConstants& c = q.casimir;
    Rational lambda =
        q.c2 / 4 + c.h_n / 2 + (q.c1 - q.c2) / (4 * z * z) + (1 - q.c1) / (4 * y2);
    Rational cp = (c.k_p - c.h_p) / 2 + z * (c.l_p - c.k_p) / 2;
    Rational y = (lambda * y2 + cp) / (Rational(1, 4) + c.l_p / 2);
    if (y <= 0 || y * y != y2) return std::nullopt;  // squaring artifact
    return exact_solution(q, z, y, Branch::Generic);
}

// Certify one isolated root of `owner` as an Einstein solution, with
// y^2 = x^2 * radicand_num(x)/radicand_den(x). Shrinks the enclosure until
// either all residuals are certified below tolerance or one of them is
// certified nonzero (squaring artifact / inadmissible radicand).
std::optional<EinsteinSolution> certify_interval_root(
    const Quadruple& q, const RationalPolynomial& owner, IsolatingInterval iso,
    const RationalPolynomial& radicand_num, const RationalPolynomial& radicand_den,
    const SolveOptions& opts, CertifyBudget& budget) {
    Rational width = iso.hi - iso.lo;
    for (;;) {
        if (iso.exact_root) {
            const Rational& z = *iso.exact_root;
            Rational dz = radicand_den(z);
            if (dz == 0) return std::nullopt;
            return exact_candidate(q, z, z * z * radicand_num(z) / dz);
        }
        RationalInterval X{iso.lo, iso.hi};
        if (X.strictly_positive()) {
            RationalInterval den = radicand_den(X);
            if (den.lo > 0 || den.hi < 0) {
                RationalInterval rad = radicand_num(X) / den;
                if (rad.hi <= 0) return std::nullopt;  // no admissible y at this root
                if (rad.lo > 0) {
                    RationalInterval y2 = square(X) * rad;
                    Rational tol16 = opts.tol / 16;
                    Rational sqrt_width = std::min(width, tol16);
                    if (sqrt_width <= 0) sqrt_width = tol16;
                    RationalInterval Y = sqrt_enclosure(y2, sqrt_width);
                    RicciEnclosure r = ricci_coeffs(q, X, Y);
                    RationalInterval lambda = r.r_n;
                    auto [p1, p2, p3] = einstein_residuals(q, X, Y, lambda);
                    if (interval_excludes_zero(p2) || interval_excludes_zero(p3))
                        return std::nullopt;  // certified spurious (squaring artifact)
                    Rational bound = interval_residual_bound(p1, p2, p3);
                    if (bound < opts.tol) {
                        EinsteinSolution sol;
                        sol.x = CertifiedValue{std::nullopt, X};
                        sol.y = CertifiedValue{std::nullopt, Y};
                        sol.lambda = CertifiedValue{std::nullopt, lambda};
                        sol.branch = Branch::Generic;
                        sol.residual_bound = bound;
                        return sol;
                    }
                }
            }
        }
        width = width / 16;
        budget.spend(4);
        iso = refine(owner, iso, width);
    }
}

void append_if(std::vector<EinsteinSolution>& out, std::optional<EinsteinSolution> sol) {
    if (sol) out.push_back(std::move(*sol));
}

bool values_coincide(const CertifiedValue& a, const CertifiedValue& b) {
    if (a.exact && b.exact) return *a.exact == *b.exact;
    return overlap(a.enclosure, b.enclosure);
}

int branch_rank(Branch b) { return static_cast<int>(b); }

}  // namespace

std::vector<EinsteinSolution> solve_x_equals_one(const Quadruple& q, const SolveOptions& opts) {
    if (!q.equal_h_branch())
        throw branch_error("x = 1 metrics exist only on the h_n = h_u branch");
    const CasimirConstants& c = q.casimir;
    // (c1/4 + h_n/2) y^2 - (1/4 + l_p/2) y + (1/2)(1/2 + l_p - c1/2 - h_p) = 0
    RationalPolynomial quad = poly({(Rational(1, 2) + c.l_p - q.c1 / 2 - c.h_p) / 2,
                                    -(Rational(1, 4) + c.l_p / 2), q.c1 / 4 + c.h_n / 2});
    std::vector<EinsteinSolution> out;
    CertifyBudget budget{opts.max_iter};
    for (const auto& iso : sturm_isolate(quad, RootDomain::positive())) {
        if (iso.exact_root) {
            auto sol = exact_solution(q, Rational(1), *iso.exact_root, Branch::XEqualsOne);
            append_if(out, std::move(sol));
        } else {
            // Irrational y: certify by narrowing the quadratic root enclosure.
            IsolatingInterval r = iso;
            Rational width = r.hi - r.lo;
            for (;;) {
                RationalInterval Y{r.lo, r.hi};
                if (Y.strictly_positive()) {
                    RationalInterval X{Rational(1), Rational(1)};
                    RicciEnclosure rc = ricci_coeffs(q, X, Y);
                    auto [p1, p2, p3] = einstein_residuals(q, X, Y, rc.r_n);
                    Rational bound = interval_residual_bound(p1, p2, p3);
                    if (bound < opts.tol) {
                        EinsteinSolution sol;
                        sol.x = CertifiedValue::from_exact(Rational(1));
                        sol.y = CertifiedValue{std::nullopt, Y};
                        sol.lambda = CertifiedValue{std::nullopt, rc.r_n};
                        sol.branch = Branch::XEqualsOne;
                        sol.residual_bound = bound;
                        out.push_back(std::move(sol));
                        break;
                    }
                }
                width = width / 16;
                budget.spend(4);
                r = refine(quad, r, width);
                if (r.exact_root) {
                    append_if(out, exact_solution(q, Rational(1), *r.exact_root, Branch::XEqualsOne));
                    break;
                }
            }
        }
    }
    for (auto& sol : out) sol = classify(q, std::move(sol));
    std::sort(out.begin(), out.end(), [](const EinsteinSolution& a, const EinsteinSolution& b) {
        return a.y.lower() < b.y.lower();
    });
    return out;
}

std::vector<EinsteinSolution> solve_generic(const Quadruple& q, const SolveOptions& opts) {
    std::vector<EinsteinSolution> out;
    CertifyBudget budget{opts.max_iter};

    if (q.equal_h_branch() && q.uniform_fiber_constants()) {
        MFactorization mf = m_factorization(q);
        // The two x = y metrics (fibration over the middle subgroup).
        append_if(out, exact_solution(q, mf.alpha, mf.alpha, Branch::XEqualsY));
        append_if(out, exact_solution(q, mf.beta, mf.beta, Branch::XEqualsY));

        RationalPolynomial fbar = fbar_cubic(q);
        DeltaLinear dl = delta_linear(q);
        // Roots colliding with the known metrics carry no new solution.
        RationalPolynomial work = fbar;
        for (const Rational& known : {Rational(1), mf.beta}) {
            while (!work.is_zero() && work.degree() > 0 && work(known) == 0) {
                RationalPolynomial quot, rem;
                RationalPolynomial::divmod(work, RationalPolynomial::linear_root(known), quot, rem);
                work = quot;
            }
        }
        if (work.degree() >= 1) {
            RationalPolynomial rad_num = RationalPolynomial::constant((1 - q.c1) / 4);
            RationalPolynomial rad_den = dl.poly;  // y^2 = x^2 (1-c1) / (4 delta(x))
            for (const auto& iso : sturm_isolate(work, RootDomain::positive())) {
                if (iso.exact_root) {
                    const Rational& z = *iso.exact_root;
                    if (z == 1 || z == mf.beta) continue;
                    Rational dz = dl.poly(z);
                    if (dz <= 0) continue;
                    append_if(out, exact_candidate(q, z, z * z * (1 - q.c1) / (4 * dz)));
                } else {
                    append_if(out,
                              certify_interval_root(q, work, iso, rad_num, rad_den, opts, budget));
                }
            }
        }
    } else {
        // Unequal h_n/h_u (or non-uniform fiber constants): work on the full
        // degree-six equation and filter squaring artifacts by certification.
        RationalPolynomial sextic = einstein_sextic(q);
        RationalPolynomial q2 =
            delta_quadratic(q) - (1 - q.c1) / 4 * poly({Rational(-1), Rational(1)});

        // x = y candidates are the positive roots of the factored quadratic.
        for (const auto& iso : sturm_isolate(q2, RootDomain::positive())) {
            if (iso.exact_root) {
                append_if(out, exact_solution(q, *iso.exact_root, *iso.exact_root, Branch::XEqualsY));
            } else {
                IsolatingInterval r = iso;
                Rational width = r.hi - r.lo;
                for (;;) {
                    RationalInterval T{r.lo, r.hi};
                    if (T.strictly_positive()) {
                        RicciEnclosure rc = ricci_coeffs(q, T, T);
                        auto [p1, p2, p3] = einstein_residuals(q, T, T, rc.r_n);
                        if (interval_excludes_zero(p2) || interval_excludes_zero(p3)) break;
                        Rational bound = interval_residual_bound(p1, p2, p3);
                        if (bound < opts.tol) {
                            EinsteinSolution sol;
                            sol.x = CertifiedValue{std::nullopt, T};
                            sol.y = CertifiedValue{std::nullopt, T};
                            sol.lambda = CertifiedValue{std::nullopt, rc.r_n};
                            sol.branch = Branch::XEqualsY;
                            sol.residual_bound = bound;
                            out.push_back(std::move(sol));
                            break;
                        }
                    }
                    width = width / 16;
                    budget.spend(4);
                    r = refine(q2, r, width);
                    if (r.exact_root) {
                        append_if(out, exact_solution(q, *r.exact_root, *r.exact_root,
                                                      Branch::XEqualsY));
                        break;
                    }
                }
            }
        }

        RationalPolynomial work = sextic;
        {
            // When the quadratic divides exactly, strip it: its roots are the
            // x = y metrics already emitted above.
            RationalPolynomial quot, rem;
            RationalPolynomial::divmod(work, q2, quot, rem);
            if (rem.is_zero()) work = quot;
        }
        if (!work.is_zero() && work.degree() >= 1) {
            RationalPolynomial rad_num =
                (1 - q.c1) / 4 * RationalPolynomial::linear_root(Rational(1));
            RationalPolynomial rad_den = delta_quadratic(q);  // y^2 = x^2 (1-c1)(x-1)/(4 Delta)
            for (const auto& iso : sturm_isolate(work, RootDomain::positive())) {
                if (iso.exact_root) {
                    const Rational& z = *iso.exact_root;
                    if (z == 1) continue;
                    Rational dz = rad_den(z);
                    if (dz == 0) continue;
                    append_if(out,
                              exact_candidate(q, z, z * z * (1 - q.c1) * (z - 1) / (4 * dz)));
                } else {
                    append_if(out,
                              certify_interval_root(q, work, iso, rad_num, rad_den, opts, budget));
                }
            }
        }
    }

    for (auto& sol : out) sol = classify(q, std::move(sol));
    std::sort(out.begin(), out.end(), [](const EinsteinSolution& a, const EinsteinSolution& b) {
        if (a.branch != b.branch) return branch_rank(a.branch) < branch_rank(b.branch);
        if (a.x.lower() != b.x.lower()) return a.x.lower() < b.x.lower();
        return a.y.lower() < b.y.lower();
    });
    return out;
}

std::vector<EinsteinSolution> solve_all(const Quadruple& q, const SolveOptions& opts) {
    std::vector<EinsteinSolution> out;
    if (q.equal_h_branch()) out = solve_x_equals_one(q, opts);
    std::vector<EinsteinSolution> gen = solve_generic(q, opts);

    for (auto& sol : gen) {
        bool merged = false;
        for (auto& have : out) {
            if (values_coincide(have.x, sol.x) && values_coincide(have.y, sol.y)) {
                // Same metric reached along two branches; keep one record.
                for (const auto& reason : sol.reasons)
                    if (std::find(have.reasons.begin(), have.reasons.end(), reason) ==
                        have.reasons.end())
                        have.reasons.push_back(reason);
                have.naturally_reductive = have.naturally_reductive || sol.naturally_reductive;
                if (branch_rank(sol.branch) < branch_rank(have.branch)) have.branch = sol.branch;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(std::move(sol));
    }
    for (auto& sol : out) {
        std::sort(sol.reasons.begin(), sol.reasons.end());
    }
    std::sort(out.begin(), out.end(), [](const EinsteinSolution& a, const EinsteinSolution& b) {
        if (a.branch != b.branch) return branch_rank(a.branch) < branch_rank(b.branch);
        if (a.x.lower() != b.x.lower()) return a.x.lower() < b.x.lower();
        return a.y.lower() < b.y.lower();
    });
    return out;
}

EinsteinSolution classify(const Quadruple& q, EinsteinSolution sol) {
    sol.reasons.clear();
    if (sol.x.exact && *sol.x.exact == 1) sol.reasons.push_back("x=1");
    bool xy = sol.branch == Branch::XEqualsY;
    if (sol.x.exact && sol.y.exact && *sol.x.exact == *sol.y.exact) xy = true;
    if (xy) sol.reasons.push_back("x=y");
    if (q.flags.k_ideal_in_l) sol.reasons.push_back("k-ideal-in-l");
    sol.naturally_reductive = !sol.reasons.empty();
    return sol;
}

FbarCollisions fbar_collisions(const Quadruple& q) {
    RationalPolynomial fbar = fbar_cubic(q);
    MFactorization mf = m_factorization(q);
    FbarCollisions fc;
    fc.at_one = fbar(Rational(1)) == 0;
    fc.at_beta = fbar(mf.beta) == 0;
    return fc;
}

ExceptionClass exception_detect(const Quadruple& q) {
    if (!q.equal_h_branch()) return ExceptionClass::NotExceptional;
    FbarCollisions fc = fbar_collisions(q);
    if (!fc.at_one && !fc.at_beta) return ExceptionClass::NotExceptional;
    if (fc.at_one) return ExceptionClass::A4Family;
    // Root collides with the x = y metric: trivial-H rows are the sp-chain
    // case, the remaining one is the e6 row.
    return q.flags.h_trivial ? ExceptionClass::B3K1 : ExceptionClass::A5;
}

}  // namespace einq
