#include <doctest.h>

#include <cmath>

#include "einq/errors.hpp"
#include "einq/families.hpp"
#include "einq/products.hpp"
#include "einq/ricci.hpp"
#include "einq/solver.hpp"

using namespace einq;

namespace {

FamilyParams params3(int n1, int n2, int n3, int k) {
    FamilyParams p;
    p.n1 = n1;
    p.n2 = n2;
    p.n3 = n3;
    p.k = k;
    return p;
}

FamilyParams params2(int n1, int n2, int k) {
    FamilyParams p;
    p.n1 = n1;
    p.n2 = n2;
    p.k = k;
    return p;
}

// A basic quadruple off the classified tables, for branch tests.
Quadruple synthetic(Rational c1, Rational c2, Rational l_p, Rational k_p, Rational h_p,
                    Rational h_u, Rational h_n, bool k_ideal = false) {
    CasimirConstants cc;
    cc.l_p = l_p;
    cc.k_p = cc.k_u = k_p;
    cc.h_p = h_p;
    cc.h_u = h_u;
    cc.h_n = h_n;
    QuadrupleFlags flags;
    flags.h_trivial = false;
    flags.g_simple = false;
    flags.k_ideal_in_l = k_ideal;
    return Quadruple::make({40, 20, 10, 4}, c1, c2, cc, flags, "synthetic");
}

int count_generic(const std::vector<EinsteinSolution>& sols) {
    int n = 0;
    for (const auto& s : sols)
        if (s.branch == Branch::Generic) ++n;
    return n;
}

// Brute-force completeness oracle in doubles: walk the constraint curve
// y(x) = x sqrt((1-c1)/(4 delta(x))) at step 1e-3 and count sign changes of
// the remaining Einstein equation, skipping small windows around the known
// x = 1 and x = beta points and the delta singularity. The walk covers
// (0, max(6, beta + 1)] so the root window is inside it for every row.
int grid_count_generic(const Quadruple& q) {
    auto d = [](const Rational& r) { return r.get_d(); };
    const double c1 = d(q.c1), c2 = d(q.c2);
    const double lp = d(q.casimir.l_p), kp = d(q.casimir.k_p), hp = d(q.casimir.h_p);
    const double hn = d(q.casimir.h_n), hu = d(q.casimir.h_u), ku = d(q.casimir.k_u);
    (void)hu;
    (void)ku;
    const double M = c2 / 4 + hn / 2;
    const double beta = d(m_factorization(q).beta);

    int crossings = 0;
    double prev = 0.0;
    bool have_prev = false;
    const int steps = static_cast<int>(std::max(6.0, beta + 1.0) * 1000);
    for (int i = 1; i <= steps; ++i) {
        double x = i * 1e-3;
        double delta = M * x - (d(q.casimir.k_u) - d(q.casimir.h_u)) / 2 - (c1 - c2) / 4;
        if (delta <= 1e-12 || std::fabs(x - 1.0) < 2e-3 || std::fabs(x - beta) < 2e-3) {
            have_prev = false;
            continue;
        }
        double y = x * std::sqrt((1 - c1) / (4 * delta));
        double lambda = c2 / 4 + hn / 2 + (c1 - c2) / (4 * x * x) + (1 - c1) / (4 * y * y);
        double g = (0.25 + lp / 2) * y - lambda * y * y - (kp - hp) / 2 - x * (lp - kp) / 2;
        if (have_prev && prev * g < 0) ++crossings;
        prev = g;
        have_prev = true;
    }
    return crossings;
}

}  // namespace

TEST_CASE("delta quadratic") {
    Quadruple a5 = instantiate(FamilyId::A5);
    RationalPolynomial d = delta_quadratic(a5);
    CHECK(d == RationalPolynomial({rat(1, 6), rat(-1, 3), rat(1, 6)}));
    // (x-1)^2 / 6
    CHECK(d(rat(1)) == 0);
    CHECK(d(rat(3)) == rat(4, 6));

    Quadruple b4 = instantiate(FamilyId::B4);
    RationalPolynomial db4 = delta_quadratic(b4);
    CHECK(db4.coefficient(2) == rat(1, 6));
    CHECK(db4.coefficient(1) == -(rat(1, 6) + rat(5, 24)));
    CHECK(db4.coefficient(0) == rat(1, 6) + rat(1, 24));
    CHECK(db4(rat(1)) == 0);  // equal-h branch factors through (x-1)
}

TEST_CASE("delta linear and its root") {
    Quadruple a5 = instantiate(FamilyId::A5);
    DeltaLinear dl = delta_linear(a5);
    CHECK(dl.poly == RationalPolynomial({rat(-1, 6), rat(1, 6)}));
    CHECK(dl.delta0 == 1);
    // Delta = (x-1) delta on this branch
    RationalPolynomial product = RationalPolynomial::linear_root(rat(1)) * dl.poly;
    CHECK(product == delta_quadratic(a5));

    CHECK(delta_linear(instantiate(FamilyId::B5)).delta0 == rat(4, 3));
    // delta0 >= 1 tracks the sign of omega2
    for (FamilyId id : {FamilyId::A5, FamilyId::A6, FamilyId::B4, FamilyId::B5, FamilyId::B17}) {
        Quadruple q = instantiate(id);
        auto [w1, w2] = omega(q);
        (void)w1;
        CHECK((delta_linear(q).delta0 >= 1) == (w2 >= 0));
    }

    Quadruple unequal = synthetic(rat(1, 2), rat(1, 4), rat(1, 2), rat(1, 4), rat(1, 8),
                                  rat(1, 8), rat(1, 16));
    CHECK_THROWS_AS(delta_linear(unequal), branch_error);
}

TEST_CASE("quadratic factorization through (x-1)(x-beta)") {
    CHECK(m_factorization(instantiate(FamilyId::A5)).beta == rat(3, 2));
    CHECK(m_factorization(instantiate(FamilyId::A6)).beta == rat(4, 3));
    CHECK(m_factorization(instantiate(FamilyId::B5)).beta == rat(5, 3));
    MFactorization mf = m_factorization(instantiate(FamilyId::A6));
    CHECK(mf.alpha == 1);
    CHECK(mf.M == rat(1, 6));

    // beta > 1 for every fixed row
    for (FamilyId id : {FamilyId::A7, FamilyId::A8, FamilyId::A9, FamilyId::A10, FamilyId::A11,
                        FamilyId::B4, FamilyId::B6, FamilyId::B7, FamilyId::B13, FamilyId::B18})
        CHECK(m_factorization(instantiate(id)).beta > 1);

    // corrupt constants break the expansion check
    Quadruple bad = synthetic(rat(1, 2), rat(1, 4), rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 16),
                              rat(1, 16));
    CHECK_THROWS_AS(m_factorization(bad), internal_consistency_error);
}

TEST_CASE("eta linear") {
    Quadruple b4 = instantiate(FamilyId::B4);
    CHECK(eta_linear(b4) == RationalPolynomial({rat(1, 6), rat(1, 8)}));
    CHECK(eta_linear(instantiate(FamilyId::A6))(rat(1)) == rat(5, 18));
    // h-trivial with k_p = 0 never occurs in the tables; the constant term of
    // eta vanishes exactly when k_p = h_p
    Quadruple even = synthetic(rat(1, 2), rat(1, 4), rat(1, 2), rat(1, 8), rat(1, 8), rat(1, 8),
                               rat(1, 8));
    CHECK(eta_linear(even)(rat(0)) == 0);
}

TEST_CASE("fbar cubic fixtures") {
    Quadruple a6 = instantiate(FamilyId::A6);
    RationalPolynomial fbar = fbar_cubic(a6);
    CHECK(fbar ==
          RationalPolynomial({rat(-1, 1458), rat(7, 5832), rat(-29, 2916), rat(2, 243)}));
    CHECK(fbar(m_factorization(a6).beta) == rat(2, 729));
    CHECK(fbar(rat(1)) == rat(-7, 5832));

    CHECK(fbar_cubic(instantiate(FamilyId::A5))(rat(3, 2)) == 0);
    CHECK(fbar_cubic(instantiate(FamilyId::B4))(rat(3, 2)) == rat(-1, 768));
    CHECK(fbar_cubic(instantiate(FamilyId::B5))(rat(5, 3)) == rat(-5, 1458));

    // the cubic has exactly one positive root, inside (1, 4/3)
    auto roots = sturm_isolate(fbar, RootDomain::positive());
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].lo >= 1);
    CHECK(roots[0].hi <= rat(4, 3));

    // fbar(0) = -(M beta / 4)(k_p - h_p)^2 < 0 whenever k_p != h_p
    for (FamilyId id : {FamilyId::A5, FamilyId::A6, FamilyId::B4, FamilyId::B5, FamilyId::B17}) {
        Quadruple q = instantiate(id);
        MFactorization mf = m_factorization(q);
        Rational expected =
            -(mf.M * mf.beta / 4) * (q.casimir.k_p - q.casimir.h_p) * (q.casimir.k_p - q.casimir.h_p);
        CHECK(fbar_cubic(q)(rat(0)) == expected);
        CHECK(fbar_cubic(q)(rat(0)) < 0);
    }
}

TEST_CASE("degree-six identity and the sign lemma over small parameters") {
    auto check_instance = [](FamilyId id, const FamilyParams& p) {
        Quadruple q = instantiate(id, p);
        CHECK(sextic_identity_holds(q));
        auto [w1, w2] = omega(q);
        RationalPolynomial fbar = fbar_cubic(q);
        MFactorization mf = m_factorization(q);
        if (w1 >= 0 && w2 >= 0 && fbar(rat(1)) != 0 && fbar(mf.beta) != 0) {
            // unique positive root strictly between 1 and beta
            CHECK(fbar(rat(1)) < 0);
            CHECK(fbar(mf.beta) > 0);
            CHECK(sturm_isolate(fbar, RootDomain::positive()).size() == 1);
        }
    };
    for (int n1 = 2; n1 <= 4; ++n1)
        for (int n2 = 2; n2 <= 4; ++n2)
            for (int n3 = 2; n3 <= 4; ++n3)
                for (int k = 1; k <= 3; ++k) {
                    check_instance(FamilyId::A1, params3(n1, n2, n3, k));
                    if (k >= 2) check_instance(FamilyId::A2, params3(n1, n2, n3, k));
                    check_instance(FamilyId::A4, params3(n1, n2, n3, k));
                }
    for (int n1 = 2; n1 <= 6; ++n1)
        for (int n2 = 2; n2 <= 6; ++n2)
            for (int k = 1; k <= 6; ++k) {
                if (k >= 3) check_instance(FamilyId::B1, params2(n1, n2, k));
                check_instance(FamilyId::B3, params2(n1, n2, k));
            }
    for (FamilyId id : {FamilyId::A5, FamilyId::A6, FamilyId::A7, FamilyId::A8, FamilyId::A9,
                        FamilyId::A10, FamilyId::A11, FamilyId::B4, FamilyId::B5, FamilyId::B6,
                        FamilyId::B7, FamilyId::B8, FamilyId::B9, FamilyId::B10, FamilyId::B11,
                        FamilyId::B12, FamilyId::B13, FamilyId::B14, FamilyId::B15, FamilyId::B16,
                        FamilyId::B17, FamilyId::B18})
        check_instance(id, {});
}

TEST_CASE("x=1 branch: standard root plus the second fibration metric") {
    SUBCASE("B4: roots 1 and 7/5") {
        auto sols = solve_x_equals_one(instantiate(FamilyId::B4));
        REQUIRE(sols.size() == 2);
        CHECK(*sols[0].y.exact == 1);
        CHECK(*sols[1].y.exact == rat(7, 5));
        for (const auto& s : sols) {
            CHECK(*s.x.exact == 1);
            CHECK(s.residual_bound == 0);
            CHECK(s.naturally_reductive);
        }
    }
    SUBCASE("A6: roots 1 and 5/4") {
        auto sols = solve_x_equals_one(instantiate(FamilyId::A6));
        REQUIRE(sols.size() == 2);
        CHECK(*sols[1].y.exact == rat(5, 4));
    }
    SUBCASE("y = 1 is a root for every fixed row") {
        for (FamilyId id : {FamilyId::A5, FamilyId::A7, FamilyId::A9, FamilyId::B5, FamilyId::B13,
                            FamilyId::B18}) {
            auto sols = solve_x_equals_one(instantiate(id));
            bool has_unit = false;
            for (const auto& s : sols)
                if (s.y.exact && *s.y.exact == 1) has_unit = true;
            CHECK(has_unit);
        }
    }
    SUBCASE("negative discriminant yields no roots") {
        Quadruple q = synthetic(rat(9, 10), rat(1, 2), rat(1, 2), rat(1, 3), rat(0), rat(1, 10),
                                rat(1, 10));
        CHECK(solve_x_equals_one(q).empty());
    }
    SUBCASE("irrational quadratic roots are certified as enclosures") {
        // h_p != h_n removes the unit root; the discriminant 3/32 is not a square
        Quadruple q = synthetic(rat(1, 2), rat(1, 4), rat(1, 2), rat(1, 4), rat(1, 8), rat(0),
                                rat(0));
        auto sols = solve_x_equals_one(q);
        REQUIRE(sols.size() == 2);
        for (const auto& s : sols) {
            CHECK_FALSE(s.y.exact.has_value());
            CHECK(s.y.enclosure.lo > 0);
            CHECK(s.residual_bound < rat(1, 1000000000000L));
        }
    }
    SUBCASE("branch precondition") {
        Quadruple q = synthetic(rat(1, 2), rat(1, 4), rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 8),
                                rat(1, 16));
        CHECK_THROWS_AS(solve_x_equals_one(q), branch_error);
    }
}

TEST_CASE("generic branch on the tabulated rows") {
    SolveOptions opts;
    SUBCASE("A6: exactly one new metric, inside (1, 4/3)") {
        Quadruple q = instantiate(FamilyId::A6);
        auto sols = solve_generic(q, opts);
        REQUIRE(count_generic(sols) == 1);
        const EinsteinSolution* gen = nullptr;
        for (const auto& s : sols)
            if (s.branch == Branch::Generic) gen = &s;
        CHECK(gen->x.enclosure.lo > 1);
        CHECK(gen->x.enclosure.hi < rat(4, 3));
        CHECK_FALSE(gen->naturally_reductive);
        CHECK(gen->residual_bound < rat(1, 1000000000000L));
        // y stays away from x: the enclosures are disjoint
        CHECK(gen->y.enclosure.lo > gen->x.enclosure.hi);
    }
    SUBCASE("A5: the root collides with the x=y metric, no new solution") {
        auto sols = solve_generic(instantiate(FamilyId::A5), opts);
        CHECK(count_generic(sols) == 0);
        REQUIRE(sols.size() == 2);  // (1,1) and (3/2,3/2)
        CHECK(*sols[0].x.exact == 1);
        CHECK(*sols[1].x.exact == rat(3, 2));
        CHECK(*sols[1].lambda.exact == rat(2, 9));
    }
    SUBCASE("B3(2,2,2): new non-naturally-reductive metric exists") {
        auto sols = solve_generic(instantiate(FamilyId::B3, params2(2, 2, 2)), opts);
        CHECK(count_generic(sols) == 1);
    }
    SUBCASE("B3(2,2,1): collision at beta, no new metric") {
        auto sols = solve_generic(instantiate(FamilyId::B3, params2(2, 2, 1)), opts);
        CHECK(count_generic(sols) == 0);
    }
    SUBCASE("B4 root beyond beta") {
        auto sols = solve_generic(instantiate(FamilyId::B4), opts);
        REQUIRE(count_generic(sols) == 1);
        for (const auto& s : sols)
            if (s.branch == Branch::Generic) CHECK(s.x.enclosure.lo > rat(3, 2));
    }
    SUBCASE("B5 root beyond beta") {
        auto sols = solve_generic(instantiate(FamilyId::B5), opts);
        REQUIRE(count_generic(sols) == 1);
        for (const auto& s : sols)
            if (s.branch == Branch::Generic) CHECK(s.x.enclosure.lo > rat(5, 3));
    }
    SUBCASE("sub-unit root of the sp chain at n1 = 6") {
        auto sols = solve_generic(instantiate(FamilyId::A4, params3(6, 2, 2, 1)), opts);
        REQUIRE(count_generic(sols) == 1);
        for (const auto& s : sols)
            if (s.branch == Branch::Generic) {
                CHECK(s.x.enclosure.hi < 1);
                CHECK(s.x.enclosure.lo > rat(2, 3));  // above the radicand pole
            }
    }
}

TEST_CASE("generic count agrees with the brute-force curve walk") {
    SolveOptions opts;
    struct Probe {
        FamilyId id;
        FamilyParams params;
    };
    const Probe probes[] = {
        {FamilyId::A5, {}},
        {FamilyId::A6, {}},
        {FamilyId::B4, {}},
        {FamilyId::B5, {}},
        {FamilyId::B3, params2(2, 2, 1)},
        {FamilyId::B3, params2(2, 2, 2)},
        {FamilyId::A4, params3(2, 2, 2, 1)},
        {FamilyId::B1, params2(2, 2, 3)},
        {FamilyId::B17, {}},
    };
    for (const auto& probe : probes) {
        Quadruple q = instantiate(probe.id, probe.params);
        CAPTURE(q.provenance);
        CHECK(count_generic(solve_generic(q, opts)) == grid_count_generic(q));
    }
}

TEST_CASE("products: pair and triple quadruples have new metrics inside (1, beta)") {
    SolveOptions opts;
    AlgebraDescriptor su2 = AlgebraDescriptor::parse("su2");
    for (auto [p, qf] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
        Quadruple q = pair_quadruple(su2, p, qf);
        auto sols = solve_generic(q, opts);
        REQUIRE(count_generic(sols) >= 1);
        MFactorization mf = m_factorization(q);
        for (const auto& s : sols)
            if (s.branch == Branch::Generic) {
                CHECK(s.x.enclosure.lo > 1);
                CHECK(s.x.enclosure.hi < mf.beta);
                CHECK_FALSE(s.naturally_reductive);
            }
    }
    Quadruple triple = product_quadruple(su2, 2, 2, 2).quadruple;
    CHECK(count_generic(solve_generic(triple, opts)) >= 1);
}

TEST_CASE("unequal h branch: signs and certified solving") {
    // h_n < h_u: f(0) > 0, f(1) < 0, f(+inf) = +inf force two crossings.
    Quadruple q = synthetic(rat(1, 2), rat(1, 4), rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 8),
                            rat(1, 16));
    RationalPolynomial sextic = einstein_sextic(q);
    RationalPolynomial q2 =
        delta_quadratic(q) - (1 - q.c1) / 4 * RationalPolynomial({rat(-1), rat(1)});
    // f = -sextic / (M (x-alpha)(x-beta)); check its boundary signs instead of
    // dividing: Delta(1) = (h_n - h_u)/2 < 0 splits alpha < 1 < beta.
    CHECK(delta_quadratic(q)(rat(1)) == (q.casimir.h_n - q.casimir.h_u) / 2);
    CHECK(delta_quadratic(q)(rat(1)) < 0);
    RationalPolynomial f, rem;
    RationalPolynomial::divmod(Rational(-1) * sextic, q2, f, rem);
    REQUIRE(rem.is_zero());
    CHECK(f(rat(0)) > 0);
    CHECK(f(rat(1)) < 0);
    CHECK(f.leading_coefficient() > 0);  // +inf limit

    // certified solving returns only residual-verified metrics
    auto sols = solve_all(q, SolveOptions{});
    CHECK(!sols.empty());
    for (const auto& s : sols) {
        CHECK(s.residual_bound < rat(1, 1000000000000L));
        if (s.x.exact && s.y.exact) {
            auto [p1, p2, p3] = einstein_residuals(q, *s.x.exact, *s.y.exact, *s.lambda.exact);
            CHECK(p1 == 0);
            CHECK(p2 == 0);
            CHECK(p3 == 0);
        }
    }
    // no x = 1 metric can exist on this branch
    CHECK_THROWS_AS(solve_x_equals_one(q), branch_error);
}

TEST_CASE("classification reasons") {
    Quadruple a6 = instantiate(FamilyId::A6);
    auto sols = solve_all(a6, SolveOptions{});
    REQUIRE(sols.size() == 4);
    CHECK(sols[0].reasons == std::vector<std::string>{"x=1", "x=y"});
    CHECK(sols[1].reasons == std::vector<std::string>{"x=1"});
    CHECK(sols[2].reasons == std::vector<std::string>{"x=y"});
    CHECK(sols[3].reasons.empty());
    CHECK_FALSE(sols[3].naturally_reductive);

    // middle-term-ideal flag marks everything naturally reductive
    Quadruple flagged = synthetic(rat(1, 2), rat(1, 4), rat(1, 2), rat(1, 4), rat(1, 8),
                                  rat(1, 8), rat(1, 8), true);
    for (const auto& s : solve_all(flagged, SolveOptions{})) {
        CHECK(s.naturally_reductive);
        bool has_flag = false;
        for (const auto& r : s.reasons) has_flag = has_flag || r == "k-ideal-in-l";
        CHECK(has_flag);
    }
}

TEST_CASE("exception detection") {
    CHECK(exception_detect(instantiate(FamilyId::A5)) == ExceptionClass::A5);
    CHECK(exception_detect(instantiate(FamilyId::B3, params2(2, 2, 1))) == ExceptionClass::B3K1);
    CHECK(exception_detect(instantiate(FamilyId::A4, params3(10, 2, 2, 2))) ==
          ExceptionClass::A4Family);
    CHECK(exception_detect(instantiate(FamilyId::A4, params3(2, 2, 2, 1))) ==
          ExceptionClass::NotExceptional);
    CHECK(exception_detect(instantiate(FamilyId::A6)) == ExceptionClass::NotExceptional);
    FbarCollisions fc = fbar_collisions(instantiate(FamilyId::A4, params3(10, 2, 2, 2)));
    CHECK(fc.at_one);
    CHECK_FALSE(fc.at_beta);
}

TEST_CASE("refinement budget is enforced") {
    SolveOptions opts;
    opts.max_iter = 2;
    CHECK_THROWS_AS(solve_generic(instantiate(FamilyId::A6), opts), refinement_budget_error);
}
