#include <doctest.h>

#include "einq/errors.hpp"
#include "einq/families.hpp"
#include "einq/quadruple.hpp"

using namespace einq;

TEST_CASE("casimir trace averages") {
    // so(10)+R inside the 78-dim algebra over a 32-dim complement
    CHECK(casimir_from_trace({{45, rat(2, 3)}}, 1, 32) == rat(1, 2));
    // abelian-only: six flat directions over a 72-dim complement
    CHECK(casimir_from_trace({}, 6, 72) == rat(1, 12));
    CHECK(casimir_from_trace({}, 0, 10) == 0);
    // index-0 factors count like abelian blocks
    CHECK(casimir_from_trace({{6, rat(0)}}, 0, 72) == casimir_from_trace({}, 6, 72));
}

TEST_CASE("casimir from indices inverts the c1 identity") {
    // 2so(6) < so(12): dims 66/30, c1 = 2/5
    ChainDims dims{66, 30, 12, 0};
    CasimirConstants cc = casimir_from_indices(dims, rat(2, 5), rat(1, 10), std::nullopt, true);
    CHECK(cc.l_p == rat(1, 2));
    CHECK(cc.k_p == rat(1, 5));
    CHECK(cc.k_u == cc.k_p);
    CHECK(cc.h_p == 0);

    // inconsistent c2 is rejected with both sides attached
    CHECK_THROWS_AS(casimir_from_indices(dims, rat(2, 5), rat(1, 9), std::nullopt, true),
                    inconsistency_error);
    // missing c3 with nontrivial H is rejected
    ChainDims dims_h{66, 30, 12, 3};
    CHECK_THROWS_AS(casimir_from_indices(dims_h, rat(2, 5), rat(1, 10), std::nullopt, false),
                    inconsistency_error);
}

TEST_CASE("construction validation") {
    CasimirConstants cc;
    cc.l_p = rat(1, 2);
    cc.k_p = cc.k_u = rat(1, 5);
    cc.h_p = cc.h_u = cc.h_n = rat(0);
    QuadrupleFlags flags;
    flags.h_trivial = true;
    CHECK_THROWS_AS(
        Quadruple::make({66, 30, 30, 0}, rat(2, 5), rat(1, 10), cc, flags, "bad chain"),
        inconsistency_error);
    CHECK_THROWS_AS(
        Quadruple::make({66, 30, 12, 0}, rat(1, 10), rat(2, 5), cc, flags, "c order"),
        inconsistency_error);
    flags.h_trivial = false;  // h_trivial=false but dim_h = 0 is fine structurally
    Quadruple ok = Quadruple::make({66, 30, 12, 0}, rat(2, 5), rat(1, 10), cc, flags, "ok");
    CHECK(ok.dims.dim_n() == 12);
    CHECK(ok.dims.dim_u() == 18);
    CHECK(ok.dims.dim_p() == 36);
}

TEST_CASE("omega formulas") {
    auto [w1, w2] = omega(instantiate(FamilyId::A5));
    CHECK(w1 == rat(-1, 6));
    CHECK(w2 == 0);
    auto [v1, v2] = omega(instantiate(FamilyId::A6));
    CHECK(v1 == rat(-1, 18));
    CHECK(v2 == rat(-2, 9));
    auto [u1, u2] = omega(instantiate(FamilyId::B5));
    CHECK(u1 == rat(-5, 18));
    CHECK(u2 == rat(2, 9));
}

TEST_CASE("trace identities hold exactly where declared") {
    for (FamilyId id : {FamilyId::A7, FamilyId::A8, FamilyId::A9, FamilyId::A10, FamilyId::A11,
                        FamilyId::B4, FamilyId::B5, FamilyId::B6, FamilyId::B7, FamilyId::B13,
                        FamilyId::B17, FamilyId::B18}) {
        Quadruple q = instantiate(id);
        CHECK(holds_c1_identity(q));
        CHECK(holds_c2_identity(q));
    }
    // rows with centers or mixed-index middle terms are exempt, and indeed fail
    CHECK_FALSE(holds_c1_identity(instantiate(FamilyId::A5)));
    CHECK_FALSE(holds_c1_identity(instantiate(FamilyId::A6)));
    FamilyParams p;
    p.n1 = p.n2 = p.n3 = 2;
    p.k = 1;
    CHECK_FALSE(holds_c1_identity(instantiate(FamilyId::A1, p)));
}

TEST_CASE("trace route equals index route on uniform rows") {
    // A2(2,2,2,2): every subalgebra in the chain rescales uniformly, so the
    // trace average must reproduce the closed-form scalars.
    FamilyParams p;
    p.n1 = p.n2 = p.n3 = 2;
    p.k = 2;
    Quadruple q = instantiate(FamilyId::A2, p);
    // l = 2 so(8) inside so(16): two factors of dim 28 and index c1
    Rational l_p = casimir_from_trace({{28, q.c1}, {28, q.c1}}, 0, q.dims.dim_p());
    CHECK(l_p == q.casimir.l_p);
    // k = 4 so(4), index c2, over dim G/K
    Rational k_u = casimir_from_trace(std::vector<TraceFactor>(4, {6, q.c2}), 0,
                                      q.dims.dim_g - q.dims.dim_k);
    CHECK(k_u == q.casimir.k_u);
}

TEST_CASE("quadruple JSON round-trips losslessly") {
    Quadruple q = instantiate(FamilyId::A6);
    std::string text = quadruple_to_json(q);
    Quadruple back = quadruple_from_json(text);
    CHECK(back.dims == q.dims);
    CHECK(back.c1 == q.c1);
    CHECK(back.c2 == q.c2);
    CHECK(back.casimir == q.casimir);
    CHECK(back.flags == q.flags);
    CHECK(back.provenance == q.provenance);
    CHECK(quadruple_to_json(back) == text);
}
