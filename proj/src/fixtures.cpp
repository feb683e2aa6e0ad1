#include "einq/fixtures.hpp"

#include "einq/algebra.hpp"
#include "einq/solver.hpp"

namespace einq {

namespace {

VerifyCheck check(std::string scope, std::string name, std::string expected, std::string actual) {
    bool pass = expected == actual;
    return {std::move(scope), std::move(name), std::move(expected), std::move(actual), pass};
}

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

}  // namespace

std::vector<VerifyCheck> table_c_checks() {
    std::vector<VerifyCheck> out;
    struct Probe {
        const char* name;
        long dim;
        long norm;
    };
    const Probe probes[] = {
        {"su4", 15, 16},  {"so8", 28, 24}, {"sp3", 21, 16}, {"g2", 14, 16},
        {"f4", 52, 36},   {"e6", 78, 48},  {"e7", 133, 72}, {"e8", 248, 120},
    };
    for (const auto& p : probes) {
        AlgebraDescriptor d = AlgebraDescriptor::parse(p.name);
        std::string expected =
            "dim=" + std::to_string(p.dim) + " norm=" + std::to_string(p.norm);
        std::string actual =
            "dim=" + std::to_string(dimension(d)) + " norm=" + format_rational(killing_norm(d));
        out.push_back(check("table-c", p.name, expected, actual));
    }
    return out;
}

std::vector<VerifyCheck> appendix_a_checks() {
    std::vector<VerifyCheck> out;

    auto flatten = [&](FamilyId id, const FamilyParams& p) {
        for (const auto& c : verify_closed_forms(id, p))
            out.push_back({"appendix-a", c.name, c.expected, c.actual, c.pass});
    };

    // Classical rows at three parameter points each.
    for (const auto& p : {params3(2, 2, 2, 1), params3(2, 3, 2, 2), params3(3, 2, 4, 1)})
        flatten(FamilyId::A1, p);
    for (const auto& p : {params3(2, 2, 2, 2), params3(2, 3, 2, 3), params3(3, 2, 2, 2)})
        flatten(FamilyId::A2, p);
    for (const auto& p : {params3(2, 2, 2, 1), params3(2, 2, 3, 2), params3(3, 2, 2, 1)})
        flatten(FamilyId::A4, p);
    for (const auto& p : {params2(2, 2, 3), params2(2, 3, 4), params2(3, 2, 3)})
        flatten(FamilyId::B1, p);
    for (const auto& p : {params2(2, 2, 1), params2(2, 2, 2), params2(3, 2, 2)})
        flatten(FamilyId::B3, p);
    // Direct-sum rows: the subgroup-independent pieces.
    for (const auto& p : {params2(2, 2, 3), params2(2, 3, 3), params2(3, 2, 4)})
        flatten(FamilyId::A3, p);
    for (int n : {2, 3})
        for (int k : {3, 4}) {
            FamilyParams p;
            p.n1 = n;
            p.k = k;
            flatten(FamilyId::B2, p);
        }
    // Fixed rows.
    for (FamilyId id :
         {FamilyId::A5, FamilyId::A6, FamilyId::A7, FamilyId::A8, FamilyId::A9, FamilyId::A10,
          FamilyId::A11, FamilyId::B4, FamilyId::B5, FamilyId::B6, FamilyId::B7, FamilyId::B8,
          FamilyId::B9, FamilyId::B10, FamilyId::B11, FamilyId::B12, FamilyId::B13, FamilyId::B14,
          FamilyId::B15, FamilyId::B16, FamilyId::B17, FamilyId::B18})
        flatten(id, {});

    // Literal pins for the tabulated sign indicators.
    struct OmegaPin {
        FamilyId id;
        const char* w1;
        const char* w2;
    };
    const OmegaPin pins[] = {
        {FamilyId::A5, "-1/6", "0"},    {FamilyId::A6, "-1/18", "-2/9"},
        {FamilyId::A9, "1/6", "2/15"},  {FamilyId::B4, "-1/4", "1/6"},
        {FamilyId::B5, "-5/18", "2/9"}, {FamilyId::B6, "1/6", "5/12"},
        {FamilyId::B7, "1/18", "5/9"},  {FamilyId::B13, "7/60", "11/30"},
        {FamilyId::B14, "1/5", "11/30"},{FamilyId::B17, "11/60", "7/30"},
        {FamilyId::B18, "13/60", "1/6"},
    };
    for (const auto& pin : pins) {
        auto [w1, w2] = omega(instantiate(pin.id));
        out.push_back(check("appendix-a", std::string(family_name(pin.id)) + " omega pin",
                            std::string(pin.w1) + "," + pin.w2,
                            format_rational(w1) + "," + format_rational(w2)));
    }
    {
        // Structural constants of the two rows quoted with full data.
        Quadruple a5 = instantiate(FamilyId::A5);
        out.push_back(check("appendix-a", "A5 constants", "2/3,1/2,1/2,1/3,1/12",
                            format_rational(a5.c1) + "," + format_rational(a5.c2) + "," +
                                format_rational(a5.casimir.l_p) + "," +
                                format_rational(a5.casimir.k_p) + "," +
                                format_rational(a5.casimir.h_p)));
        Quadruple b4 = instantiate(FamilyId::B4);
        out.push_back(check("appendix-a", "B4 constants", "5/6,2/3,1/2,1/3",
                            format_rational(b4.c1) + "," + format_rational(b4.c2) + "," +
                                format_rational(b4.casimir.l_p) + "," +
                                format_rational(b4.casimir.k_p)));
        // Embedding index pins quoted per row.
        out.push_back(check("appendix-a", "index so(10)<e6", "2/3",
                            format_rational(regular_embedding_index(
                                AlgebraDescriptor::parse("so10"), AlgebraDescriptor::parse("e6")))));
        out.push_back(check("appendix-a", "index su(2)<e7", "1/9",
                            format_rational(regular_embedding_index(
                                AlgebraDescriptor::parse("su2"), AlgebraDescriptor::parse("e7")))));
        out.push_back(check("appendix-a", "index su(9)<e8", "3/10",
                            format_rational(regular_embedding_index(
                                AlgebraDescriptor::parse("su9"), AlgebraDescriptor::parse("e8")))));
    }
    return out;
}

std::vector<VerifyCheck> appendix_b_checks() {
    std::vector<VerifyCheck> out;

    auto row = [&](FamilyId id, const FamilyParams& p, const char* beta_lit,
                   const char* fbar_beta_lit, const char* fbar_one_lit) {
        Quadruple q = instantiate(id, p);
        MFactorization mf = m_factorization(q);
        RationalPolynomial fbar = fbar_cubic(q);
        std::string label = std::string(family_name(id)) +
                            (p.to_string().empty() ? "" : "(" + p.to_string() + ")");
        out.push_back(check("appendix-b", label + " beta", beta_lit, format_rational(mf.beta)));
        if (fbar_beta_lit)
            out.push_back(
                check("appendix-b", label + " fbar(beta)", fbar_beta_lit,
                      format_rational(fbar(mf.beta))));
        if (fbar_one_lit)
            out.push_back(check("appendix-b", label + " fbar(1)", fbar_one_lit,
                                format_rational(fbar(rat(1)))));
    };

    row(FamilyId::A5, {}, "3/2", "0", nullptr);
    row(FamilyId::A6, {}, "4/3", "2/729", "-7/5832");
    row(FamilyId::B4, {}, "3/2", "-1/768", nullptr);
    row(FamilyId::B5, {}, "5/3", "-5/1458", nullptr);

    // sp-chain collision rows: fbar(beta) against the closed form
    // k^2 (5k+1)(k-1) / (4 (4k+1)^2 (k+1)^2).
    for (int k : {1, 2, 3}) {
        Quadruple q = instantiate(FamilyId::B3, params2(2, 2, k));
        MFactorization mf = m_factorization(q);
        Rational closed = rat(static_cast<long>(k) * k * (5 * k + 1) * (k - 1),
                              4L * (4 * k + 1) * (4 * k + 1) * (k + 1) * (k + 1));
        out.push_back(check("appendix-b", "B3(2,2," + std::to_string(k) + ") fbar(beta)",
                            format_rational(closed), format_rational(fbar_cubic(q)(mf.beta))));
    }
    out.push_back(check("appendix-b", "B3(2,2,1) fbar(beta) literal", "0",
                        format_rational(fbar_cubic(instantiate(FamilyId::B3, params2(2, 2, 1)))(
                            m_factorization(instantiate(FamilyId::B3, params2(2, 2, 1))).beta))));
    out.push_back(check("appendix-b", "B3(2,2,2) fbar(beta) literal", "11/729",
                        format_rational(fbar_cubic(instantiate(FamilyId::B3, params2(2, 2, 2)))(
                            m_factorization(instantiate(FamilyId::B3, params2(2, 2, 2))).beta))));

    // sp-chain collision rows along the other edge: fbar(1) against
    // k (2 n1 k - 2k - 1)(2(n1-1) - 9k) / (8 (4 n1 k + 1)^3).
    struct A4Pin {
        int n1;
        int k;
        const char* literal;
    };
    const A4Pin a4pins[] = {{2, 1, "-7/5832"}, {10, 2, "0"}, {3, 1, "-15/17576"}};
    for (const auto& pin : a4pins) {
        Quadruple q = instantiate(FamilyId::A4, params3(pin.n1, 2, 2, pin.k));
        long n1 = pin.n1, k = pin.k;
        Rational closed = rat(k * (2 * n1 * k - 2 * k - 1) * (2 * (n1 - 1) - 9 * k),
                              8L * (4 * n1 * k + 1) * (4 * n1 * k + 1) * (4 * n1 * k + 1));
        std::string label = "A4(" + std::to_string(pin.n1) + ",2,2," + std::to_string(pin.k) + ")";
        Rational actual = fbar_cubic(q)(rat(1));
        out.push_back(check("appendix-b", label + " fbar(1) closed form", format_rational(closed),
                            format_rational(actual)));
        out.push_back(
            check("appendix-b", label + " fbar(1) literal", pin.literal, format_rational(actual)));
    }
    return out;
}

std::vector<VerifyCheck> corrupt_one(std::vector<VerifyCheck> checks) {
    if (!checks.empty()) {
        checks.front().expected += "+corrupted";
        checks.front().pass = false;
    }
    return checks;
}

}  // namespace einq
