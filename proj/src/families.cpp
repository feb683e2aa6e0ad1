#include "einq/families.hpp"

#include <array>
#include <sstream>

#include "einq/algebra.hpp"
#include "einq/errors.hpp"

namespace einq {

namespace {

struct FamilyMeta {
    FamilyId id;
    const char* name;
    bool parametric;
    bool symmetric_gl;
    bool identity_c1;
    bool identity_c2;
    const char* citation;
};

constexpr std::array<FamilyMeta, 29> kMeta{{
    {FamilyId::A1, "A1", true, false, false, false,
     "A1: su(n1n2n3k) > s(n1 u(n2n3k)) > s(n1n2 u(n3k)) > s(n1n2n3 u(k))"},
    {FamilyId::A2, "A2", true, false, true, true,
     "A2: so(n1n2n3k) > n1 so(n2n3k) > n1n2 so(n3k) > n1n2n3 so(k)"},
    {FamilyId::A3, "A3", true, false, true, true,
     "A3: so(n1n2k) > n1 so(n2k) > n1n2 so(k) > direct sum (user-classified)"},
    {FamilyId::A4, "A4", true, false, true, true,
     "A4: sp(n1n2n3k) > n1 sp(n2n3k) > n1n2 sp(n3k) > n1n2n3 sp(k)"},
    {FamilyId::A5, "A5", false, true, false, false, "A5: e6 > so(10)+R > so(8)+R^2 > R^6"},
    {FamilyId::A6, "A6", false, true, false, false, "A6: e7 > so(12)+su(2) > so(8)+3su(2) > 7su(2)"},
    {FamilyId::A7, "A7", false, true, true, true, "A7: e8 > so(16) > 2so(8) > R^8"},
    {FamilyId::A8, "A8", false, true, true, true, "A8: e8 > so(16) > 8su(2) > R^8"},
    {FamilyId::A9, "A9", false, false, true, true, "A9: e8 > 2so(8) > 8su(2) > R^8"},
    {FamilyId::A10, "A10", false, true, true, true, "A10: e8 > so(16) > 2so(8) > 8su(2)"},
    {FamilyId::A11, "A11", false, true, true, true, "A11: e8 > so(16) > 2so(8) > 2su(3)"},
    {FamilyId::B1, "B1", true, false, true, true,
     "B1: so(n1n2k) > n1 so(n2k) > n1n2 so(k) > {e}"},
    {FamilyId::B2, "B2", true, false, true, true,
     "B2: so(nk) > n so(k) > direct sum (user-classified) > {e}"},
    {FamilyId::B3, "B3", true, false, true, true,
     "B3: sp(n1n2k) > n1 sp(n2k) > n1n2 sp(k) > {e}"},
    {FamilyId::B4, "B4", false, true, true, true, "B4: so(8) > so(7) > g2 > {e}"},
    {FamilyId::B5, "B5", false, true, true, true, "B5: f4 > so(9) > so(8) > {e}"},
    {FamilyId::B6, "B6", false, false, true, true, "B6: e6 > 3su(3) > 3so(3) > {e}"},
    {FamilyId::B7, "B7", false, true, true, true, "B7: e7 > su(8) > so(8) > {e}"},
    {FamilyId::B8, "B8", false, true, true, true, "B8: e8 > so(16) > 2so(8) > {e}"},
    {FamilyId::B9, "B9", false, true, true, true, "B9: e8 > so(16) > so(9) > {e}"},
    {FamilyId::B10, "B10", false, true, true, true, "B10: e8 > so(16) > 8su(2) > {e}"},
    {FamilyId::B11, "B11", false, true, true, true, "B11: e8 > so(16) > 2so(5) > {e}"},
    {FamilyId::B12, "B12", false, true, true, true, "B12: e8 > so(16) > 2su(3) > {e}"},
    {FamilyId::B13, "B13", false, false, true, true, "B13: e8 > su(9) > so(9) > {e}"},
    {FamilyId::B14, "B14", false, false, true, true, "B14: e8 > su(9) > 2su(3) > {e}"},
    {FamilyId::B15, "B15", false, false, true, true, "B15: e8 > 2so(8) > 8su(2) > {e}"},
    {FamilyId::B16, "B16", false, false, true, true, "B16: e8 > 2so(8) > 2su(3) > {e}"},
    {FamilyId::B17, "B17", false, false, true, true, "B17: e8 > 2su(5) > 2so(5) > {e}"},
    {FamilyId::B18, "B18", false, false, true, true, "B18: e8 > 4su(3) > 4so(3) > {e}"},
}};

const FamilyMeta& meta(FamilyId id) { return kMeta[static_cast<size_t>(id)]; }

[[noreturn]] void bound_violation(FamilyId id, const std::string& what) {
    throw parameter_error(std::string(family_name(id)) + ": " + what);
}

int need(FamilyId id, const std::optional<int>& v, const char* name, int min) {
    if (!v) bound_violation(id, std::string("missing parameter ") + name);
    if (*v < min)
        bound_violation(id, std::string(name) + " = " + std::to_string(*v) + " violates " + name +
                                " >= " + std::to_string(min));
    return *v;
}

long so_dim(long n) { return n * (n - 1) / 2; }
long sp_dim(long n) { return 2 * n * n + n; }

AlgebraDescriptor alg(AlgebraFamily f, int n = 0) { return AlgebraDescriptor::make(f, n); }

Quadruple finish(FamilyId id, ChainDims dims, Rational c1, Rational c2, CasimirConstants cc,
                 bool h_trivial, const std::string& provenance) {
    QuadrupleFlags flags;
    flags.h_trivial = h_trivial;
    flags.g_simple = true;
    flags.k_ideal_in_l = false;  // proper non-ideal subalgebras in every row
    Quadruple q = Quadruple::make(dims, std::move(c1), std::move(c2), std::move(cc), flags,
                                  provenance);
    const FamilyMeta& m = meta(id);
    if (m.identity_c1 && !holds_c1_identity(q))
        throw internal_consistency_error(provenance + ": c1 trace identity failed");
    if (m.identity_c2 && !holds_c2_identity(q))
        throw internal_consistency_error(provenance + ": c2 trace identity failed");
    return q;
}

CasimirConstants uniform_casimir(Rational l_p, Rational k_p, Rational h) {
    CasimirConstants cc;
    cc.l_p = std::move(l_p);
    cc.k_p = k_p;
    cc.k_u = std::move(k_p);
    cc.h_p = h;
    cc.h_u = h;
    cc.h_n = std::move(h);
    return cc;
}

void require_trace(const std::string& who, const Rational& stored, const Rational& traced) {
    if (stored != traced)
        throw internal_consistency_error(who + ": stored value " + format_rational(stored) +
                                         " disagrees with trace value " + format_rational(traced));
}

Quadruple make_a5() {
    ChainDims dims{78, 46, 30, 6};
    Rational c1 = regular_embedding_index(alg(AlgebraFamily::SO, 10), alg(AlgebraFamily::E6));
    Rational c2 = regular_embedding_index(alg(AlgebraFamily::SO, 8), alg(AlgebraFamily::E6));
    CasimirConstants cc = uniform_casimir(rat(1, 2), rat(1, 3), rat(1, 12));
    // Row data cross-checked by the Casimir traces of the actual factor content.
    require_trace("A5 l_p", cc.l_p, casimir_from_trace({{45, c1}}, 1, 32));
    require_trace("A5 k_u", cc.k_u, casimir_from_trace({{28, c2}}, 2, 48));
    require_trace("A5 h_p", cc.h_p, casimir_from_trace({}, 6, 72));
    return finish(FamilyId::A5, dims, c1, c2, cc, false, "A5");
}

Quadruple make_a6() {
    ChainDims dims{133, 69, 37, 21};
    Rational c1 = regular_embedding_index(alg(AlgebraFamily::SO, 12), alg(AlgebraFamily::E7));
    Rational c2 = regular_embedding_index(alg(AlgebraFamily::SO, 8), alg(AlgebraFamily::E7));
    Rational su2 = regular_embedding_index(alg(AlgebraFamily::SU, 2), alg(AlgebraFamily::E7));
    CasimirConstants cc = uniform_casimir(rat(1, 2), rat(5, 18), rat(1, 6));
    require_trace("A6 l_p", cc.l_p, casimir_from_trace({{66, c1}, {3, su2}}, 0, 64));
    require_trace("A6 k_u", cc.k_u,
                  casimir_from_trace({{28, c2}, {3, su2}, {3, su2}, {3, su2}}, 0, 96));
    require_trace("A6 h_p", cc.h_p,
                  casimir_from_trace(std::vector<TraceFactor>(7, TraceFactor{3, su2}), 0, 112));
    return finish(FamilyId::A6, dims, c1, c2, cc, false, "A6");
}

struct FixedRow {
    ChainDims dims;
    Rational c1;
    Rational c2;
    std::optional<Rational> c3;  // index of H when it rescales uniformly
    bool h_trivial;
};

FixedRow fixed_row(FamilyId id) {
    using AF = AlgebraFamily;
    auto reg = [](AF sf, int sn, AF af) {
        return regular_embedding_index(alg(sf, sn), alg(af));
    };
    auto tag = [](const char* t) { return embedding_index_by_tag(t).index; };
    switch (id) {
        case FamilyId::A7:
            return {{248, 120, 56, 8}, reg(AF::SO, 16, AF::E8), reg(AF::SO, 8, AF::E8),
                    rat(0), false};  // abelian H: index 0, the dimension-ratio identity still holds
        case FamilyId::A8:
            return {{248, 120, 24, 8}, reg(AF::SO, 16, AF::E8), reg(AF::SU, 2, AF::E8),
                    rat(0), false};
        case FamilyId::A9:
            return {{248, 56, 24, 8}, reg(AF::SO, 8, AF::E8), reg(AF::SU, 2, AF::E8), rat(0),
                    false};
        case FamilyId::A10:
            return {{248, 120, 56, 24}, reg(AF::SO, 16, AF::E8), reg(AF::SO, 8, AF::E8),
                    reg(AF::SU, 2, AF::E8), false};
        case FamilyId::A11:
            return {{248, 120, 56, 16}, reg(AF::SO, 16, AF::E8), reg(AF::SO, 8, AF::E8),
                    tag("e8.su3.nonregular"), false};
        case FamilyId::B4:
            return {{28, 21, 14, 0}, tag("so8.so7"), tag("so8.g2"), std::nullopt, true};
        case FamilyId::B5:
            return {{52, 36, 28, 0}, reg(AF::SO, 9, AF::F4), reg(AF::SO, 8, AF::F4), std::nullopt,
                    true};
        case FamilyId::B6:
            return {{78, 24, 9, 0}, reg(AF::SU, 3, AF::E6), tag("e6.so3"), std::nullopt, true};
        case FamilyId::B7:
            return {{133, 63, 28, 0}, reg(AF::SU, 8, AF::E7), tag("e7.so8.in-su8"), std::nullopt,
                    true};
        case FamilyId::B8:
            return {{248, 120, 56, 0}, reg(AF::SO, 16, AF::E8), reg(AF::SO, 8, AF::E8),
                    std::nullopt, true};
        case FamilyId::B9:
            return {{248, 120, 36, 0}, reg(AF::SO, 16, AF::E8), tag("e8.so9"), std::nullopt, true};
        case FamilyId::B10:
            return {{248, 120, 24, 0}, reg(AF::SO, 16, AF::E8), reg(AF::SU, 2, AF::E8),
                    std::nullopt, true};
        case FamilyId::B11:
            return {{248, 120, 20, 0}, reg(AF::SO, 16, AF::E8), tag("e8.so5"), std::nullopt, true};
        case FamilyId::B12:
            return {{248, 120, 16, 0}, reg(AF::SO, 16, AF::E8), tag("e8.su3.nonregular"),
                    std::nullopt, true};
        case FamilyId::B13:
            return {{248, 80, 36, 0}, reg(AF::SU, 9, AF::E8), tag("e8.so9"), std::nullopt, true};
        case FamilyId::B14:
            return {{248, 80, 16, 0}, reg(AF::SU, 9, AF::E8), tag("e8.su3.nonregular"),
                    std::nullopt, true};
        case FamilyId::B15:
            return {{248, 56, 24, 0}, reg(AF::SO, 8, AF::E8), reg(AF::SU, 2, AF::E8), std::nullopt,
                    true};
        case FamilyId::B16:
            return {{248, 56, 16, 0}, reg(AF::SO, 8, AF::E8), tag("e8.su3.nonregular"),
                    std::nullopt, true};
        case FamilyId::B17:
            return {{248, 48, 20, 0}, reg(AF::SU, 5, AF::E8), tag("e8.so5"), std::nullopt, true};
        case FamilyId::B18:
            return {{248, 32, 12, 0}, reg(AF::SU, 3, AF::E8), tag("e8.so3"), std::nullopt, true};
        default:
            throw parameter_error("not a fixed row");
    }
}

}  // namespace

const char* family_name(FamilyId id) { return meta(id).name; }

std::optional<FamilyId> parse_family(const std::string& name) {
    for (const auto& m : kMeta)
        if (name == m.name) return m.id;
    return std::nullopt;
}

bool family_is_parametric(FamilyId id) { return meta(id).parametric; }

std::string FamilyParams::to_string() const {
    std::ostringstream out;
    const char* sep = "";
    auto put = [&](const char* name, auto v) {
        if (v) {
            out << sep << name << "=" << *v;
            sep = ",";
        }
    };
    put("n1", n1);
    put("n2", n2);
    put("n3", n3);
    put("k", k);
    put("dim_h", dim_h);
    put("dim_k", dim_k);
    return out.str();
}

const FamilySpec& family_spec(FamilyId id) {
    static std::array<FamilySpec, 29> specs = [] {
        std::array<FamilySpec, 29> s{};
        for (const auto& m : kMeta)
            s[static_cast<size_t>(m.id)] =
                FamilySpec{m.id, m.symmetric_gl, m.identity_c1, m.identity_c2, m.citation};
        return s;
    }();
    return specs[static_cast<size_t>(id)];
}

bool a3_b2_dimension_guard(const std::vector<long>& h_factor_dims, int n_copies, int k) {
    long sum = 0;
    for (long d : h_factor_dims) sum += d;
    // strict inequality against half the dimension of n copies of so(k)
    return 2 * sum < n_copies * so_dim(k);
}

Quadruple instantiate(FamilyId id, const FamilyParams& params) {
    std::string prov = std::string(family_name(id)) +
                       (params.to_string().empty() ? "" : "(" + params.to_string() + ")");
    switch (id) {
        case FamilyId::A1: {
            long n1 = need(id, params.n1, "n1", 2), n2 = need(id, params.n2, "n2", 2),
                 n3 = need(id, params.n3, "n3", 2), k = need(id, params.k, "k", 1);
            long N = n1 * n2 * n3 * k;
            ChainDims dims{N * N - 1, n1 * (n2 * n3 * k) * (n2 * n3 * k) - 1,
                           n1 * n2 * (n3 * k) * (n3 * k) - 1, n1 * n2 * n3 * k * k - 1};
            return finish(id, dims, rat(1, n1), rat(1, n1 * n2),
                          uniform_casimir(rat(1, n1), rat(1, n1 * n2),
                                          rat(1, n1 * n2 * n3)),
                          false, prov);
        }
        case FamilyId::A2: {
            long n1 = need(id, params.n1, "n1", 2), n2 = need(id, params.n2, "n2", 2),
                 n3 = need(id, params.n3, "n3", 2), k = need(id, params.k, "k", 2);
            long N = n1 * n2 * n3 * k, m = n2 * n3 * k, r = n3 * k;
            ChainDims dims{so_dim(N), n1 * so_dim(m), n1 * n2 * so_dim(r),
                           n1 * n2 * n3 * so_dim(k)};
            return finish(id, dims, rat(m - 2, N - 2), rat(r - 2, N - 2),
                          uniform_casimir(rat(m - 1, N - 2), rat(r - 1, N - 2),
                                          rat(k - 1, N - 2)),
                          false, prov);
        }
        case FamilyId::A3: {
            long n1 = need(id, params.n1, "n1", 2), n2 = need(id, params.n2, "n2", 2),
                 k = need(id, params.k, "k", 3);
            if (!params.dim_h) bound_violation(id, "missing dim_h (user-classified subalgebra)");
            long dim_h = *params.dim_h;
            long N = n1 * n2 * k, m = n2 * k;
            ChainDims dims{so_dim(N), n1 * so_dim(m), n1 * n2 * so_dim(k), dim_h};
            if (dim_h < 1) bound_violation(id, "dim_h >= 1");
            if (2 * dim_h >= dims.dim_k)
                bound_violation(id, "dim_h violates the bound dim_h < dim(n1n2 so(k))/2");
            Rational l_p = rat(m - 1, N - 2);
            Rational h = rat(dim_h) / rat(dims.dim_l) * l_p;
            return finish(id, dims, rat(m - 2, N - 2), rat(k - 2, N - 2),
                          uniform_casimir(l_p, rat(k - 1, N - 2), h), false, prov);
        }
        case FamilyId::A4: {
            long n1 = need(id, params.n1, "n1", 2), n2 = need(id, params.n2, "n2", 2),
                 n3 = need(id, params.n3, "n3", 2), k = need(id, params.k, "k", 1);
            long N = n1 * n2 * n3 * k, m = n2 * n3 * k, r = n3 * k;
            ChainDims dims{sp_dim(N), n1 * sp_dim(m), n1 * n2 * sp_dim(r),
                           n1 * n2 * n3 * sp_dim(k)};
            return finish(id, dims, rat(m + 1, N + 1), rat(r + 1, N + 1),
                          uniform_casimir(rat(2 * m + 1, 2 * (N + 1)),
                                          rat(2 * r + 1, 2 * (N + 1)),
                                          rat(2 * k + 1, 2 * (N + 1))),
                          false, prov);
        }
        case FamilyId::A5: return make_a5();
        case FamilyId::A6: return make_a6();
        case FamilyId::B1: {
            long n1 = need(id, params.n1, "n1", 2), n2 = need(id, params.n2, "n2", 2),
                 k = need(id, params.k, "k", 3);
            long N = n1 * n2 * k, m = n2 * k;
            ChainDims dims{so_dim(N), n1 * so_dim(m), n1 * n2 * so_dim(k), 0};
            return finish(id, dims, rat(m - 2, N - 2), rat(k - 2, N - 2),
                          uniform_casimir(rat(m - 1, N - 2), rat(k - 1, N - 2),
                                          rat(0)),
                          true, prov);
        }
        case FamilyId::B2: {
            long n = need(id, params.n1, "n1", 2), k = need(id, params.k, "k", 3);
            if (!params.dim_k) bound_violation(id, "missing dim_k (user-classified subalgebra)");
            long dim_k = *params.dim_k;
            long N = n * k;
            ChainDims dims{so_dim(N), n * so_dim(k), dim_k, 0};
            if (dim_k < 1) bound_violation(id, "dim_k >= 1");
            if (2 * dim_k >= dims.dim_l)
                bound_violation(id, "dim_k violates the bound dim_k < dim(n so(k))/2");
            Rational l_p = rat(k - 1, N - 2);
            Rational k_p = rat(dim_k) / rat(dims.dim_l) * l_p;
            Rational c2 = 1 - rat(dims.dim_g - dims.dim_k) / rat(dims.dim_l) * l_p;
            return finish(id, dims, rat(k - 2, N - 2), c2,
                          uniform_casimir(l_p, k_p, rat(0)), true, prov);
        }
        case FamilyId::B3: {
            long n1 = need(id, params.n1, "n1", 2), n2 = need(id, params.n2, "n2", 2),
                 k = need(id, params.k, "k", 1);
            long N = n1 * n2 * k, m = n2 * k;
            ChainDims dims{sp_dim(N), n1 * sp_dim(m), n1 * n2 * sp_dim(k), 0};
            return finish(id, dims, rat(m + 1, N + 1), rat(k + 1, N + 1),
                          uniform_casimir(rat(2 * m + 1, 2 * (N + 1)),
                                          rat(2 * k + 1, 2 * (N + 1)), rat(0)),
                          true, prov);
        }
        default: {
            FixedRow row = fixed_row(id);
            CasimirConstants cc =
                casimir_from_indices(row.dims, row.c1, row.c2, row.c3, row.h_trivial);
            return finish(id, row.dims, row.c1, row.c2, cc, row.h_trivial, prov);
        }
    }
}

OmegaClosedForm omega_closed_form(FamilyId id, const FamilyParams& params) {
    auto p = [&](const std::optional<int>& v, const char* name, int min) {
        return static_cast<long>(need(id, v, name, min));
    };
    switch (id) {
        case FamilyId::A1: {
            long n1 = p(params.n1, "n1", 2), n2 = p(params.n2, "n2", 2), n3 = p(params.n3, "n3", 2);
            (void)p(params.k, "k", 1);
            return {rat(1, 4) - rat(1, n1 * n2),
                    rat(1, n1) - rat(4, n1 * n2 * n3)};
        }
        case FamilyId::A2: {
            long n1 = p(params.n1, "n1", 2), n2 = p(params.n2, "n2", 2), n3 = p(params.n3, "n3", 2),
                 k = p(params.k, "k", 2);
            long N = n1 * n2 * n3 * k;
            return {rat(N - 4 * n3 * k + 4, 4 * (N - 2)),
                    rat(n2 * n3 * k - 4 * k + 4, N - 2)};
        }
        case FamilyId::A3: {
            long n1 = p(params.n1, "n1", 2), n2 = p(params.n2, "n2", 2), k = p(params.k, "k", 3);
            long N = n1 * n2 * k;
            OmegaClosedForm out{rat(N - 4 * k + 4, 4 * (N - 2)),
                                rat(n2 * k - 2 * k + 2, N - 2), true};
            return out;
        }
        case FamilyId::A4: {
            long n1 = p(params.n1, "n1", 2), n2 = p(params.n2, "n2", 2), n3 = p(params.n3, "n3", 2),
                 k = p(params.k, "k", 1);
            long N = n1 * n2 * n3 * k;
            return {rat(N - 4 * n3 * k - 2, 4 * (N + 1)),
                    rat(n2 * n3 * k - 4 * k - 2, N + 1)};
        }
        case FamilyId::A5: return {rat(-1, 6), rat(0)};
        case FamilyId::A6: return {rat(-1, 18), rat(-2, 9)};
        case FamilyId::A7: return {rat(1, 30), rat(2, 5)};
        case FamilyId::A8: return {rat(1, 6), rat(2, 5)};
        case FamilyId::A9: return {rat(1, 6), rat(2, 15)};
        case FamilyId::A10: return {rat(1, 30), rat(2, 15)};
        case FamilyId::A11: return {rat(1, 30), rat(4, 15)};
        case FamilyId::B1: {
            long n1 = p(params.n1, "n1", 2), n2 = p(params.n2, "n2", 2), k = p(params.k, "k", 3);
            long N = n1 * n2 * k;
            return {rat(N - 4 * k + 4, 4 * (N - 2)), rat(n2 * k, N - 2)};
        }
        case FamilyId::B2: {
            long n = p(params.n1, "n1", 2), k = p(params.k, "k", 3);
            long N = n * k;
            // omega1 here is only a strict positive lower bound; the exact value
            // needs the user-classified middle term.
            return {rat(N - 2 * k + 2, 4 * (N - 2)), rat(k, N - 2), false};
        }
        case FamilyId::B3: {
            long n1 = p(params.n1, "n1", 2), n2 = p(params.n2, "n2", 2), k = p(params.k, "k", 1);
            long N = n1 * n2 * k;
            return {rat(N - 4 * k - 2, 4 * (N + 1)), rat(n2 * k, N + 1)};
        }
        case FamilyId::B4: return {rat(-1, 4), rat(1, 6)};
        case FamilyId::B5: return {rat(-5, 18), rat(2, 9)};
        case FamilyId::B6: return {rat(1, 6), rat(5, 12)};
        case FamilyId::B7: return {rat(1, 18), rat(5, 9)};
        case FamilyId::B8: return {rat(1, 30), rat(8, 15)};
        case FamilyId::B9: return {rat(7, 60), rat(8, 15)};
        case FamilyId::B10: return {rat(1, 6), rat(8, 15)};
        case FamilyId::B11: return {rat(11, 60), rat(8, 15)};
        case FamilyId::B12: return {rat(1, 5), rat(8, 15)};
        case FamilyId::B13: return {rat(7, 60), rat(11, 30)};
        case FamilyId::B14: return {rat(1, 5), rat(11, 30)};
        case FamilyId::B15: return {rat(1, 6), rat(4, 15)};
        case FamilyId::B16: return {rat(1, 5), rat(4, 15)};
        case FamilyId::B17: return {rat(11, 60), rat(7, 30)};
        case FamilyId::B18: return {rat(13, 60), rat(1, 6)};
    }
    throw parameter_error("unknown family");
}

std::vector<ClosedFormCheck> verify_closed_forms(FamilyId id, const FamilyParams& params) {
    std::vector<ClosedFormCheck> out;
    std::string label = std::string(family_name(id)) +
                        (params.to_string().empty() ? "" : "(" + params.to_string() + ")");
    OmegaClosedForm closed = omega_closed_form(id, params);

    auto check = [&](const std::string& name, const Rational& expected, const Rational& actual) {
        out.push_back({label + " " + name, format_rational(expected), format_rational(actual),
                       expected == actual});
    };

    if (id == FamilyId::A3 || id == FamilyId::B2) {
        // Without the user-classified term only the subgroup-independent pieces
        // are checkable: omega1 (A3) / omega2 (B2) via the dimension identity.
        long n1 = static_cast<long>(params.n1.value_or(0)), k = static_cast<long>(params.k.value_or(0));
        if (id == FamilyId::A3) {
            long n2 = static_cast<long>(params.n2.value_or(0));
            long N = n1 * n2 * k;
            Rational c1 = rat(n2 * k - 2, N - 2);
            Rational l_p = rat(n2 * k - 1, N - 2);
            Rational k_p = rat(k - 1, N - 2);
            Rational w1 = rat(1, 4) + l_p / 2 - k_p - c1 / 2;
            check("omega1", closed.omega1, w1);
        } else {
            long N = n1 * k;
            long dim_g = so_dim(N), dim_l = n1 * so_dim(k);
            Rational l_p = rat(k - 1, N - 2);
            Rational w2 = rat(dim_g + dim_l) / rat(dim_l) * l_p - 1;
            check("omega2", closed.omega2, w2);
        }
        return out;
    }

    Quadruple q = instantiate(id, params);
    auto [w1, w2] = omega(q);
    check("omega1", closed.omega1, w1);
    check("omega2", closed.omega2, w2);
    if (family_spec(id).symmetric_gl || (family_is_parametric(id) && params.n1 == 2))
        check("l_p(symmetric)", rat(1, 2), q.casimir.l_p);
    if (family_spec(id).identity_c1_applies)
        out.push_back({label + " c1-identity", "holds", holds_c1_identity(q) ? "holds" : "fails",
                       holds_c1_identity(q)});
    if (family_spec(id).identity_c2_applies)
        out.push_back({label + " c2-identity", "holds", holds_c2_identity(q) ? "holds" : "fails",
                       holds_c2_identity(q)});
    return out;
}

std::vector<FamilyParams> enumerate_params(FamilyId id, int max_n, int max_k) {
    std::vector<FamilyParams> out;
    auto three_n = [&](int k_min) {
        for (int n1 = 2; n1 <= max_n; ++n1)
            for (int n2 = 2; n2 <= max_n; ++n2)
                for (int n3 = 2; n3 <= max_n; ++n3)
                    for (int k = k_min; k <= max_k; ++k) {
                        FamilyParams p;
                        p.n1 = n1;
                        p.n2 = n2;
                        p.n3 = n3;
                        p.k = k;
                        out.push_back(p);
                    }
    };
    auto two_n = [&](int k_min) {
        for (int n1 = 2; n1 <= max_n; ++n1)
            for (int n2 = 2; n2 <= max_n; ++n2)
                for (int k = k_min; k <= max_k; ++k) {
                    FamilyParams p;
                    p.n1 = n1;
                    p.n2 = n2;
                    p.k = k;
                    out.push_back(p);
                }
    };
    switch (id) {
        case FamilyId::A1: three_n(1); break;
        case FamilyId::A2: three_n(2); break;
        case FamilyId::A3: two_n(3); break;
        case FamilyId::A4: three_n(1); break;
        case FamilyId::B1: two_n(3); break;
        case FamilyId::B2:
            for (int n = 2; n <= max_n; ++n)
                for (int k = 3; k <= max_k; ++k) {
                    FamilyParams p;
                    p.n1 = n;
                    p.k = k;
                    out.push_back(p);
                }
            break;
        case FamilyId::B3: two_n(1); break;
        default: out.push_back(FamilyParams{}); break;
    }
    return out;
}

std::vector<OmegaScanRow> scan_negative_omega(int max_n, int max_k) {
    std::vector<OmegaScanRow> out;
    for (const auto& m : kMeta) {
        for (const auto& params : enumerate_params(m.id, max_n, max_k)) {
            OmegaClosedForm w = omega_closed_form(m.id, params);
            bool w1_negative = w.omega1 < 0 && m.id != FamilyId::B2;  // B2 omega1 is a bound
            bool w2_negative = w.omega2 < 0 && !w.omega2_is_lower_bound;
            if (w1_negative || w2_negative)
                out.push_back({m.id, params, w.omega1, w.omega2});
        }
    }
    return out;
}

}  // namespace einq
