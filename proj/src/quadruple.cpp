#include "einq/quadruple.hpp"

#include <nlohmann/json.hpp>

#include "einq/errors.hpp"

namespace einq {

using ordered_json = nlohmann::ordered_json;

Quadruple Quadruple::make(ChainDims dims, Rational c1, Rational c2, CasimirConstants casimir,
                          QuadrupleFlags flags, std::string provenance) {
    if (!(0 <= dims.dim_h && dims.dim_h < dims.dim_k && dims.dim_k < dims.dim_l &&
          dims.dim_l < dims.dim_g))
        throw inconsistency_error("dimension chain must satisfy dim_h < dim_k < dim_l < dim_g",
                                  std::to_string(dims.dim_h), std::to_string(dims.dim_g));
    // All three summands of the metric must be present.
    if (dims.dim_n() <= 0 || dims.dim_u() <= 0 || dims.dim_p() <= 0)
        throw inconsistency_error("degenerate fiber: dim_n, dim_u, dim_p must all be positive",
                                  std::to_string(dims.dim_n()), std::to_string(dims.dim_p()));
    if (!(0 < c2 && c2 < c1 && c1 < 1))
        throw inconsistency_error("killing indices must satisfy 0 < c2 < c1 < 1",
                                  format_rational(c2), format_rational(c1));
    for (const Rational* v : {&casimir.l_p, &casimir.k_p, &casimir.k_u, &casimir.h_p, &casimir.h_u,
                              &casimir.h_n})
        if (*v < 0 || *v >= 1)
            throw inconsistency_error("casimir scalars must lie in [0, 1)", format_rational(*v),
                                      "1");
    if (flags.h_trivial &&
        (casimir.h_p != 0 || casimir.h_u != 0 || casimir.h_n != 0 || dims.dim_h != 0))
        throw inconsistency_error("trivial H forces h_n = h_u = h_p = 0 and dim_h = 0",
                                  format_rational(casimir.h_p), "0");
    return Quadruple{std::move(dims), std::move(c1),     std::move(c2),
                     std::move(casimir), std::move(flags), std::move(provenance)};
}

Rational casimir_from_trace(const std::vector<TraceFactor>& factors, long abelian_dim,
                            long denominator_dim) {
    if (denominator_dim <= 0)
        throw inconsistency_error("trace denominator must be positive",
                                  std::to_string(denominator_dim), "0");
    Rational sum(abelian_dim);
    for (const auto& f : factors) sum += (1 - f.killing_index) * Rational(f.dim);
    return sum / Rational(denominator_dim);
}

CasimirConstants casimir_from_indices(const ChainDims& dims, const Rational& c1,
                                      const Rational& c2, const std::optional<Rational>& c3,
                                      bool h_trivial) {
    CasimirConstants cc;
    cc.l_p = Rational(dims.dim_l) / Rational(dims.dim_p()) * (1 - c1);
    cc.k_p = Rational(dims.dim_k) / Rational(dims.dim_l) * cc.l_p;
    cc.k_u = cc.k_p;
    if (h_trivial) {
        cc.h_p = cc.h_u = cc.h_n = Rational(0);
    } else if (c3) {
        cc.h_p = Rational(dims.dim_h) / Rational(dims.dim_l) * cc.l_p;
        cc.h_u = cc.h_n = cc.h_p;
    } else {
        throw inconsistency_error(
            "h-scalars need either a rescaling constant c3 or a trivial H; supply them from "
            "family data otherwise",
            "c3", "absent");
    }
    Rational c2_check = 1 - Rational(dims.dim_g - dims.dim_k) / Rational(dims.dim_l) * cc.l_p;
    if (c2_check != c2)
        throw inconsistency_error("c2 does not match the trace identity", format_rational(c2),
                                  format_rational(c2_check));
    return cc;
}

std::pair<Rational, Rational> omega(const Quadruple& q) {
    const CasimirConstants& c = q.casimir;
    Rational w1 = Rational(1, 4) + c.l_p / 2 - c.k_p - q.c1 / 2;
    Rational w2 = 2 * c.k_p + q.c1 - 2 * q.c2 - 4 * c.h_p;
    return {w1, w2};
}

bool holds_c1_identity(const Quadruple& q) {
    return q.c1 == 1 - Rational(q.dims.dim_p()) / Rational(q.dims.dim_l) * q.casimir.l_p;
}

bool holds_c2_identity(const Quadruple& q) {
    return q.c2 ==
           1 - Rational(q.dims.dim_g - q.dims.dim_k) / Rational(q.dims.dim_l) * q.casimir.l_p;
}

std::string quadruple_to_json(const Quadruple& q) {
    ordered_json j;
    j["dims"] = {{"dim_g", q.dims.dim_g},
                 {"dim_l", q.dims.dim_l},
                 {"dim_k", q.dims.dim_k},
                 {"dim_h", q.dims.dim_h}};
    j["c1"] = format_rational(q.c1);
    j["c2"] = format_rational(q.c2);
    j["casimir"] = {{"l_p", format_rational(q.casimir.l_p)},
                    {"k_p", format_rational(q.casimir.k_p)},
                    {"k_u", format_rational(q.casimir.k_u)},
                    {"h_p", format_rational(q.casimir.h_p)},
                    {"h_u", format_rational(q.casimir.h_u)},
                    {"h_n", format_rational(q.casimir.h_n)}};
    j["flags"] = {{"h_trivial", q.flags.h_trivial},
                  {"g_simple", q.flags.g_simple},
                  {"k_ideal_in_l", q.flags.k_ideal_in_l}};
    j["provenance"] = q.provenance;
    return j.dump();
}

Quadruple quadruple_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.contains("quadruple")) j = j.at("quadruple");  // accept a whole report
    ChainDims dims;
    dims.dim_g = j.at("dims").at("dim_g").get<long>();
    dims.dim_l = j.at("dims").at("dim_l").get<long>();
    dims.dim_k = j.at("dims").at("dim_k").get<long>();
    dims.dim_h = j.at("dims").at("dim_h").get<long>();
    CasimirConstants cc;
    const auto& cas = j.at("casimir");
    cc.l_p = parse_rational(cas.at("l_p").get<std::string>());
    cc.k_p = parse_rational(cas.at("k_p").get<std::string>());
    cc.k_u = parse_rational(cas.at("k_u").get<std::string>());
    cc.h_p = parse_rational(cas.at("h_p").get<std::string>());
    cc.h_u = parse_rational(cas.at("h_u").get<std::string>());
    cc.h_n = parse_rational(cas.at("h_n").get<std::string>());
    QuadrupleFlags flags;
    flags.h_trivial = j.at("flags").at("h_trivial").get<bool>();
    flags.g_simple = j.at("flags").at("g_simple").get<bool>();
    flags.k_ideal_in_l = j.at("flags").at("k_ideal_in_l").get<bool>();
    return Quadruple::make(dims, parse_rational(j.at("c1").get<std::string>()),
                           parse_rational(j.at("c2").get<std::string>()), cc, flags,
                           j.value("provenance", std::string{}));
}

}  // namespace einq
