#ifndef EINQ_QUADRUPLE_HPP
#define EINQ_QUADRUPLE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "einq/rational.hpp"

namespace einq {

// Dimensions of the chain h < k < l < g.
struct ChainDims {
    long dim_g = 0;
    long dim_l = 0;
    long dim_k = 0;
    long dim_h = 0;

    long dim_n() const { return dim_k - dim_h; }
    long dim_u() const { return dim_l - dim_k; }
    long dim_p() const { return dim_g - dim_l; }

    friend bool operator==(const ChainDims&, const ChainDims&) = default;
};

// Scalars of the six Casimir operators acting on the three isotropy summands.
struct CasimirConstants {
    Rational l_p, k_p, k_u, h_p, h_u, h_n;

    friend bool operator==(const CasimirConstants&, const CasimirConstants&) = default;
};

struct QuadrupleFlags {
    bool h_trivial = false;
    bool g_simple = true;
    bool k_ideal_in_l = false;

    friend bool operator==(const QuadrupleFlags&, const QuadrupleFlags&) = default;
};

// Structural constants of a chain of compact subgroups. Immutable after
// construction; construction validates the dimension chain and value ranges.
struct Quadruple {
    ChainDims dims;
    Rational c1;
    Rational c2;
    CasimirConstants casimir;
    QuadrupleFlags flags;
    std::string provenance;

    static Quadruple make(ChainDims dims, Rational c1, Rational c2, CasimirConstants casimir,
                          QuadrupleFlags flags, std::string provenance);

    bool uniform_fiber_constants() const {  // k_u = k_p and h_u = h_p
        return casimir.k_u == casimir.k_p && casimir.h_u == casimir.h_p;
    }
    bool equal_h_branch() const { return casimir.h_n == casimir.h_u; }
};

// A simple factor (or abelian summand via index 0) entering a Casimir trace.
struct TraceFactor {
    long dim;
    Rational killing_index;  // B_factor = index * B restricted; 0 for abelian
};

// Trace average (1/denominator_dim) * sum_i (1 - index_i) * dim_i, the scalar
// of a Casimir operator on a summand of the stated dimension. Abelian content
// may be folded in either as factors with index 0 or via abelian_dim.
Rational casimir_from_trace(const std::vector<TraceFactor>& factors, long abelian_dim,
                            long denominator_dim);

// Derives all six Casimir scalars from (dims, c1) assuming every relevant
// subalgebra rescales uniformly: l_p from inverting the c1 identity, then the
// dimension-ratio identities for k and (when c3 exists) h. Asserts the c2
// identity and throws inconsistency_error when it fails.
CasimirConstants casimir_from_indices(const ChainDims& dims, const Rational& c1,
                                      const Rational& c2, const std::optional<Rational>& c3,
                                      bool h_trivial = false);

// The two sign indicators that localize the extra Einstein metric.
std::pair<Rational, Rational> omega(const Quadruple& q);

// Exact identity checks, usable where the uniform-rescaling hypotheses hold.
bool holds_c1_identity(const Quadruple& q);  // c1 = 1 - (dim g/l / dim l) l_p
bool holds_c2_identity(const Quadruple& q);  // c2 = 1 - ((dim g - dim k)/dim l) l_p

// Flat JSON record with rationals as "p/q" strings; lossless round-trip.
std::string quadruple_to_json(const Quadruple& q);
Quadruple quadruple_from_json(const std::string& text);

}  // namespace einq

#endif
