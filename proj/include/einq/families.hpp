#ifndef EINQ_FAMILIES_HPP
#define EINQ_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "einq/quadruple.hpp"
#include "einq/rational.hpp"

namespace einq {

enum class FamilyId {
    A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11,
    B1, B2, B3, B4, B5, B6, B7, B8, B9, B10, B11, B12, B13, B14, B15, B16, B17, B18,
};

const char* family_name(FamilyId id);
std::optional<FamilyId> parse_family(const std::string& name);
bool family_is_parametric(FamilyId id);

// Named integer parameters; the subset used depends on the family.
// dim_h supplies the user-classified subalgebra of the direct-sum rows (A3),
// dim_k the analogous middle term of B2.
struct FamilyParams {
    std::optional<int> n1, n2, n3, k;
    std::optional<long> dim_h;  // A3 only
    std::optional<long> dim_k;  // B2 only

    std::string to_string() const;
};

// Closed-form row data: every structural constant as an exact rational.
struct FamilySpec {
    FamilyId id;
    bool symmetric_gl;          // the l < g pair is a symmetric one (forces l_p = 1/2)
    bool identity_c1_applies;   // c1 trace identity holds (fails for rows with centers
    bool identity_c2_applies;   //   or mixed-index middle terms: A1, A5, A6)
    std::string citation;       // catalog row locator
};

const FamilySpec& family_spec(FamilyId id);

// Validates the parameter box and builds the fully populated quadruple.
// Throws parameter_error naming the violated bound.
Quadruple instantiate(FamilyId id, const FamilyParams& params = {});

// Closed-form sign indicators, as stated per row. For A3 omega2 only a strict
// positive lower bound exists without the user-supplied subalgebra; the flag
// records that.
struct OmegaClosedForm {
    Rational omega1;
    Rational omega2;
    bool omega2_is_lower_bound = false;
};
OmegaClosedForm omega_closed_form(FamilyId id, const FamilyParams& params = {});

// Compares the generic omega(q) formulas against the per-row closed forms.
struct ClosedFormCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass;
};
std::vector<ClosedFormCheck> verify_closed_forms(FamilyId id, const FamilyParams& params = {});

// True iff sum(factor dims) < dim(n * so(k)) / 2, the admissibility bound for
// the direct-sum rows.
bool a3_b2_dimension_guard(const std::vector<long>& h_factor_dims, int n_copies, int k);

// Every parameter tuple of a family inside the bounds (n_i <= max_n, k <= max_k),
// in deterministic order. Fixed rows yield the single empty tuple.
std::vector<FamilyParams> enumerate_params(FamilyId id, int max_n, int max_k);

// One row of the negative-omega scan.
struct OmegaScanRow {
    FamilyId id;
    FamilyParams params;
    Rational omega1;
    Rational omega2;
};

// All instances within bounds where omega1 < 0 or omega2 < 0. For A3/B2 the
// positive closed form / lower bound decides without instantiation.
std::vector<OmegaScanRow> scan_negative_omega(int max_n, int max_k);

}  // namespace einq

#endif
