#ifndef EINQ_RICCI_HPP
#define EINQ_RICCI_HPP

#include <tuple>

#include "einq/quadruple.hpp"
#include "einq/rational.hpp"

namespace einq {

// Ric = r_n * B on the n-summand, r_u * B on u, r_p * B on p. Off-diagonal
// blocks vanish identically, so the Einstein system is exactly the three
// scalar comparisons r_n = lambda, r_u = lambda x, r_p = lambda y.
struct RicciCoefficients {
    Rational r_n, r_u, r_p;

    friend bool operator==(const RicciCoefficients&, const RicciCoefficients&) = default;
};

struct RicciEnclosure {
    RationalInterval r_n, r_u, r_p;
};

// Exact Ricci coefficients of the metric with parameters (x, y); x, y > 0.
RicciCoefficients ricci_coeffs(const Quadruple& q, const Rational& x, const Rational& y);

// Interval version for certification at algebraic points; x, y must be
// strictly positive intervals.
RicciEnclosure ricci_coeffs(const Quadruple& q, const RationalInterval& x,
                            const RationalInterval& y);

// (r_n - lambda, r_u - lambda x, r_p - lambda y); all zero exactly when the
// metric is Einstein with constant lambda.
std::tuple<Rational, Rational, Rational> einstein_residuals(const Quadruple& q, const Rational& x,
                                                            const Rational& y,
                                                            const Rational& lambda);

std::tuple<RationalInterval, RationalInterval, RationalInterval> einstein_residuals(
    const Quadruple& q, const RationalInterval& x, const RationalInterval& y,
    const RationalInterval& lambda);

}  // namespace einq

#endif
