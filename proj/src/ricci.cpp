#include "einq/ricci.hpp"

#include "einq/errors.hpp"

namespace einq {

RicciCoefficients ricci_coeffs(const Quadruple& q, const Rational& x, const Rational& y) {
    if (x <= 0 || y <= 0) throw domain_error("metric parameters must be positive");
    const CasimirConstants& c = q.casimir;
    RicciCoefficients r;
    r.r_n = q.c2 / 4 + c.h_n / 2 + (q.c1 - q.c2) / (4 * x * x) + (1 - q.c1) / (4 * y * y);
    r.r_u = c.k_u / 2 + q.c1 / 4 - (c.k_u - c.h_u) / (2 * x) + x * x * (1 - q.c1) / (4 * y * y);
    r.r_p = Rational(1, 4) + c.l_p / 2 - (c.k_p - c.h_p) / (2 * y) - x * (c.l_p - c.k_p) / (2 * y);
    return r;
}

RicciEnclosure ricci_coeffs(const Quadruple& q, const RationalInterval& x,
                            const RationalInterval& y) {
    if (!x.strictly_positive() || !y.strictly_positive())
        throw domain_error("metric parameter enclosures must be strictly positive");
    const CasimirConstants& c = q.casimir;
    const RationalInterval one{Rational(1), Rational(1)};
    RationalInterval x2 = square(x);
    RationalInterval y2 = square(y);
    RicciEnclosure r;
    r.r_n = RationalInterval(q.c2 / 4 + c.h_n / 2) +
            (q.c1 - q.c2) * (one / (Rational(4) * x2)) + (1 - q.c1) * (one / (Rational(4) * y2));
    r.r_u = RationalInterval(c.k_u / 2 + q.c1 / 4) -
            (c.k_u - c.h_u) * (one / (Rational(2) * x)) + (1 - q.c1) * (x2 / (Rational(4) * y2));
    r.r_p = RationalInterval(Rational(1, 4) + c.l_p / 2) -
            (c.k_p - c.h_p) * (one / (Rational(2) * y)) - (c.l_p - c.k_p) * (x / (Rational(2) * y));
    return r;
}

std::tuple<Rational, Rational, Rational> einstein_residuals(const Quadruple& q, const Rational& x,
                                                            const Rational& y,
                                                            const Rational& lambda) {
    RicciCoefficients r = ricci_coeffs(q, x, y);
    return {r.r_n - lambda, r.r_u - lambda * x, r.r_p - lambda * y};
}

std::tuple<RationalInterval, RationalInterval, RationalInterval> einstein_residuals(
    const Quadruple& q, const RationalInterval& x, const RationalInterval& y,
    const RationalInterval& lambda) {
    RicciEnclosure r = ricci_coeffs(q, x, y);
    return {r.r_n - lambda, r.r_u - lambda * x, r.r_p - lambda * y};
}

}  // namespace einq
