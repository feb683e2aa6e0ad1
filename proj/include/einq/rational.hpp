#ifndef EINQ_RATIONAL_HPP
#define EINQ_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace einq {

// All arithmetic in this library is exact. Rational is the only scalar type;
// doubles appear solely in test oracles and benchmark glue.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q", "p", or integer-mantissa scientific notation like "1e-12".
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is 1). Lossless round-trip.
std::string format_rational(const Rational& value);

int sign(const Rational& value);
Rational abs(const Rational& value);

// Closed interval with exact rational endpoints, lo <= hi.
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval() = default;
    RationalInterval(Rational point) : lo(point), hi(std::move(point)) {}
    RationalInterval(Rational l, Rational h);

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& value) const { return lo <= value && value <= hi; }
    bool strictly_positive() const { return lo > 0; }

    // Smallest magnitude bound: sup |t| over t in the interval.
    Rational mag() const;
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator+(const RationalInterval& a, const Rational& b);
RationalInterval operator-(const Rational& a, const RationalInterval& b);
RationalInterval operator*(const Rational& a, const RationalInterval& b);

// Requires 0 outside b.
RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);

RationalInterval square(const RationalInterval& a);
RationalInterval hull(const RationalInterval& a, const RationalInterval& b);
bool overlap(const RationalInterval& a, const RationalInterval& b);

// Enclosure of sqrt(value) with width <= max_width; value must be >= 0.
// If value is a perfect rational square the enclosure is the exact point.
RationalInterval sqrt_enclosure(const Rational& value, const Rational& max_width);

// Enclosure of sqrt over a nonnegative interval.
RationalInterval sqrt_enclosure(const RationalInterval& value, const Rational& max_width);

// Exact square root when one exists.
std::optional<Rational> exact_sqrt(const Rational& value);

}  // namespace einq

#endif
