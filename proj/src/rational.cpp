#include "einq/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace einq {

Rational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        // integer mantissa only, e.g. "1e-12" -> 1/10^12
        std::string mant = s.substr(0, epos);
        std::string expo = s.substr(epos + 1);
        if (mant.empty() || expo.empty()) throw std::invalid_argument("bad scientific literal: " + text);
        long e = std::stol(expo);
        Rational m;
        if (mant.find('/') != std::string::npos) throw std::invalid_argument("bad scientific literal: " + text);
        if (m.set_str(mant, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
        Rational p10(1);
        mpz_ui_pow_ui(mpq_numref(p10.get_mpq_t()), 10u, static_cast<unsigned long>(e < 0 ? -e : e));
        if (e < 0) {
            mpq_inv(p10.get_mpq_t(), p10.get_mpq_t());
        }
        m.canonicalize();
        return m * p10;
    }

    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    return value.get_str();
}

int sign(const Rational& value) { return mpq_sgn(value.get_mpq_t()); }

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

RationalInterval::RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
}

Rational RationalInterval::mag() const { return std::max(abs(lo), abs(hi)); }

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

RationalInterval operator+(const RationalInterval& a, const Rational& b) {
    return {a.lo + b, a.hi + b};
}

RationalInterval operator-(const Rational& a, const RationalInterval& b) {
    return {a - b.hi, a - b.lo};
}

RationalInterval operator*(const Rational& a, const RationalInterval& b) {
    if (a >= 0) return {a * b.lo, a * b.hi};
    return {a * b.hi, a * b.lo};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
    if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("interval division through zero");
    RationalInterval inv{Rational(1) / b.hi, Rational(1) / b.lo};
    return a * inv;
}

RationalInterval square(const RationalInterval& a) {
    if (a.lo >= 0) return {a.lo * a.lo, a.hi * a.hi};
    if (a.hi <= 0) return {a.hi * a.hi, a.lo * a.lo};
    return {Rational(0), std::max(a.lo * a.lo, a.hi * a.hi)};
}

RationalInterval hull(const RationalInterval& a, const RationalInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

bool overlap(const RationalInterval& a, const RationalInterval& b) {
    return a.lo <= b.hi && b.lo <= a.hi;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
    if (value < 0) return std::nullopt;
    const mpz_class num(mpq_numref(value.get_mpq_t()));
    const mpz_class den(mpq_denref(value.get_mpq_t()));
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        Rational r(rn, rd);
        r.canonicalize();
        return r;
    }
    return std::nullopt;
}

RationalInterval sqrt_enclosure(const Rational& value, const Rational& max_width) {
    if (value < 0) throw std::domain_error("sqrt of negative rational");
    if (value == 0) return {Rational(0), Rational(0)};
    if (auto exact = exact_sqrt(value)) return {*exact, *exact};
    if (max_width <= 0) throw std::invalid_argument("nonpositive sqrt enclosure width");

    // sqrt(n/d) = sqrt(n*d)/d. Scale by 4^k so the floor sqrt has width 1/(d*2^k).
    const mpz_class num(mpq_numref(value.get_mpq_t()));
    const mpz_class den(mpq_denref(value.get_mpq_t()));
    // need d*2^k >= 1/max_width
    Rational need = 1 / max_width;
    mpz_class scale = den;
    unsigned long k = 0;
    while (Rational(scale) < need) {
        scale *= 2;
        ++k;
    }
    mpz_class shifted = num * den;
    mpz_mul_2exp(shifted.get_mpz_t(), shifted.get_mpz_t(), 2 * k);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), shifted.get_mpz_t());
    Rational lo(root, scale);
    lo.canonicalize();
    Rational hi(root + 1, scale);
    hi.canonicalize();
    return {lo, hi};
}

RationalInterval sqrt_enclosure(const RationalInterval& value, const Rational& max_width) {
    if (value.lo < 0) throw std::domain_error("sqrt of interval with negative part");
    RationalInterval lo_enc = sqrt_enclosure(value.lo, max_width);
    RationalInterval hi_enc = sqrt_enclosure(value.hi, max_width);
    return {lo_enc.lo, hi_enc.hi};
}

}  // namespace einq
