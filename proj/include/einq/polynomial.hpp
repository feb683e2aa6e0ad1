#ifndef EINQ_POLYNOMIAL_HPP
#define EINQ_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "einq/rational.hpp"

namespace einq {

// Dense univariate polynomial over Q, constant term first. Canonical form
// strips trailing zeros; the zero polynomial has an empty coefficient list.
class RationalPolynomial {
  public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);
    static RationalPolynomial constant(Rational c);
    // (x - root)
    static RationalPolynomial linear_root(const Rational& root);
    static RationalPolynomial x();

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coefficient(int power) const;
    const Rational& leading_coefficient() const;

    Rational operator()(const Rational& x) const;
    RationalInterval operator()(const RationalInterval& x) const;

    RationalPolynomial derivative() const;
    RationalPolynomial monic() const;

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p);
    friend RationalPolynomial operator-(const RationalPolynomial& a);
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b);

    // Exact Euclidean division; throws on zero divisor.
    static void divmod(const RationalPolynomial& num, const RationalPolynomial& den,
                       RationalPolynomial& quot, RationalPolynomial& rem);

    // Monic gcd.
    static RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

    std::string to_string(const std::string& var = "x") const;

  private:
    std::vector<Rational> coeffs_;
    void normalize();
};

// Certified enclosure of one real root. The polynomial has exactly
// `multiplicity` roots (counted with multiplicity) in the open interval
// (lo, hi), and the endpoints are not roots. `exact_root` is set when the
// root is rational.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    int multiplicity = 1;
    std::optional<Rational> exact_root;
};

// Open isolation domain; unset endpoints mean -inf / +inf.
struct RootDomain {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    static RootDomain positive() { return {Rational(0), std::nullopt}; }
    static RootDomain all() { return {std::nullopt, std::nullopt}; }
};

// Yun square-free decomposition: p = lc * prod_i factors[i].poly^factors[i].multiplicity
// with the factors monic, square-free, pairwise coprime.
struct SquareFreeFactor {
    RationalPolynomial poly;
    int multiplicity;
};
std::vector<SquareFreeFactor> square_free_decomposition(const RationalPolynomial& p);

// Sturm sequence of a (square-free not required) polynomial.
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);

// Number of distinct real roots of p in the half-open interval (a, b].
int sturm_root_count(const std::vector<RationalPolynomial>& seq, const Rational& a,
                     const Rational& b);

// Pairwise-disjoint certified intervals covering exactly the real roots of p in
// the domain, sorted by position. Rational roots come out exact. Throws on the
// zero polynomial.
std::vector<IsolatingInterval> sturm_isolate(const RationalPolynomial& p, const RootDomain& domain);

// Shrinks the interval around the same root until hi - lo <= width.
// Bisection with exact sign evaluation on the relevant square-free factor.
IsolatingInterval refine(const RationalPolynomial& p, const IsolatingInterval& interval,
                         const Rational& width);

// Cauchy root bound: all real roots lie in (-bound, bound).
Rational cauchy_root_bound(const RationalPolynomial& p);

}  // namespace einq

#endif
