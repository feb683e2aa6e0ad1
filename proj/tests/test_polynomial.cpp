#include <doctest.h>

#include <random>

#include "einq/polynomial.hpp"

using namespace einq;

namespace {

RationalPolynomial poly(std::vector<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return RationalPolynomial(std::move(c));
}

RationalPolynomial radical(const RationalPolynomial& p) {
    RationalPolynomial g = RationalPolynomial::gcd(p, p.derivative());
    RationalPolynomial q, r;
    RationalPolynomial::divmod(p, g, q, r);
    return q;
}

// Independent root-counting oracle: recursive monotone-piece bisection.
// Isolates the critical points of f (recursively, on the radical of f'),
// shrinks each critical enclosure until interval evaluation certifies f != 0
// on it, and then counts sign changes of f across the remaining monotone
// pieces. No Sturm sequences anywhere.
std::vector<std::pair<Rational, Rational>> oracle_isolate(const RationalPolynomial& f_in,
                                                          const Rational& lo, const Rational& hi) {
    RationalPolynomial f = radical(f_in);
    std::vector<std::pair<Rational, Rational>> out;
    if (f.degree() <= 0) return out;
    if (f.degree() == 1) {
        Rational root = -f.coefficient(0) / f.coefficient(1);
        if (lo < root && root < hi) {
            Rational a = (lo + root) / 2, b = (root + hi) / 2;
            out.emplace_back(a, b);
        }
        return out;
    }

    auto crit = oracle_isolate(f.derivative(), lo, hi);
    RationalPolynomial df = radical(f.derivative());
    // Shrink each critical enclosure until f is certified nonzero on it.
    for (auto& [a, b] : crit) {
        Rational fa = df(a);
        while (true) {
            RationalInterval val = f(RationalInterval{a, b});
            if (val.lo > 0 || val.hi < 0) break;
            Rational mid = (a + b) / 2;
            Rational fm = df(mid);
            if (fm == 0) {
                // rational critical point; f(mid) != 0 since f is square-free
                Rational w = (b - a) / 4;
                a = mid - w;
                b = mid + w;
                Rational scale(1, 2);
                while (true) {
                    RationalInterval v2 = f(RationalInterval{a, b});
                    if (v2.lo > 0 || v2.hi < 0) break;
                    a = mid - w * scale;
                    b = mid + w * scale;
                    scale /= 2;
                }
                break;
            }
            if (sign(fm) == sign(fa)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
    }

    // Breakpoints bracketing the monotone pieces.
    std::vector<Rational> points{lo};
    for (const auto& [a, b] : crit) {
        points.push_back(a);
        points.push_back(b);
    }
    points.push_back(hi);
    std::sort(points.begin(), points.end());
    for (size_t i = 0; i + 1 < points.size(); ++i) {
        const Rational& a = points[i];
        const Rational& b = points[i + 1];
        if (a >= b) continue;
        // Skip gaps inside a critical enclosure (f certified nonzero there).
        bool inside = false;
        for (const auto& [ca, cb] : crit)
            if (ca <= a && b <= cb) inside = true;
        if (inside) continue;
        Rational fa = f(a), fb = f(b);
        if (fa == 0 || fb == 0) {
            // breakpoint hits a root: count it via a tiny bracket
            Rational root = fa == 0 ? a : b;
            if (root > lo && root < hi) out.emplace_back(root, root);
            continue;
        }
        if (sign(fa) != sign(fb)) out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int oracle_count(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
    return static_cast<int>(oracle_isolate(p, lo, hi).size());
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    RationalPolynomial a = poly({1, 2, 3});  // 3x^2 + 2x + 1
    RationalPolynomial b = poly({-1, 1});    // x - 1
    CHECK((a * b).degree() == 3);
    CHECK((a + b)(rat(2)) == a(rat(2)) + b(rat(2)));
    CHECK((a - a).is_zero());
    CHECK(a.derivative() == poly({2, 6}));
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(poly({5}).degree() == 0);

    RationalPolynomial q, r;
    RationalPolynomial::divmod(a * b + poly({7}), a, q, r);
    CHECK(q == b);
    CHECK(r == poly({7}));
}

TEST_CASE("evaluation is a ring homomorphism on random data") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> coeff(-100, 100);
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<long> den(1, 20);
    for (int trial = 0; trial < 200; ++trial) {
        auto make = [&] {
            std::vector<Rational> c;
            int d = deg(rng);
            for (int i = 0; i <= d; ++i) c.push_back(rat(coeff(rng), den(rng)));
            return RationalPolynomial(std::move(c));
        };
        RationalPolynomial p = make(), q = make();
        Rational x = rat(coeff(rng), den(rng));
        CHECK((p * q)(x) == p(x) * q(x));
        CHECK((p + q)(x) == p(x) + q(x));
    }
}

TEST_CASE("square-free decomposition recovers multiplicities") {
    // (x-1)^2 (x+3) (x^2+1)
    RationalPolynomial p =
        poly({-1, 1}) * poly({-1, 1}) * poly({3, 1}) * poly({1, 0, 1});
    auto factors = square_free_decomposition(p);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].multiplicity == 1);
    CHECK(factors[0].poly.degree() == 3);  // (x+3)(x^2+1)
    CHECK(factors[1].multiplicity == 2);
    CHECK(factors[1].poly == poly({-1, 1}).monic());
}

TEST_CASE("sturm isolation: canonical fixtures") {
    SUBCASE("x^2 - 2 on (0, inf)") {
        auto roots = sturm_isolate(poly({-2, 0, 1}), RootDomain::positive());
        REQUIRE(roots.size() == 1);
        CHECK_FALSE(roots[0].exact_root.has_value());
        auto tight = refine(poly({-2, 0, 1}), roots[0], rat(1, 1000000000000L));
        CHECK(tight.hi - tight.lo <= rat(1, 1000000000000L));
        CHECK(tight.lo * tight.lo < 2);
        CHECK(tight.hi * tight.hi > 2);
    }
    SUBCASE("(x-1)^2 on (0, inf): exact root, multiplicity 2") {
        RationalPolynomial p = poly({-1, 1}) * poly({-1, 1});
        auto roots = sturm_isolate(p, RootDomain::positive());
        REQUIRE(roots.size() == 1);
        REQUIRE(roots[0].exact_root.has_value());
        CHECK(*roots[0].exact_root == 1);
        CHECK(roots[0].multiplicity == 2);
        // exact rational root: refine returns it unchanged
        auto same = refine(p, roots[0], rat(1, 1024));
        CHECK(*same.exact_root == 1);
    }
    SUBCASE("refine to width 1/1024") {
        auto roots = sturm_isolate(poly({-2, 0, 1}), RootDomain::positive());
        auto tight = refine(poly({-2, 0, 1}), roots[0], rat(1, 1024));
        CHECK(tight.hi - tight.lo <= rat(1, 1024));
    }
    SUBCASE("rational roots come out exact") {
        // roots 1/3, -5/2, 4
        RationalPolynomial p = poly({0, 3}) * poly({5, 2}) * poly({-4, 1});
        p = p + poly({-1});  // no rational roots anymore
        auto noexact = sturm_isolate(p, RootDomain::all());
        for (const auto& r : noexact) CHECK_FALSE(r.exact_root.has_value());
        RationalPolynomial q = RationalPolynomial({rat(-1, 3), rat(1)}) *
                               RationalPolynomial({rat(5, 2), rat(1)}) * poly({-4, 1});
        auto exact = sturm_isolate(q, RootDomain::all());
        REQUIRE(exact.size() == 3);
        for (const auto& r : exact) CHECK(r.exact_root.has_value());
        CHECK(*exact[0].exact_root == rat(-5, 2));
        CHECK(*exact[1].exact_root == rat(1, 3));
        CHECK(*exact[2].exact_root == 4);
    }
}

TEST_CASE("midpoint residual decreases monotonically under refinement") {
    RationalPolynomial p = poly({-7, 0, 0, 1});  // x^3 - 7
    auto roots = sturm_isolate(p, RootDomain::positive());
    REQUIRE(roots.size() == 1);
    IsolatingInterval iso = roots[0];
    Rational prev = abs(p((iso.lo + iso.hi) / 2));
    for (int step = 0; step < 6; ++step) {
        iso = refine(p, iso, (iso.hi - iso.lo) / 16);
        Rational now = abs(p((iso.lo + iso.hi) / 2));
        CHECK(now <= prev);
        prev = now;
    }
}

TEST_CASE("sturm root counts match the bisection oracle on random polynomials") {
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<long> coeff(-100, 100);
    std::uniform_int_distribution<int> deg(1, 8);
    std::uniform_int_distribution<int> mode(0, 9);
    int done = 0;
    while (done < 500) {
        std::vector<Rational> c;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
        RationalPolynomial p{std::move(c)};
        if (p.degree() < 1) continue;
        if (mode(rng) == 0) p = p * p;  // exercise multiplicity handling
        Rational bound = cauchy_root_bound(p);
        if (p(-bound) == 0 || p(bound) == 0) continue;

        auto isolated = sturm_isolate(p, RootDomain{-bound, bound});
        int expected = oracle_count(p, -bound, bound);
        CAPTURE(p.to_string());
        CHECK(static_cast<int>(isolated.size()) == expected);
        // Disjointness and certification of each interval.
        for (size_t i = 0; i + 1 < isolated.size(); ++i)
            CHECK(isolated[i].hi <= isolated[i + 1].lo);
        for (const auto& iso : isolated) {
            CHECK(iso.lo < iso.hi);
            CHECK(p(iso.lo) != 0);
            CHECK(p(iso.hi) != 0);
            if (iso.exact_root) {
                CHECK(p(*iso.exact_root) == 0);
                CHECK(iso.lo < *iso.exact_root);
                CHECK(*iso.exact_root < iso.hi);
            }
        }
        ++done;
    }
}

TEST_CASE("domain restriction excludes outside roots") {
    // roots at -2, 1/2, 3
    RationalPolynomial p = poly({2, 1}) * RationalPolynomial({rat(-1, 2), rat(1)}) * poly({-3, 1});
    auto pos = sturm_isolate(p, RootDomain::positive());
    REQUIRE(pos.size() == 2);
    CHECK(*pos[0].exact_root == rat(1, 2));
    CHECK(*pos[1].exact_root == 3);
    auto window = sturm_isolate(p, RootDomain{rat(0), rat(2)});
    REQUIRE(window.size() == 1);
    CHECK(*window[0].exact_root == rat(1, 2));
}

TEST_CASE("zero polynomial is rejected") {
    CHECK_THROWS(sturm_isolate(RationalPolynomial{}, RootDomain::all()));
}
