#include <doctest.h>

#include <random>

#include "einq/rational.hpp"

using namespace einq;

TEST_CASE("parse and format round-trip") {
    CHECK(parse_rational("2/3") == rat(2, 3));
    CHECK(parse_rational("-7") == rat(-7));
    CHECK(parse_rational("4/6") == rat(2, 3));  // canonicalized
    CHECK(parse_rational("1e-12") == rat(1, 1000000000000L));
    CHECK(parse_rational("25e-2") == rat(1, 4));
    CHECK(format_rational(rat(-5, 10)) == "-1/2");
    CHECK(format_rational(rat(4)) == "4");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("interval arithmetic basics") {
    RationalInterval a{rat(1, 2), rat(3, 4)};
    RationalInterval b{rat(-1, 3), rat(1, 5)};
    RationalInterval sum = a + b;
    CHECK(sum.lo == rat(1, 6));
    CHECK(sum.hi == rat(19, 20));
    RationalInterval prod = a * b;
    CHECK(prod.lo == rat(-1, 4));
    CHECK(prod.hi == rat(3, 20));
    CHECK(square(RationalInterval{rat(-2), rat(1)}).lo == 0);
    CHECK(square(RationalInterval{rat(-2), rat(1)}).hi == 4);
    CHECK_THROWS(a / b);  // zero inside divisor
    RationalInterval inv = a / RationalInterval{rat(2), rat(4)};
    CHECK(inv.lo == rat(1, 8));
    CHECK(inv.hi == rat(3, 8));
    CHECK(overlap(a, RationalInterval{rat(7, 10), rat(1)}));
    CHECK_FALSE(overlap(a, RationalInterval{rat(4, 5), rat(1)}));
}

TEST_CASE("sqrt enclosures") {
    // perfect squares come out exact
    RationalInterval exact = sqrt_enclosure(rat(9, 4), rat(1, 1000));
    CHECK(exact.is_point());
    CHECK(exact.lo == rat(3, 2));
    CHECK(exact_sqrt(rat(49, 81)) == rat(7, 9));
    CHECK_FALSE(exact_sqrt(rat(2)).has_value());

    std::mt19937 rng(42);
    std::uniform_int_distribution<long> num(1, 5000), den(1, 500);
    for (int i = 0; i < 200; ++i) {
        Rational v = rat(num(rng), den(rng));
        Rational width = rat(1, 1 + num(rng));
        RationalInterval enc = sqrt_enclosure(v, width);
        CHECK(enc.width() <= width);
        CHECK(enc.lo * enc.lo <= v);
        CHECK(enc.hi * enc.hi >= v);
        CHECK(enc.lo >= 0);
    }
    CHECK_THROWS(sqrt_enclosure(rat(-1), rat(1, 2)));
}
