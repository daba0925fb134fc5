#include "famcake/rational.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using famcake::BigInt;
using famcake::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(60, 96) == Rational(5, 8));
    CHECK(Rational(-4, 8) == Rational(-1, 2));
    CHECK(Rational(4, -8) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);

    // Repeated summation of 1/3 never drifts.
    Rational acc(0);
    for (int i = 0; i < 3000; ++i) acc += Rational(1, 3);
    CHECK(acc == Rational(1000));
}

TEST_CASE("comparisons cross-multiply") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(7, 5) > Rational(4, 3));
}

TEST_CASE("no overflow at large denominators") {
    // Denominators beyond 64-bit range, as simplex pivots produce.
    Rational x(1);
    for (long long p : {1000003LL, 998244353LL, 1000000007LL, 715827883LL}) {
        x = x / Rational(p) + Rational(1, p);
    }
    CHECK(x.den() > BigInt("18446744073709551615")); // > 2^64 - 1
    Rational y = x * x / (x * x);
    CHECK(y == Rational(1));
}

TEST_CASE("parse and format round-trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("60/96").str() == "5/8");
    CHECK(Rational(0).str() == "0/1");
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK(Rational::parse(Rational(-22, 7).str()) == Rational(-22, 7));

    std::ostringstream os;
    os << Rational(1, 2);
    CHECK(os.str() == "1/2");
}

TEST_CASE("floor and ceil handle signs") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(4).ceil() == 4);
    CHECK(famcake::ceil_to_ll(Rational(16, 3)) == 6);
}

TEST_CASE("rationals order as map keys") {
    std::set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(1, 3)};
    CHECK(s.size() == 2);
}
