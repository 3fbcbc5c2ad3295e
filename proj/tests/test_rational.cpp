#include <catch2/catch_amalgamated.hpp>

#include "hyperline/rational.hpp"

using hyperline::Rational;
using hyperline::RationalOverflow;

TEST_CASE("rationals canonicalize on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).numerator() == 2);
    CHECK(Rational(6, 3).denominator() == 1);
    CHECK(Rational(-5, -10) == Rational(1, 2));
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK((a + b + b) == Rational(2, 3));
}

TEST_CASE("comparisons cross-multiply exactly") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(10, 5) == Rational(2));
    CHECK(hyperline::min(Rational(3, 4), Rational(2, 3)) == Rational(2, 3));
    CHECK(hyperline::max(Rational(3, 4), Rational(2, 3)) == Rational(3, 4));
}

TEST_CASE("parsing and printing round-trip") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("4/2").str() == "2");
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("floor_div counts grid steps") {
    CHECK(Rational(1).floor_div(Rational(1, 4)) == 4);
    CHECK(Rational(7, 8).floor_div(Rational(1, 4)) == 3);
    CHECK(Rational(0).floor_div(Rational(1, 4)) == 0);
}

TEST_CASE("overflow raises instead of silently wrapping") {
    Rational big(INT64_MAX);
    CHECK_THROWS_AS(big * big, RationalOverflow);
    CHECK_THROWS_AS(big + Rational(1), RationalOverflow);
    CHECK_NOTHROW(big - big);
}
