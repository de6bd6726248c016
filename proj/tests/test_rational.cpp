#include <random>

#include "doctest.h"
#include "recgrow/errors.hpp"
#include "recgrow/rational.hpp"

using namespace recgrow;

TEST_CASE("parse_rational accepts integers and p/q, canonicalised") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational("+3") == 3);
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
}

TEST_CASE("parse_rational rejects malformed literals") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
}

TEST_CASE("parse_decimal is exact") {
    CHECK(parse_decimal("1.25") == Rational(5, 4));
    CHECK(parse_decimal("-0.5") == Rational(-1, 2));
    CHECK(parse_decimal("42") == 42);
    CHECK_THROWS_AS(parse_decimal("1.2.3"), ParseError);
}

TEST_CASE("floor, ceil and floor_log2") {
    CHECK(floor(Rational(7, 2)) == 3);
    CHECK(ceil(Rational(7, 2)) == 4);
    CHECK(floor(Rational(-7, 2)) == -4);
    CHECK(floor_log2(Rational(1)) == 0);
    CHECK(floor_log2(Rational(3, 4)) == -1);
    CHECK(floor_log2(Rational(1, 2)) == -1);
    CHECK(floor_log2(Rational(1023)) == 9);
    CHECK(floor_log2(Rational(1024)) == 10);
    CHECK(floor_log2(Rational(1, 3)) == -2);
}

TEST_CASE("pow and ldexp") {
    CHECK(pow(Rational(5, 4), 3) == Rational(125, 64));
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(pow(Integer(2), 10) == 1024);
    CHECK(ldexp(Integer(3), -2) == Rational(3, 4));
    CHECK(ldexp(Integer(3), 4) == 48);
}

TEST_CASE("to_decimal rounds in the requested direction") {
    CHECK(to_decimal(Rational(1, 3), 4, Rounding::Down) == "0.3333");
    CHECK(to_decimal(Rational(1, 3), 4, Rounding::Up) == "0.3334");
    CHECK(to_decimal(Rational(-1, 3), 2, Rounding::Down) == "-0.34");
    CHECK(to_decimal(Rational(5, 2), 0, Rounding::Up) == "3");
    CHECK(to_decimal(Rational(1, 100), 3, Rounding::Down) == "0.010");
}

TEST_CASE("property: to_string then parse_rational is the identity") {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<long> num(-1'000'000'000L, 1'000'000'000L);
    std::uniform_int_distribution<long> den(1, 1'000'000'000L);
    for (int i = 0; i < 500; ++i) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        Rational factor(num(rng) | 1, 7);
        factor.canonicalize();
        x *= pow(factor, 5);
        CHECK(parse_rational(to_string(x)) == x);
    }
}
