#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "totmatch/linalg.hpp"
#include "totmatch/rational.hpp"

using namespace totmatch;

TEST_CASE("parse and print round trip") {
    CHECK(to_string(parse_rational("2/6")) == "1/3");
    CHECK(to_string(parse_rational("-4/8")) == "-1/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(to_string(parse_rational("-0")) == "0");
    CHECK(parse_rational("10/5") == Rational(2));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("values stay reduced with positive denominator") {
    Rational q = make_rational(BigInt(-6), BigInt(-4));
    CHECK(numerator(q) == 3);
    CHECK(denominator(q) == 2);
    Rational sum = parse_rational("1/3") + parse_rational("1/6");
    CHECK(numerator(sum) == 1);
    CHECK(denominator(sum) == 2);
}

TEST_CASE("normalized_integral scales to coprime integers") {
    QVec v{parse_rational("1/2"), parse_rational("1/3"), Rational(0)};
    QVec n = normalized_integral(v);
    CHECK(n == QVec{Rational(3), Rational(2), Rational(0)});
    // Idempotent and invariant under positive scaling.
    CHECK(normalized_integral(n) == n);
    CHECK(normalized_integral(scaled(v, parse_rational("7/5"))) == n);
    QVec zero{Rational(0), Rational(0)};
    CHECK(normalized_integral(zero) == zero);
    QVec negative{Rational(-2), Rational(-4)};
    CHECK(normalized_integral(negative) == QVec{Rational(-1), Rational(-2)});
}
