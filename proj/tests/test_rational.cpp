#include "graphjoin/rational.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using graphjoin::parse_rational;
using graphjoin::Rational;
using graphjoin::rational;
using graphjoin::to_string;

TEST(Rational, ParseAcceptsIntegersAndFractions) {
    EXPECT_EQ(parse_rational("3/4"), rational(3, 4));
    EXPECT_EQ(parse_rational("-2"), Rational(-2));
    EXPECT_EQ(parse_rational("+5"), Rational(5));
    EXPECT_EQ(parse_rational("0"), Rational(0));
    EXPECT_EQ(parse_rational("0/7"), Rational(0));
    EXPECT_EQ(parse_rational("-1/2"), rational(-1, 2));
}

TEST(Rational, ParseCanonicalizes) {
    EXPECT_EQ(parse_rational("6/8"), rational(3, 4));
    EXPECT_EQ(parse_rational("2/-4"), rational(-1, 2));
    EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
}

TEST(Rational, ParseRejectsMalformedInput) {
    gjtest::expect_error(graphjoin::ErrorCode::ParseError, [] { parse_rational(""); });
    gjtest::expect_error(graphjoin::ErrorCode::ParseError, [] { parse_rational("abc"); });
    gjtest::expect_error(graphjoin::ErrorCode::ParseError, [] { parse_rational("1.5"); });
    gjtest::expect_error(graphjoin::ErrorCode::ParseError, [] { parse_rational("1/2/3"); });
    gjtest::expect_error(graphjoin::ErrorCode::ParseError, [] { parse_rational("1/"); });
    gjtest::expect_error(graphjoin::ErrorCode::ParseError, [] { parse_rational("/2"); });
    gjtest::expect_error(graphjoin::ErrorCode::ParseError, [] { parse_rational("1/0"); });
    gjtest::expect_error(graphjoin::ErrorCode::ParseError, [] { parse_rational("1 /2"); });
}

TEST(Rational, HelperCanonicalizesAndRejectsZeroDenominator) {
    EXPECT_EQ(rational(2, 4), rational(1, 2));
    EXPECT_EQ(rational(-3, -6), rational(1, 2));
    EXPECT_EQ(rational(7), Rational(7));
    gjtest::expect_error(graphjoin::ErrorCode::ParseError, [] { rational(1, 0); });
}

TEST(Rational, ToStringRoundTripsThroughParse) {
    const Rational values[] = {rational(-3, 4), Rational(5), Rational(0), rational(22, 7)};
    for (const Rational& v : values) {
        EXPECT_EQ(parse_rational(to_string(v)), v);
    }
}

TEST(Rational, ExactArithmeticHasNoDrift) {
    Rational third = rational(1, 3);
    Rational sum(0);
    for (int i = 0; i < 3000; ++i) sum += third;
    EXPECT_EQ(sum, Rational(1000));
}
