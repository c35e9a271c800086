#include <gtest/gtest.h>

#include "trigzero/rational.hpp"
#include "trigzero/trigpoly.hpp"

using namespace trigzero;

TEST(ParseRational, IntegersDecimalsAndFractions) {
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("-12"), Rational(-12));
    EXPECT_EQ(parse_rational("+3"), Rational(3));
    EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
    EXPECT_EQ(parse_rational("-2.50"), Rational(-5, 2));
    EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
    EXPECT_EQ(parse_rational("3."), Rational(3));
    EXPECT_EQ(parse_rational("1.5e2"), Rational(150));
    EXPECT_EQ(parse_rational("25E-3"), Rational(1, 40));
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-1/3"), Rational(-1, 3));
    EXPECT_EQ(parse_rational("  2/7 "), Rational(2, 7));
}

TEST(ParseRational, DecimalIsExactNotBinary) {
    // 0.1 has no finite binary expansion; the parsed value must still be 1/10.
    Rational q = parse_rational("0.1");
    EXPECT_NE(q, dyadic(0.1));
    EXPECT_EQ(q * 10, 1);
}

TEST(ParseRational, RejectsMalformed) {
    for (const char* bad : {"", " ", "abc", "1/0", "1/", "/2", "1.2.3", "--1", "1e", "1/2/3", "0x10", "1,5"})
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(ParseRational, ListSplitsOnCommas) {
    auto v = parse_rational_list("1, -2/3 ,0.25");
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[1], Rational(-2, 3));
    EXPECT_EQ(v[2], Rational(1, 4));
    EXPECT_THROW(parse_rational_list("1,,2"), ParseError);
    EXPECT_THROW(parse_rational_list(""), ParseError);
}

TEST(Dyadic, LiftIsExact) {
    EXPECT_EQ(dyadic(0.75), Rational(3, 4));
    EXPECT_EQ(dyadic(-1024.0), Rational(-1024));
    const double x = 0.1;
    EXPECT_EQ(dyadic(x).get_d(), x);
    EXPECT_EQ(dyadic(x).get_den(), mpz_class(1) << 55);
}

TEST(CoeffVector, ExactAndFloatingStorage) {
    auto exact = CoeffVector::parse("1/3,0,2");
    EXPECT_TRUE(exact.has_exact());
    EXPECT_EQ(exact.K(), 2);
    EXPECT_EQ(exact.exact()[0], Rational(1, 3));
    EXPECT_DOUBLE_EQ(exact[0], 1.0 / 3.0);

    auto floating = CoeffVector::from_doubles({0.5, -0.25});
    EXPECT_FALSE(floating.has_exact());
    EXPECT_EQ(floating.exact()[1], Rational(-1, 4));
    EXPECT_THROW(CoeffVector::from_doubles({}), InvalidSpec);
    EXPECT_THROW(CoeffVector::from_doubles({1.0, NAN}), InvalidSpec);
}

TEST(CoeffVector, DeclaredKIsIdentity) {
    EXPECT_NE(CoeffVector::parse("1"), CoeffVector::parse("1,0"));
    EXPECT_EQ(CoeffVector::parse("1,0"), CoeffVector::from_doubles({1.0, 0.0}));
    EXPECT_EQ(CoeffVector::parse("0,0,5").degree(), 2);
    EXPECT_EQ(CoeffVector::parse("5,0,0").degree(), 0);
    EXPECT_TRUE(CoeffVector::parse("0,0").is_zero());
}
