#include <gtest/gtest.h>

#include <random>

#include "seshadri/rational.hpp"

using seshadri::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(0, 5).str(), "0/1");
}

TEST(Rational, ParseAcceptsFractionsAndIntegers) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational::parse("1/0"), seshadri::Error);
  EXPECT_THROW(Rational::parse("abc"), seshadri::Error);
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(4).floor(), 4);
}

TEST(Rational, OverflowIsReported) {
  const Rational big(std::int64_t{1} << 62);
  try {
    (void)(big * big);
    FAIL() << "expected overflow";
  } catch (const seshadri::Error& e) {
    EXPECT_EQ(e.code(), seshadri::ErrorCode::overflow);
  }
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  std::mt19937 gen(20240611);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational a(num(gen), den(gen)), b(num(gen), den(gen)), c(num(gen), den(gen));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a < b, (b - a).sign() > 0);
    EXPECT_EQ(Rational::parse(a.str()), a);
  }
}
