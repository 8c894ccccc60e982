#include "qhb/exact.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace qhb {
namespace {

TEST(Binomial, StandardValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(60, 30), Integer("118264581564861424"));
}

TEST(Binomial, ZeroOutsideSupport) {
  EXPECT_EQ(binomial(4, 7), 0);
  EXPECT_EQ(binomial(-1, 3), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(3, -1), 0);
}

TEST(Binomial, PascalRule) {
  for (int a = 1; a <= 40; ++a)
    for (int b = 0; b <= a; ++b) EXPECT_EQ(binomial(a, b), binomial(a - 1, b) + binomial(a - 1, b - 1));
}

TEST(ParseRational, CanonicalForm) {
  const Rational q = parse_rational("6/4");
  EXPECT_EQ(q.get_num(), 3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_EQ(to_string(parse_rational("12345678901234567890123")), "12345678901234567890123");
}

TEST(ParseRational, RejectsMalformed) {
  for (const char* bad : {"", "1/0", "1.5", "abc", "1/", "/2", "1/-2", "+3", " 1", "1e3"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(ParseRational, PrintParseRoundTrip) {
  for (const char* s : {"0", "7", "-7", "1/3", "-22/7", "1024/109"}) EXPECT_EQ(to_string(parse_rational(s)), s);
}

TEST(Floor, HandlesNegatives) {
  EXPECT_EQ(floor(Rational(32, 25)), 1);
  EXPECT_EQ(floor(Rational(-1, 2)), -1);
  EXPECT_EQ(floor(Rational(4)), 4);
}

TEST(Rpow, NegativeExponent) {
  EXPECT_EQ(rpow(2, -1), Rational(1, 2));
  EXPECT_EQ(rpow(3, 0), 1);
  EXPECT_EQ(rpow(2, 10), 1024);
}

TEST(ApproxString, Renders) {
  EXPECT_EQ(approx_string(Rational(32, 25)), "1.28");
  EXPECT_EQ(approx_string(Rational(1, 2)), "0.5");
  EXPECT_EQ(approx_string(Rational(-3, 4)), "-0.75");
  EXPECT_EQ(approx_string(Rational(0)), "0");
  EXPECT_EQ(approx_string(Rational(1, 3), 5), "0.33333");
  EXPECT_EQ(approx_string(Rational(64)), "64");
}

}  // namespace
}  // namespace qhb
