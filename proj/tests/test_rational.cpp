#include <gtest/gtest.h>

#include "hkas/error.hpp"
#include "hkas/rational.hpp"

namespace hkas {
namespace {

TEST(Rational, ParsesAndReducesToLowestTerms) {
  EXPECT_EQ(Rational::parse("2/8").to_string(), "1/4");
  EXPECT_EQ(Rational::parse("3").to_string(), "3/1");
  EXPECT_EQ(Rational::parse("0/5").to_string(), "0/1");
  EXPECT_EQ(Rational::parse("-6/4").to_string(), "-3/2");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "a/b", "1.5", "1/-2", "1//2"}) {
    EXPECT_THROW(Rational::parse(bad), Error) << bad;
  }
}

TEST(Rational, ExactArithmetic) {
  Rational third = Rational::parse("1/3");
  Rational sum = third + third + third;
  EXPECT_EQ(sum, Rational(1));
  EXPECT_EQ(Rational::parse("3/4") * Rational::parse("2/3"), Rational::parse("1/2"));
  EXPECT_EQ(Rational::parse("1/2") / Rational::parse("1/4"), Rational(2));
  EXPECT_LT(Rational::parse("1/3"), Rational::parse("1/2"));
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Rational, BeyondSixtyFourBits) {
  Rational tiny(1);
  for (int i = 0; i < 10; ++i) tiny *= Rational::parse("1/4294967296");
  EXPECT_FALSE(tiny.is_zero());
  EXPECT_EQ(tiny.denominator(), BigInt(1) << 320);
  Rational back = tiny;
  for (int i = 0; i < 10; ++i) back *= Rational::parse("4294967296");
  EXPECT_EQ(back, Rational(1));
}

TEST(Rational, ToDouble) {
  EXPECT_DOUBLE_EQ(Rational::parse("3/8").to_double(), 0.375);
  EXPECT_DOUBLE_EQ(Rational::parse("1/3").to_double(), 1.0 / 3.0);
}

}  // namespace
}  // namespace hkas
