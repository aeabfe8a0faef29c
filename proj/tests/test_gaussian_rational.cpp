#include <gtest/gtest.h>

#include "eigpert/errors.hpp"
#include "eigpert/gaussian_rational.hpp"
#include "support.hpp"

namespace eigpert {
namespace {

using testing::gi;
using testing::q;

TEST(GaussianRational, CanonicalisesParts) {
  const GaussianRational z(Rational(4, -6), Rational(10, 4));
  EXPECT_EQ(z.re(), Rational(-2, 3));
  EXPECT_EQ(z.im(), Rational(5, 2));
  EXPECT_EQ(z.re().get_den(), 3);
}

TEST(GaussianRational, FieldOperations) {
  const GaussianRational a = gi(1, 2);
  const GaussianRational b = gi(3, -1);
  EXPECT_EQ(a * b, gi(5, 5));
  EXPECT_EQ(a / b, GaussianRational(q(1, 10), q(7, 10)));
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
  EXPECT_EQ(a * a.conj(), GaussianRational(a.norm()));
}

TEST(GaussianRational, DivisionByZeroThrows) {
  EXPECT_THROW(gi(1, 1) / GaussianRational(), InputError);
}

TEST(GaussianRational, Strings) {
  EXPECT_EQ(GaussianRational(q(3, 4)).str(), "3/4");
  EXPECT_EQ(gi(0, -2).str(), "-2i");
  EXPECT_EQ(GaussianRational(Rational(1), q(-1, 2)).str(), "1-1/2i");
  EXPECT_EQ(GaussianRational().str(), "0");
  EXPECT_EQ(gi(-3, 0).token(), "-3");
  EXPECT_EQ(GaussianRational(q(1, 2), Rational(-1)).token(), "1/2,-1");
}

TEST(GaussianRational, ParseRational) {
  Rational r;
  bool zero_den = false;
  ASSERT_TRUE(parse_rational("-6/4", r, zero_den));
  EXPECT_EQ(r, Rational(-3, 2));
  ASSERT_TRUE(parse_rational("17", r, zero_den));
  EXPECT_EQ(r, 17);
  EXPECT_FALSE(parse_rational("1/0", r, zero_den));
  EXPECT_TRUE(zero_den);
  for (const char* bad : {"", "-", "1/", "/2", "1.5", "+3", "1/-2", "a"}) {
    zero_den = false;
    EXPECT_FALSE(parse_rational(bad, r, zero_den)) << bad;
    EXPECT_FALSE(zero_den) << bad;
  }
}

TEST(GaussianRational, ExactnessProperty) {
  RandomStream rng(7);
  for (int k = 0; k < 300; ++k) {
    const auto a = testing::random_gaussian(rng, 1000, 97);
    const auto b = testing::random_gaussian(rng, 1000, 97);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(GaussianRational, CommonDenominator) {
  EXPECT_EQ(common_denominator(GaussianRational(q(1, 4), q(5, 6))), 12);
  EXPECT_EQ(common_denominator(gi(2, 3)), 1);
}

}  // namespace
}  // namespace eigpert
