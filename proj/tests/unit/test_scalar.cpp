#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "nilsol/scalar.hpp"

using nilsol::ParseError;
using nilsol::Rational;
using nilsol::Scalar;

namespace {

Scalar s(const char* text) { return Scalar::parse(text); }

}  // namespace

TEST(ScalarParse, Literals) {
  EXPECT_EQ(s("1/2"), Scalar(Rational(1, 2)));
  EXPECT_EQ(s("sqrt(8)"), Scalar(2) * Scalar::sqrt_of(2));
  EXPECT_EQ(s("-3/2*sqrt(12)"), Scalar(-3) * Scalar::sqrt_of(3));
  EXPECT_EQ(s("sqrt(4)"), Scalar(2));
  EXPECT_EQ(s("-1/2 + 3*sqrt(2)").str(), "-1/2 + 3*sqrt(2)");
}

TEST(ScalarParse, Errors) {
  EXPECT_THROW(s("1/0"), ParseError);
  EXPECT_THROW(s("sqrt(0)"), ParseError);
  EXPECT_THROW(s("sqrt(-2)"), ParseError);
  EXPECT_THROW(s("2*"), ParseError);
  EXPECT_THROW(s(""), ParseError);
  EXPECT_THROW(s("abc"), ParseError);
}

TEST(ScalarArith, Products) {
  const Scalar r2 = Scalar::sqrt_of(2);
  EXPECT_EQ(r2 * r2, Scalar(2));
  EXPECT_EQ(r2 * Scalar::sqrt_of(6), Scalar(2) * Scalar::sqrt_of(3));
  EXPECT_EQ((Scalar(1) + r2) * (Scalar(1) - r2), Scalar(-1));
}

TEST(ScalarArith, Division) {
  const Scalar a = Scalar(1) + Scalar::sqrt_of(2) + Scalar::sqrt_of(3);
  EXPECT_EQ(a * a.inverse(), Scalar(1));
  EXPECT_EQ(Scalar(1) / Scalar::sqrt_of(2), Scalar(Rational(1, 2)) * Scalar::sqrt_of(2));
  EXPECT_THROW((void)(Scalar(1) / Scalar()), std::domain_error);
}

TEST(ScalarSign, Examples) {
  EXPECT_EQ((Scalar(3) - Scalar(2) * Scalar::sqrt_of(2)).sign(), 1);
  EXPECT_EQ((Scalar::sqrt_of(2) + Scalar::sqrt_of(3) - Scalar::sqrt_of(6)).sign(), 1);
  EXPECT_EQ(Scalar().sign(), 0);
  EXPECT_EQ((Scalar(99) - Scalar(70) * Scalar::sqrt_of(2)).sign(), 1);
  EXPECT_EQ((Scalar(70) * Scalar::sqrt_of(2) - Scalar(99)).sign(), -1);
  EXPECT_LT(Scalar::sqrt_of(2), Scalar(Rational(3, 2)));
}

TEST(ScalarProperty, FieldAxioms) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = nilsol::testing::random_scalar(rng);
    const Scalar b = nilsol::testing::random_scalar(rng);
    const Scalar c = nilsol::testing::random_scalar(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE((a - a).is_zero());
    if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), Scalar(1));
    if (!b.is_zero()) ASSERT_EQ((a / b) * b, a);
  }
}

TEST(ScalarProperty, PrintParseRoundTrip) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = nilsol::testing::random_scalar(rng);
    ASSERT_EQ(Scalar::parse(a.str()), a) << a.str();
  }
}

TEST(ScalarProperty, SignIsMultiplicative) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = nilsol::testing::random_scalar(rng);
    const Scalar b = nilsol::testing::random_scalar(rng);
    ASSERT_EQ((a * b).sign(), a.sign() * b.sign()) << a << " | " << b;
    // Floating point is only a cross-check here, never part of sign().
    const double v = a.to_double();
    if (std::abs(v) > 1e-9) ASSERT_EQ(a.sign(), v > 0 ? 1 : -1);
  }
}
