#include <gtest/gtest.h>

#include "bingbound/core/arith.hpp"
#include "bingbound/core/bigfloat.hpp"
#include "bingbound/core/polynomial.hpp"

using namespace bingbound;

TEST(Rational, FormatsAlwaysWithDenominator) {
  EXPECT_EQ(format_rational(Rational(8)), "8/1");
  EXPECT_EQ(format_rational(Rational(0)), "0/1");
  EXPECT_EQ(format_rational(make_rational(-6, 4)), "-3/2");
}

TEST(Rational, ParseAcceptsFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("2/6"), Rational(1, 3));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Rational, SimplestBetweenPicksSmallestDenominator) {
  EXPECT_EQ(simplest_between(0, Rational(1, 6)), Rational(1, 7));
  EXPECT_EQ(simplest_between(Rational(1, 6), Rational(5, 6)), Rational(1, 2));
  EXPECT_EQ(simplest_between(Rational(5, 6), 1), Rational(6, 7));
  EXPECT_EQ(simplest_between(Rational(1, 3), Rational(2, 5)), Rational(3, 8));
  EXPECT_EQ(simplest_between(Rational(7, 3), Rational(9, 2)), Rational(3));
  EXPECT_THROW(simplest_between(1, 1), Error);
}

TEST(Rational, FloorCeilTotient) {
  EXPECT_EQ(floor_of(make_rational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(make_rational(-7, 2)), -3);
  EXPECT_EQ(ceil_of(Rational(3)), 3);
  EXPECT_EQ(euler_totient(1), 1u);
  EXPECT_EQ(euler_totient(12), 4u);
  EXPECT_EQ(euler_totient(97), 96u);
  EXPECT_EQ(euler_totient(120), 32u);
}

TEST(Polynomial, ArithmeticAndDivision) {
  const Polynomial a{-1, 0, 1};  // t^2 - 1
  const Polynomial b{1, 1};      // t + 1
  EXPECT_EQ(a / b, (Polynomial{-1, 1}));
  EXPECT_TRUE((a % b).is_zero());
  EXPECT_EQ(a * b, (Polynomial{-1, -1, 1, 1}));
  EXPECT_EQ(gcd(a, Polynomial{1, 2, 1}), b);
  EXPECT_EQ(Polynomial().degree(), -1);
}

TEST(Polynomial, SquareFreePartDropsRepeatedFactors) {
  const Polynomial p = Polynomial{1, 1} * Polynomial{1, 1} * Polynomial{-2, 1};
  EXPECT_EQ(square_free_part(p), (Polynomial{1, 1} * Polynomial{-2, 1}).monic());
}

TEST(Polynomial, InverseModulo) {
  const Polynomial m = cyclotomic(5);
  const Polynomial a{2, 0, 1};
  const Polynomial inv = inverse_mod(a, m);
  EXPECT_EQ((a * inv) % m, Polynomial::constant(1));
  EXPECT_THROW(inverse_mod(Polynomial{-1, 1}, Polynomial{-1, 0, 1}), Error);
}

TEST(Polynomial, CyclotomicKnownValues) {
  EXPECT_EQ(cyclotomic(1), (Polynomial{-1, 1}));
  EXPECT_EQ(cyclotomic(2), (Polynomial{1, 1}));
  EXPECT_EQ(cyclotomic(6), (Polynomial{1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), (Polynomial{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic(105).degree(), 48);
  EXPECT_EQ(cyclotomic(105)[7], -2);  // the first cyclotomic coefficient outside {-1, 0, 1}
  // t^n - 1 is the product over divisors.
  Polynomial prod = Polynomial::constant(1);
  for (std::uint64_t d : {1, 2, 3, 4, 6, 12}) prod = prod * cyclotomic(d);
  EXPECT_EQ(prod, Polynomial::monomial(12) - Polynomial::constant(1));
}

TEST(Polynomial, ReciprocalTransform) {
  // t^2 - t + 1 = t (z - 1) with z = t + 1/t
  EXPECT_EQ(reciprocal_transform(Polynomial{1, -1, 1}), (Polynomial{-1, 1}));
  // 2t^2 - 3t + 2 -> 2z - 3
  EXPECT_EQ(reciprocal_transform(Polynomial{2, -3, 2}), (Polynomial{-3, 2}));
  EXPECT_THROW(reciprocal_transform(Polynomial{1, 2, 3}), Error);
  EXPECT_THROW(reciprocal_transform(Polynomial{1, 1}), Error);
}

TEST(Polynomial, Printing) {
  EXPECT_EQ((Polynomial{1, -1, 1}).to_string("t"), "t^2 - t + 1");
  EXPECT_EQ(Polynomial().to_string("t"), "0");
}

TEST(BigFloat, DecimalEnclosureBracketsPi) {
  const BigFloat pi = BigFloat::pi(128);
  EXPECT_EQ(to_decimal(pi, 12, false), "3.141592653589");
  EXPECT_EQ(to_decimal(pi, 12, true), "3.141592653590");
  EXPECT_EQ(to_decimal(BigFloat(Rational(1, 8), 64), 3, false), "0.125");
  EXPECT_EQ(to_decimal(-BigFloat(Rational(1, 8), 64), 2, false), "-0.13");
}
