#include <gtest/gtest.h>

#include "syzcx/algebraic_real.hpp"
#include "syzcx/error.hpp"

using namespace syzcx;

namespace {
AlgebraicReal phi() { return *largest_real_root(IntPolynomial{-1, -1, 1}); }
}  // namespace

TEST(AlgebraicReal, ZeroAndIntegers) {
  AlgebraicReal z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.approx(), "0.000000000000");
  AlgebraicReal three = AlgebraicReal::from_integer(3);
  EXPECT_EQ(three.poly(), (IntPolynomial{-3, 1}));
  EXPECT_EQ(three.lo(), three.hi());
  EXPECT_EQ(three.approx(), "3.000000000000");
}

TEST(AlgebraicReal, GoldenRatio) {
  AlgebraicReal p = phi();
  EXPECT_EQ(p.poly(), (IntPolynomial{-1, -1, 1}));
  EXPECT_EQ(p.approx(), "1.618033988750");
  EXPECT_LE(p.hi() - p.lo(), Rational(1, BigInt(1) << 40));
  EXPECT_NEAR(p.to_double(), 1.6180339887498949, 1e-12);
}

TEST(AlgebraicReal, IntervalCollapsesToRationalRoot) {
  // roots -1 and 2 of x^2 - x - 2; the isolating interval may hit 2 exactly
  auto r = largest_real_root(IntPolynomial{-2, -1, 1});
  ASSERT_TRUE(r);
  EXPECT_TRUE(algebraic_equal(*r, AlgebraicReal::from_integer(2)));
  EXPECT_EQ(r->approx(), "2.000000000000");
}

TEST(AlgebraicReal, EqualityAcrossDefiningPolynomials) {
  AlgebraicReal a = phi();
  // φ is also a root of (x^2 - x - 1)(x + 5)
  auto b = largest_real_root(IntPolynomial{-1, -1, 1} * IntPolynomial{5, 1});
  ASSERT_TRUE(b);
  EXPECT_TRUE(algebraic_equal(a, *b));
  EXPECT_EQ(b->poly(), (IntPolynomial{-1, -1, 1} * IntPolynomial{5, 1}));
  auto sqrt2 = largest_real_root(IntPolynomial{-2, 0, 1});
  EXPECT_FALSE(algebraic_equal(a, *sqrt2));
  EXPECT_EQ(compare(a, *sqrt2), std::strong_ordering::greater);
  EXPECT_EQ(compare(*sqrt2, a), std::strong_ordering::less);
  EXPECT_EQ(compare(a, *b), std::strong_ordering::equal);
}

TEST(AlgebraicReal, CompareWithRationals) {
  AlgebraicReal a = phi();
  EXPECT_EQ(compare(a, Rational(1)), std::strong_ordering::greater);
  EXPECT_EQ(compare(a, Rational(2)), std::strong_ordering::less);
  EXPECT_EQ(compare(AlgebraicReal::from_integer(1), Rational(1)), std::strong_ordering::equal);
  EXPECT_EQ(compare(AlgebraicReal(), Rational(0)), std::strong_ordering::equal);
}

TEST(AlgebraicReal, NearTiesAreSeparated) {
  // √2 vs 1414213562373/10^12 differ by about 1e-13, below the stored width
  auto s = *largest_real_root(IntPolynomial{-2, 0, 1});
  Rational near(BigInt("1414213562373"), BigInt("1000000000000"));
  EXPECT_EQ(compare(s, near), std::strong_ordering::greater);
  auto t = *largest_real_root(IntPolynomial{-200000000000000LL + 1, 0, 100000000000000LL});
  EXPECT_FALSE(algebraic_equal(s, t));
  EXPECT_EQ(compare(s, t), std::strong_ordering::greater);
}

TEST(AlgebraicReal, RealRootsSortedAndRefined) {
  auto roots = real_roots(IntPolynomial{0, -2, 0, 1});  // 0, ±√2
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0].approx(), "-1.414213562373");
  EXPECT_TRUE(roots[1].is_zero());
  EXPECT_EQ(roots[2].approx(), "1.414213562373");
  AlgebraicReal fine = roots[2].refined(Rational(1, BigInt(1) << 80));
  EXPECT_LE(fine.hi() - fine.lo(), Rational(1, BigInt(1) << 80));
  EXPECT_TRUE(algebraic_equal(fine, roots[2]));
  EXPECT_FALSE(largest_real_root(IntPolynomial{1, 0, 1}).has_value());
}

TEST(Decimal, FormatAndParse) {
  EXPECT_EQ(format_decimal(Rational(1, 3), 4), "0.3333");
  EXPECT_EQ(format_decimal(Rational(2, 3), 4), "0.6667");
  EXPECT_EQ(format_decimal(Rational(-1, 8), 2), "-0.13");
  EXPECT_EQ(format_decimal(Rational(5), 0), "5");
  EXPECT_EQ(parse_rational("1.25"), Rational(5, 4));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(rational_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(rational_string(Rational(2)), "2");
  EXPECT_THROW(parse_rational("x1"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
}
