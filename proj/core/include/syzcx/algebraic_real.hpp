#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "syzcx/polynomial.hpp"

namespace syzcx {

/// A real algebraic number: a squarefree primitive defining polynomial plus
/// a closed isolating interval of width at most 2^-40. The interval is a
/// single point or has non-root endpoints.
class AlgebraicReal {
 public:
  /// Zero, defined by x.
  AlgebraicReal();

  static AlgebraicReal from_integer(const BigInt& n);
  /// `iv` must isolate exactly one root of `p`; p need not be squarefree.
  static AlgebraicReal from_isolated(const IntPolynomial& p, RootInterval iv);

  const IntPolynomial& poly() const noexcept { return poly_; }
  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  /// Midpoint rounded to 12 digits after the decimal point.
  const std::string& approx() const noexcept { return approx_; }
  double to_double() const;

  /// A copy whose interval has width at most `width`.
  AlgebraicReal refined(const Rational& width) const;

  bool is_zero() const;

 private:
  IntPolynomial poly_;
  Rational lo_, hi_;
  std::string approx_;
};

/// Exact equality: the roots coincide iff gcd of the defining polynomials
/// has a root in the intersection of the two intervals.
bool algebraic_equal(const AlgebraicReal& a, const AlgebraicReal& b);

/// Exact ordering; refines until the intervals separate when unequal.
std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b);

/// Compare with a rational number, exactly.
std::strong_ordering compare(const AlgebraicReal& a, const Rational& r);

/// All distinct real roots of p (p nonzero), increasing.
std::vector<AlgebraicReal> real_roots(const IntPolynomial& p);

/// Largest real root of p, if any.
std::optional<AlgebraicReal> largest_real_root(const IntPolynomial& p);

/// Decimal rendering of r rounded half away from zero.
std::string format_decimal(const Rational& r, int digits_after_point);

/// Parses a decimal or "p/q" literal.
Rational parse_rational(const std::string& text);

std::string rational_string(const Rational& r);

}  // namespace syzcx
