#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace syzcx {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with big-integer coefficients, stored in
/// ascending degree. The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial monomial(const BigInt& c, int degree);
  static IntPolynomial x() { return monomial(1, 1); }
  static IntPolynomial constant(const BigInt& c) { return monomial(c, 0); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  /// Coefficient of x^i; zero outside the stored range.
  const BigInt& operator[](int i) const;
  const BigInt& leading() const;
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }

  BigInt operator()(const BigInt& x) const;
  Rational operator()(const Rational& x) const;
  /// Sign of p(x) for rational x, computed without fractions.
  int sign_at(const Rational& x) const;

  IntPolynomial derivative() const;
  BigInt content() const;
  /// Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive() const;
  /// p(x^l).
  IntPolynomial compose_power(int l) const;
  /// p(-x).
  IntPolynomial reflect() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& s);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  /// Human-readable form, e.g. "x^2 - x - 1".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b, computed over the integers.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// True iff b divides a in Q[x]. b must be nonzero.
bool divides(const IntPolynomial& b, const IntPolynomial& a);

/// a / b when the quotient exists in Z[x].
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Greatest common divisor over Q, returned primitive with positive leading
/// coefficient. gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Integer bound strictly larger than the modulus of every complex root.
BigInt root_bound(const IntPolynomial& p);

/// Sturm chain of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& squarefree);

  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool positive) const;
  /// Number of distinct real roots in the half-open interval (lo, hi].
  int count_half_open(const Rational& lo, const Rational& hi) const;
  /// Number of distinct real roots in the closed interval [lo, hi].
  int count_closed(const Rational& lo, const Rational& hi) const;
  int count_real() const;

  const IntPolynomial& base() const { return chain_.front(); }

 private:
  std::vector<IntPolynomial> chain_;
};

struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Isolating intervals for the real roots of a squarefree polynomial, in
/// increasing order. Each interval is closed, contains exactly one root, and
/// is either a point or has endpoints that are not roots.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& squarefree);

/// Halves an isolating interval of a squarefree polynomial until its width
/// is at most `width`.
RootInterval refine_root(const IntPolynomial& squarefree, RootInterval iv, const Rational& width);

/// Bivariate polynomial as coefficients in y, each an integer polynomial in x.
using PolyInY = std::vector<IntPolynomial>;

/// Res_y(q(y), g(x, y)) as a polynomial in x, computed from Sylvester
/// determinants at integer points followed by exact interpolation.
/// `degree_bound` must bound the x-degree of the result.
IntPolynomial resultant_in_y(const IntPolynomial& q, const PolyInY& g, int degree_bound);

}  // namespace syzcx
