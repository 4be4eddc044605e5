#include "syzcx/algebraic_real.hpp"

#include <cassert>

#include "syzcx/error.hpp"

namespace syzcx {

namespace {

const Rational& default_width() {
  static const Rational w = [] {
    Rational r(1);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), 40);
    return r;
  }();
  return w;
}

}  // namespace

std::string format_decimal(const Rational& r, int digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(r) * scale;
  // round half away from zero
  BigInt num = scaled.get_num() * 2 + scaled.get_den();
  BigInt den = scaled.get_den() * 2;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string digits_str = q.get_str();
  if (static_cast<int>(digits_str.size()) <= digits)
    digits_str.insert(0, static_cast<std::size_t>(digits + 1) - digits_str.size(), '0');
  std::string out = digits_str.substr(0, digits_str.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + digits_str.substr(digits_str.size() - static_cast<std::size_t>(digits));
  if (r < 0 && q != 0) out.insert(0, "-");
  return out;
}

std::string rational_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorKind::parse, "bad_number", "cannot read number '" + text + "'");
  };
  if (text.empty()) return fail();
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      Rational r(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
      if (r.get_den() == 0) return fail();
      r.canonicalize();
      return r;
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    for (char ch : whole + frac)
      if (ch < '0' || ch > '9') return fail();
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(BigInt(whole) * den + BigInt(frac), den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  } catch (const std::invalid_argument&) {
    return fail();
  }
}

AlgebraicReal::AlgebraicReal() : poly_(IntPolynomial::x()), lo_(0), hi_(0), approx_(format_decimal(0, 12)) {}

AlgebraicReal AlgebraicReal::from_integer(const BigInt& n) {
  AlgebraicReal r;
  r.poly_ = IntPolynomial{0, 1} - IntPolynomial::constant(n);
  r.lo_ = r.hi_ = Rational(n);
  r.approx_ = format_decimal(r.lo_, 12);
  return r;
}

AlgebraicReal AlgebraicReal::from_isolated(const IntPolynomial& p, RootInterval iv) {
  AlgebraicReal r;
  r.poly_ = squarefree_part(p);
  if (iv.lo == iv.hi && r.poly_.degree() > 1) {
    // rational root: shrink the defining polynomial to the linear factor
    Rational v = iv.lo;
    r.poly_ = IntPolynomial(std::vector<BigInt>{-v.get_num(), v.get_den()});
  }
  iv = refine_root(r.poly_, iv, default_width());
  r.lo_ = iv.lo;
  r.hi_ = iv.hi;
  r.approx_ = format_decimal((r.lo_ + r.hi_) / 2, 12);
  return r;
}

double AlgebraicReal::to_double() const { return Rational((lo_ + hi_) / 2).get_d(); }

AlgebraicReal AlgebraicReal::refined(const Rational& width) const {
  AlgebraicReal r = *this;
  RootInterval iv = refine_root(poly_, {lo_, hi_}, width);
  r.lo_ = iv.lo;
  r.hi_ = iv.hi;
  return r;
}

bool AlgebraicReal::is_zero() const { return lo_ == 0 && hi_ == 0; }

bool algebraic_equal(const AlgebraicReal& a, const AlgebraicReal& b) {
  Rational lo = a.lo() > b.lo() ? a.lo() : b.lo();
  Rational hi = a.hi() < b.hi() ? a.hi() : b.hi();
  if (lo > hi) return false;
  IntPolynomial g = gcd(a.poly(), b.poly());
  if (g.degree() < 1) return false;
  return SturmSequence(g).count_closed(lo, hi) > 0;
}

std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.hi() < b.lo()) return std::strong_ordering::less;
  if (b.hi() < a.lo()) return std::strong_ordering::greater;
  if (algebraic_equal(a, b)) return std::strong_ordering::equal;
  AlgebraicReal x = a, y = b;
  Rational width = Rational(x.hi() - x.lo()) / 2;
  Rational wy = Rational(y.hi() - y.lo()) / 2;
  if (wy > width) width = wy;
  for (;;) {
    x = x.refined(width);
    y = y.refined(width);
    if (x.hi() < y.lo()) return std::strong_ordering::less;
    if (y.hi() < x.lo()) return std::strong_ordering::greater;
    width /= 2;
  }
}

std::strong_ordering compare(const AlgebraicReal& a, const Rational& r) {
  if (a.hi() < r) return std::strong_ordering::less;
  if (a.lo() > r) return std::strong_ordering::greater;
  int s = a.poly().sign_at(r);
  if (s == 0) return std::strong_ordering::equal;
  // r lies strictly inside the isolating interval and is not the root
  if (a.lo() == a.hi()) return a.lo() < r ? std::strong_ordering::less : std::strong_ordering::greater;
  int slo = a.poly().sign_at(a.lo());
  return s == slo ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::vector<AlgebraicReal> real_roots(const IntPolynomial& p) {
  IntPolynomial s = squarefree_part(p);
  std::vector<AlgebraicReal> out;
  for (const auto& iv : isolate_real_roots(s)) out.push_back(AlgebraicReal::from_isolated(s, iv));
  return out;
}

std::optional<AlgebraicReal> largest_real_root(const IntPolynomial& p) {
  IntPolynomial s = squarefree_part(p);
  auto ivs = isolate_real_roots(s);
  if (ivs.empty()) return std::nullopt;
  return AlgebraicReal::from_isolated(s, ivs.back());
}

}  // namespace syzcx
