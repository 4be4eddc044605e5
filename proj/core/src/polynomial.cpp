#include "syzcx/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "syzcx/error.hpp"
#include "syzcx/int_matrix.hpp"

namespace syzcx {

namespace {

const BigInt& zero_coefficient() {
  static const BigInt zero = 0;
  return zero;
}

int sign_of(const BigInt& v) { return mpz_sgn(v.get_mpz_t()); }

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  c_.reserve(ascending.size());
  for (long v : ascending) c_.emplace_back(v);
  normalize();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPolynomial::operator[](int i) const {
  if (i < 0 || i > degree()) return zero_coefficient();
  return c_[static_cast<std::size_t>(i)];
}

const BigInt& IntPolynomial::leading() const { return c_.empty() ? zero_coefficient() : c_.back(); }

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  if (c_.empty()) return 0;
  // Homogenised evaluation sum c_i a^i b^(n-i) with b > 0 keeps the sign.
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  BigInt acc = 0;
  BigInt bpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * a + *it * bpow;
    bpow *= b;
  }
  return sign_of(acc);
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  if (c_.empty()) return {};
  BigInt g = content();
  if (c_.back() < 0) g = -g;
  std::vector<BigInt> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::compose_power(int l) const {
  if (l < 1) throw Error(ErrorKind::precondition, "invalid_exponent", "exponent must be at least 1");
  if (c_.empty()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(degree()) * static_cast<std::size_t>(l) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * static_cast<std::size_t>(l)] = c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reflect() const {
  std::vector<BigInt> v = c_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> v = c_;
  for (auto& x : v) x = -x;
  return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& s) {
  for (auto& x : c_) x *= s;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  assert(!b.is_zero());
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  const BigInt& lc = b.leading();
  std::vector<BigInt> r = a.coeffs();
  int e = a.degree() - db + 1;
  int dr = a.degree();
  while (dr >= db) {
    BigInt s = r[static_cast<std::size_t>(dr)];
    for (int i = 0; i <= dr; ++i) r[static_cast<std::size_t>(i)] *= lc;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + dr - db)] -= s * b[i];
    --e;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
  }
  IntPolynomial out(std::move(r));
  if (e > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(e));
    out *= f;
  }
  return out;
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) { return pseudo_remainder(a, b).is_zero(); }

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  assert(!b.is_zero());
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  const int db = b.degree();
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int d = a.degree(); d >= db; --d) {
    BigInt& top = r[static_cast<std::size_t>(d)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    BigInt s;
    mpz_divexact(s.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    q[static_cast<std::size_t>(d - db)] = s;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + d - db)] -= s * b[i];
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial u = a.primitive();
  IntPolynomial v = b.primitive();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_remainder(u, v).primitive();
    u = std::move(v);
    v = std::move(r);
  }
  return u.primitive();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive();
  IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive();
  auto q = exact_quotient(p.primitive(), g);
  assert(q.has_value());
  return q->primitive();
}

BigInt root_bound(const IntPolynomial& p) {
  // Cauchy: 1 + max |a_i / a_n|, rounded up.
  BigInt best = 0;
  const BigInt lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    BigInt a = abs(p[i]);
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), lc.get_mpz_t());
    if (q > best) best = q;
  }
  return best + 1;
}

SturmSequence::SturmSequence(const IntPolynomial& squarefree) {
  chain_.push_back(squarefree);
  if (squarefree.degree() <= 0) return;
  chain_.push_back(squarefree.derivative());
  while (chain_.back().degree() > 0) {
    const IntPolynomial& a = chain_[chain_.size() - 2];
    const IntPolynomial& b = chain_.back();
    IntPolynomial r = pseudo_remainder(a, b);
    // prem is lc(b)^e times the true remainder; keep only a positive factor.
    const int e = a.degree() - b.degree() + 1;
    if (b.leading() < 0 && (e % 2 == 1)) r = -r;
    if (r.is_zero()) break;
    BigInt c = r.content();
    IntPolynomial scaled = r;
    if (c > 1) {
      std::vector<BigInt> v = r.coeffs();
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      scaled = IntPolynomial(std::move(v));
    }
    chain_.push_back(-scaled);
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(p.sign_at(x));
  return count_variations(s);
}

int SturmSequence::variations_at_infinity(bool positive) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) {
    int lc = sign_of(p.leading());
    if (!positive && (p.degree() % 2 == 1)) lc = -lc;
    s.push_back(lc);
  }
  return count_variations(s);
}

int SturmSequence::count_half_open(const Rational& lo, const Rational& hi) const {
  if (hi <= lo) return 0;
  return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_closed(const Rational& lo, const Rational& hi) const {
  if (hi < lo) return 0;
  int n = (chain_.front().sign_at(lo) == 0) ? 1 : 0;
  return n + count_half_open(lo, hi);
}

int SturmSequence::count_real() const {
  if (chain_.front().degree() <= 0) return 0;
  return variations_at_infinity(false) - variations_at_infinity(true);
}

namespace {

void isolate(const SturmSequence& s, const Rational& lo, const Rational& hi, int count,
             std::vector<RootInterval>& out) {
  // Invariant: exactly `count` roots in (lo, hi].
  if (count == 0) return;
  const IntPolynomial& p = s.base();
  if (count == 1) {
    if (p.sign_at(hi) == 0) {
      out.push_back({hi, hi});
      return;
    }
    Rational a = lo;
    Rational b = hi;
    // Move the lower endpoint off a root so the interval has sign change.
    while (p.sign_at(a) == 0) {
      Rational mid = (a + b) / 2;
      if (p.sign_at(mid) == 0) {
        out.push_back({mid, mid});
        return;
      }
      if (s.count_half_open(a, mid) == 1)
        b = mid;
      else
        a = mid;
    }
    out.push_back({a, b});
    return;
  }
  Rational mid = (lo + hi) / 2;
  int left = s.count_half_open(lo, mid);
  isolate(s, lo, mid, left, out);
  isolate(s, mid, hi, count - left, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& squarefree) {
  std::vector<RootInterval> out;
  if (squarefree.degree() <= 0) return out;
  SturmSequence s(squarefree);
  Rational bound(root_bound(squarefree));
  int total = s.count_half_open(-bound, bound);
  isolate(s, -bound, bound, total, out);
  return out;
}

RootInterval refine_root(const IntPolynomial& squarefree, RootInterval iv, const Rational& width) {
  if (iv.lo == iv.hi) return iv;
  int slo = squarefree.sign_at(iv.lo);
  assert(slo != 0);
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int sm = squarefree.sign_at(mid);
    if (sm == 0) return {mid, mid};
    if (sm == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
  return iv;
}

IntPolynomial resultant_in_y(const IntPolynomial& q, const PolyInY& g, int degree_bound) {
  const int m = q.degree();
  const int n = static_cast<int>(g.size()) - 1;
  assert(m >= 0 && n >= 0);
  const int size = m + n;
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(degree_bound) + 1);
  for (int pt = 0; pt <= degree_bound; ++pt) {
    const BigInt xv = pt;
    std::vector<BigInt> gy(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) gy[static_cast<std::size_t>(k)] = g[static_cast<std::size_t>(k)](xv);
    if (size == 0) {
      values.emplace_back(1);
      continue;
    }
    IntMatrix s(static_cast<std::size_t>(size));
    // Rows 0..n-1: shifted copies of q; rows n..n+m-1: shifted copies of g.
    for (int r = 0; r < n; ++r)
      for (int k = 0; k <= m; ++k)
        s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) = q[m - k];
    for (int r = 0; r < m; ++r)
      for (int k = 0; k <= n; ++k)
        s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + k)) = gy[static_cast<std::size_t>(n - k)];
    values.emplace_back(bareiss_determinant(std::move(s)));
  }
  // Newton divided differences on nodes 0..D.
  const std::size_t count = values.size();
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < count; ++level)
    for (std::size_t i = count - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
      if (i == level) break;
    }
  std::vector<Rational> poly(count);
  std::vector<Rational> basis{Rational(1)};  // prod_{i<k} (x - i)
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t j = 0; j < basis.size(); ++j) poly[j] += dd[k] * basis[j];
    std::vector<Rational> next(basis.size() + 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      next[j + 1] += basis[j];
      next[j] -= basis[j] * Rational(static_cast<long>(k));
    }
    basis = std::move(next);
  }
  std::vector<BigInt> coeffs(count);
  for (std::size_t j = 0; j < count; ++j) {
    if (poly[j].get_den() != 1)
      throw Error(ErrorKind::internal, "inconsistent", "resultant interpolation produced a non-integer coefficient");
    coeffs[j] = poly[j].get_num();
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace syzcx
