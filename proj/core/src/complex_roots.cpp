#include "syzcx/complex_roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace syzcx {

namespace {

using cld = std::complex<long double>;

struct GQ {
  Rational re, im;
};

GQ mul(const GQ& a, const GQ& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
GQ sub(const GQ& a, const GQ& b) { return {a.re - b.re, a.im - b.im}; }
Rational norm2(const GQ& a) { return a.re * a.re + a.im * a.im; }

GQ eval(const IntPolynomial& p, const GQ& z) {
  GQ acc{0, 0};
  for (int k = p.degree(); k >= 0; --k) {
    acc = mul(acc, z);
    acc.re += Rational(p[k]);
  }
  return acc;
}

Rational round_dyadic(const Rational& x, int bits) {
  Rational scaled = x;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(f);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  return r;
}

Rational from_long_double(long double v) {
  // exact conversion of a finite long double
  int e = 0;
  long double m = std::frexp(v, &e);
  long double scaled = std::ldexp(m, 64);
  BigInt num;
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  // split into two 32-bit halves to stay within unsigned long on every platform
  auto hi = static_cast<unsigned long>(std::floor(scaled / 4294967296.0L));
  auto lo = static_cast<unsigned long>(scaled - static_cast<long double>(hi) * 4294967296.0L);
  num = BigInt(hi);
  num <<= 32;
  num += lo;
  if (neg) num = -num;
  Rational r(num);
  int shift = e - 64;
  if (shift >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
  return r;
}

std::vector<cld> aberth(const IntPolynomial& p) {
  const int n = p.degree();
  std::vector<long double> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = static_cast<long double>(p[k].get_d());
  auto horner = [&](cld z, cld& dz) {
    cld v = 0;
    dz = 0;
    for (int k = n; k >= 0; --k) {
      dz = dz * z + v;
      v = v * z + c[static_cast<std::size_t>(k)];
    }
    return v;
  };
  long double radius = static_cast<long double>(root_bound(p).get_d());
  radius = std::max(radius * 0.5L, 1.0L);
  std::vector<cld> z(static_cast<std::size_t>(n));
  const long double pi = 3.14159265358979323846264338327950288L;
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] = std::polar(radius, 2 * pi * k / n + 0.4L);
  for (int iter = 0; iter < 1000; ++iter) {
    long double worst = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      cld dp;
      cld v = horner(z[i], dp);
      if (v == cld(0)) continue;
      cld ratio = v / dp;
      cld sum = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      cld w = ratio / (1.0L - ratio * sum);
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[i])));
    }
    if (worst < 1e-19L) break;
  }
  return z;
}

}  // namespace

Rational upper_sqrt(const Rational& q, int bits) {
  Rational scaled = q;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<mp_bitcnt_t>(2 * bits));
  BigInt f, s;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  mpz_sqrt(s.get_mpz_t(), f.get_mpz_t());
  s += 1;
  Rational r(s);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  return r;
}

Rational lower_sqrt(const Rational& q, int bits) {
  if (q <= 0) return 0;
  Rational scaled = q;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<mp_bitcnt_t>(2 * bits));
  BigInt f, s;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  mpz_sqrt(s.get_mpz_t(), f.get_mpz_t());
  Rational r(s);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  return r;
}

std::optional<std::vector<CertifiedDisc>> certified_roots(const IntPolynomial& p, int bits) {
  const int n = p.degree();
  if (n < 1) return std::vector<CertifiedDisc>{};
  std::vector<GQ> z;
  for (const auto& w : aberth(p)) z.push_back({from_long_double(w.real()), from_long_double(w.imag())});

  if (bits > 60) {
    IntPolynomial dp = p.derivative();
    for (auto& zi : z) {
      for (int step = 0; step < 12; ++step) {
        GQ num = eval(p, zi);
        GQ den = eval(dp, zi);
        Rational d2 = norm2(den);
        if (d2 == 0) break;
        // num / den = num * conj(den) / |den|^2
        GQ q{(num.re * den.re + num.im * den.im) / d2, (num.im * den.re - num.re * den.im) / d2};
        GQ next{round_dyadic(zi.re - q.re, bits), round_dyadic(zi.im - q.im, bits)};
        bool settled = next.re == zi.re && next.im == zi.im;
        zi = next;
        if (settled) break;
      }
    }
  }

  std::vector<CertifiedDisc> out;
  Rational lc2 = Rational(p.leading()) * Rational(p.leading());
  Rational n2 = Rational(n) * Rational(n);
  for (std::size_t i = 0; i < z.size(); ++i) {
    Rational den = lc2;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == i) continue;
      Rational d = norm2(sub(z[i], z[j]));
      if (d == 0) return std::nullopt;
      den *= d;
    }
    Rational w2 = norm2(eval(p, z[i])) / den;
    out.push_back({z[i].re, z[i].im, upper_sqrt(n2 * w2, bits + 8)});
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      Rational d = norm2(sub({out[i].re, out[i].im}, {out[j].re, out[j].im}));
      Rational r = out[i].radius + out[j].radius;
      if (d <= r * r) return std::nullopt;
    }
  return out;
}

Rational modulus_upper(const CertifiedDisc& d, int bits) {
  return upper_sqrt(d.re * d.re + d.im * d.im, bits) + d.radius;
}

Rational modulus_lower(const CertifiedDisc& d, int bits) {
  Rational v = lower_sqrt(d.re * d.re + d.im * d.im, bits) - d.radius;
  return v > 0 ? v : Rational(0);
}

}  // namespace syzcx
