#include "syzcx/curvature.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <variant>

#include "syzcx/complex_roots.hpp"
#include "syzcx/error.hpp"

namespace syzcx {

std::string to_string(CurvatureStatus s) {
  switch (s) {
    case CurvatureStatus::realizable:
      return "realizable";
    case CurvatureStatus::not_realizable:
      return "not_realizable";
    case CurvatureStatus::indeterminate:
      break;
  }
  return "indeterminate";
}

std::string to_string(Irreducibility s) {
  switch (s) {
    case Irreducibility::verified:
      return "verified";
    case Irreducibility::assumed:
      return "assumed";
    case Irreducibility::reducible_factored:
      return "reducible_factored";
    case Irreducibility::unverified:
      break;
  }
  return "unverified";
}

namespace {

Rational pow2(int e) {
  Rational r(1);
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

constexpr int kPrecisionLadder[] = {64, 128, 256, 512, 1024};

/// Open interval around b^2 free of other real roots of the pairwise-product polynomial.
struct Gap {
  std::optional<Rational> lo, hi;
  bool contains(const Rational& a, const Rational& b) const {
    return (!lo || *lo < a) && (!hi || b < *hi);
  }
};

Gap square_gap(IntPolynomial f, const AlgebraicReal& b) {
  while (f[0] == 0) f = *exact_quotient(f, IntPolynomial::x());
  IntPolynomial p2 = squarefree_part(closure_combine(f, f, ClosureOp::product));
  std::vector<RootInterval> ivs = isolate_real_roots(p2);
  Rational w = pow2(-20);
  for (;;) {
    AlgebraicReal bb = b.refined(w);
    Rational lo = bb.lo() > 0 ? Rational(bb.lo()) : Rational(0);
    Rational lo2 = lo * lo, hi2 = bb.hi() * bb.hi();
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      if (ivs[i].hi < lo2 || ivs[i].lo > hi2) continue;
      ivs[i] = refine_root(p2, ivs[i], w);
      if (ivs[i].hi < lo2 || ivs[i].lo > hi2) continue;
      hits.push_back(i);
    }
    if (hits.size() == 1) {
      std::size_t k = hits.front();
      Gap g;
      if (k > 0) g.lo = refine_root(p2, ivs[k - 1], w).hi;
      if (k + 1 < ivs.size()) g.hi = refine_root(p2, ivs[k + 1], w).lo;
      return g;
    }
    if (hits.empty()) throw Error(ErrorKind::internal, "inconsistent", "b^2 is not a root of the product polynomial");
    w *= pow2(-8);
  }
}

struct Found {
  IntPolynomial factor;
};
struct Irreducible {};
struct Undecided {};
using SearchResult = std::variant<Found, Irreducible, Undecided>;

using cld = std::complex<long double>;

/// Looks for a proper monic integer factor by trying root subsets closed
/// under conjugation. c is monic, squarefree, degree >= 4, no integer roots.
SearchResult subset_search(const IntPolynomial& c) {
  const int n = c.degree();
  for (int bits : {64, 128, 256}) {
    auto discs = certified_roots(c, bits);
    if (!discs) continue;
    const std::size_t m = discs->size();
    std::vector<cld> centre(m);
    std::vector<long double> mod(m), rad(m);
    for (std::size_t i = 0; i < m; ++i) {
      centre[i] = cld(static_cast<long double>((*discs)[i].re.get_d()), static_cast<long double>((*discs)[i].im.get_d()));
      long double a = std::abs(centre[i]);
      // conversion to long double perturbs the centre by a few ulps
      rad[i] = static_cast<long double>((*discs)[i].radius.get_d()) * (1 + 1e-12L) + 1e-15L * (a + 1);
      mod[i] = a;
    }
    // certified conjugate pairing: conj(D_i) must meet exactly one disc
    std::vector<int> partner(m, -1);
    bool paired = true;
    for (std::size_t i = 0; i < m && paired; ++i) {
      int hit = -1, count = 0;
      for (std::size_t j = 0; j < m; ++j) {
        Rational dre = (*discs)[i].re - (*discs)[j].re;
        Rational dim = -(*discs)[i].im - (*discs)[j].im;
        Rational r = (*discs)[i].radius + (*discs)[j].radius;
        if (dre * dre + dim * dim <= r * r) {
          hit = static_cast<int>(j);
          ++count;
        }
      }
      if (count != 1) paired = false;
      partner[i] = hit;
    }
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<char> used(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      used[i] = 1;
      std::vector<std::size_t> orbit{i};
      if (paired && partner[i] >= 0 && !used[static_cast<std::size_t>(partner[i])]) {
        orbit.push_back(static_cast<std::size_t>(partner[i]));
        used[static_cast<std::size_t>(partner[i])] = 1;
      }
      orbits.push_back(orbit);
    }
    if (orbits.size() > 18) return Undecided{};

    bool undecided = false;
    const std::uint64_t masks = std::uint64_t{1} << orbits.size();
    for (std::uint64_t mask = 1; mask + 1 < masks; ++mask) {
      std::vector<std::size_t> roots;
      for (std::size_t o = 0; o < orbits.size(); ++o)
        if (mask >> o & 1) roots.insert(roots.end(), orbits[o].begin(), orbits[o].end());
      const int k = static_cast<int>(roots.size());
      if (k < 2 || 2 * k > n) continue;
      std::vector<cld> prod{1};
      std::vector<long double> emod{1}, ecen{1};
      for (std::size_t r : roots) {
        std::vector<cld> np(prod.size() + 1, 0);
        std::vector<long double> nm(prod.size() + 1, 0), nc(prod.size() + 1, 0);
        for (std::size_t j = 0; j < prod.size(); ++j) {
          np[j] += prod[j];
          np[j + 1] -= prod[j] * centre[r];
          nm[j] += emod[j];
          nm[j + 1] += emod[j] * (mod[r] + rad[r]);
          nc[j] += ecen[j];
          nc[j + 1] += ecen[j] * mod[r];
        }
        prod = std::move(np);
        emod = std::move(nm);
        ecen = std::move(nc);
      }
      // prod[j] is the coefficient of x^(k-j)
      std::vector<BigInt> desc{1};
      bool reject = false, unsure = false;
      for (int j = 1; j <= k && !reject; ++j) {
        auto sj = static_cast<std::size_t>(j);
        long double err = (emod[sj] - ecen[sj]) * (1 + 1e-12L) + 1e-15L * emod[sj];
        if (!std::isfinite(err) || err > 1e15L) {
          unsure = true;
          break;
        }
        if (std::fabs(prod[sj].imag()) > err) {
          reject = true;
          break;
        }
        long double lo = std::ceil(prod[sj].real() - err), hi = std::floor(prod[sj].real() + err);
        if (lo > hi)
          reject = true;
        else if (lo < hi)
          unsure = true;
        else
          desc.push_back(BigInt(static_cast<long>(lo)));
      }
      if (reject) continue;
      if (unsure) {
        undecided = true;
        continue;
      }
      std::vector<BigInt> asc(desc.rbegin(), desc.rend());
      IntPolynomial g(asc);
      if (exact_quotient(c, g)) return Found{g};
    }
    if (!undecided) return Irreducible{};
  }
  return Undecided{};
}

void split(const IntPolynomial& c, std::vector<FactorPiece>& out) {
  if (c.degree() < 1) return;
  if (c.degree() <= 3) {
    out.push_back({c, true});
    return;
  }
  SearchResult r = subset_search(c);
  if (auto* f = std::get_if<Found>(&r)) {
    split(f->factor, out);
    split(*exact_quotient(c, f->factor), out);
  } else {
    out.push_back({c, std::holds_alternative<Irreducible>(r)});
  }
}

}  // namespace

std::vector<FactorPiece> factor_best_effort(const IntPolynomial& c) {
  std::vector<FactorPiece> out;
  IntPolynomial work = c;
  if (work.degree() >= 1 && work[0] == 0) {
    out.push_back({IntPolynomial::x(), true});
    work = *exact_quotient(work, IntPolynomial::x());
  }
  std::vector<BigInt> integer_roots;
  for (auto iv : isolate_real_roots(work)) {
    iv = refine_root(work, iv, Rational(1, 4));
    BigInt lo, hi;
    mpz_cdiv_q(lo.get_mpz_t(), iv.lo.get_num_mpz_t(), iv.lo.get_den_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), iv.hi.get_num_mpz_t(), iv.hi.get_den_mpz_t());
    for (BigInt k = lo; k <= hi; ++k)
      if (work(k) == 0) integer_roots.push_back(k);
  }
  for (const auto& k : integer_roots) {
    IntPolynomial lin = IntPolynomial::x() - IntPolynomial::constant(k);
    out.push_back({lin, true});
    work = *exact_quotient(work, lin);
  }
  split(work, out);
  return out;
}

DominanceResult dominates_all_roots(const IntPolynomial& f, const AlgebraicReal& b) {
  if (f.degree() <= 1) return DominanceResult::dominated;
  std::optional<Gap> gap;
  for (int bits : kPrecisionLadder) {
    auto discs = certified_roots(f, bits);
    if (!discs) continue;
    AlgebraicReal bb = b.refined(pow2(-(bits + 4)));
    bool settled = true;
    for (const auto& d : *discs) {
      Rational up = modulus_upper(d, bits + 8);
      if (up <= bb.lo()) continue;
      Rational lo = modulus_lower(d, bits + 8);
      if (lo > bb.hi()) return DominanceResult::violated;
      // |z| is within reach of b: prove |z|^2 = b^2 through the product polynomial
      if (!gap) gap = square_gap(f, b);
      if (gap->contains(lo * lo, up * up)) continue;
      settled = false;
    }
    if (settled) return DominanceResult::dominated;
  }
  return DominanceResult::undecided;
}

CurvatureVerdict check_condition_c(const IntPolynomial& p, bool assume_irreducible) {
  if (p.is_zero()) throw Error(ErrorKind::precondition, "zero_polynomial", "the polynomial is zero");
  if (!p.is_monic())
    throw Error(ErrorKind::precondition, "not_monic", "the polynomial is not monic, so its roots are not algebraic integers");
  CurvatureVerdict v;
  IntPolynomial sqf = squarefree_part(p);

  std::vector<FactorPiece> pieces;
  if (assume_irreducible)
    pieces.push_back({sqf, true});
  else
    pieces = factor_best_effort(sqf);
  auto status_for = [&](const FactorPiece& piece) {
    if (assume_irreducible) return Irreducibility::assumed;
    if (!piece.irreducible) return Irreducibility::unverified;
    return pieces.size() == 1 ? Irreducibility::verified : Irreducibility::reducible_factored;
  };

  auto b = largest_real_root(sqf);
  if (!b) {
    bool all = true;
    for (const auto& piece : pieces) all = all && piece.irreducible;
    v.irreducibility = assume_irreducible ? Irreducibility::assumed
                       : !all             ? Irreducibility::unverified
                       : pieces.size() == 1 ? Irreducibility::verified
                                            : Irreducibility::reducible_factored;
    v.status = CurvatureStatus::not_realizable;
    v.reason = "no real root";
    return v;
  }
  const FactorPiece* home = nullptr;
  for (const auto& piece : pieces)
    if (SturmSequence(piece.poly).count_closed(b->lo(), b->hi()) > 0) home = &piece;
  if (!home) throw Error(ErrorKind::internal, "inconsistent", "no factor vanishes at the largest real root");
  v.factor = home->poly;
  v.irreducibility = status_for(*home);
  v.b = AlgebraicReal::from_isolated(home->poly, {b->lo(), b->hi()});
  if (compare(*v.b, Rational(0)) < 0) {
    v.status = CurvatureStatus::not_realizable;
    v.reason = "the largest real root is negative";
    return v;
  }
  switch (dominates_all_roots(home->poly, *v.b)) {
    case DominanceResult::dominated:
      v.status = CurvatureStatus::realizable;
      v.reason = "every root of the factor has modulus at most b";
      break;
    case DominanceResult::violated:
      if (v.irreducibility == Irreducibility::unverified) {
        v.status = CurvatureStatus::indeterminate;
        v.reason = "a root of larger modulus exists, but the factor holding b is not proven irreducible";
      } else {
        v.status = CurvatureStatus::not_realizable;
        v.reason = "a conjugate of b has larger modulus";
      }
      break;
    case DominanceResult::undecided:
      v.status = CurvatureStatus::indeterminate;
      v.reason = "root moduli could not be separated at the available precision";
      break;
  }
  return v;
}

IntPolynomial closure_combine(const IntPolynomial& p, const IntPolynomial& q, ClosureOp op, int ell) {
  if (!p.is_monic()) throw Error(ErrorKind::precondition, "nonmonic_input", "the first polynomial is not monic");
  if (op == ClosureOp::root) {
    if (ell < 1) throw Error(ErrorKind::precondition, "bad_root_index", "the root index must be at least 1");
    return p.compose_power(ell);
  }
  if (!q.is_monic()) throw Error(ErrorKind::precondition, "nonmonic_input", "the second polynomial is not monic");
  const int n = p.degree(), m = q.degree();
  PolyInY g(static_cast<std::size_t>(n) + 1);
  if (op == ClosureOp::sum) {
    // p(x - y) = Σ_k a_k Σ_j C(k, j) x^(k-j) (-y)^j
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= k; ++j) {
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
        BigInt coef = p[k] * binom;
        if (j % 2) coef = -coef;
        g[static_cast<std::size_t>(j)] += IntPolynomial::monomial(coef, k - j);
      }
  } else {
    if (q[0] == 0) throw Error(ErrorKind::precondition, "zero_constant_term", "the second polynomial has a zero root");
    // y^n p(x / y) = Σ_k a_k x^k y^(n-k)
    for (int k = 0; k <= n; ++k) g[static_cast<std::size_t>(n - k)] = IntPolynomial::monomial(p[k], k);
  }
  return resultant_in_y(q, g, n * m);
}

Quiver realize_companion(const std::vector<BigInt>& coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::usage, "empty_coefficients", "at least one coefficient is needed");
  for (const auto& a : coeffs)
    if (a < 0) throw Error(ErrorKind::precondition, "negative_coefficient", "coefficients must be nonnegative");
  if (coeffs.back() == 0)
    throw Error(ErrorKind::precondition, "trailing_zero", "the last coefficient must be positive for strong connectivity");
  Quiver q;
  const auto s = coeffs.size() - 1;
  for (std::size_t i = 0; i <= s; ++i) q.add_vertex("v" + std::to_string(i));
  for (std::size_t i = 0; i < s; ++i)
    q.add_arrow("c" + std::to_string(i), static_cast<int>(i), static_cast<int>(i + 1));
  for (std::size_t i = 0; i <= s; ++i)
    for (BigInt j = 0; j < coeffs[i]; ++j)
      q.add_arrow("r" + std::to_string(i) + "_" + j.get_str(), static_cast<int>(i), 0);
  return q;
}

}  // namespace syzcx
