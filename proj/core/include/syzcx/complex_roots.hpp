#pragma once

#include <optional>
#include <vector>

#include "syzcx/polynomial.hpp"

namespace syzcx {

/// Closed disc with a dyadic rational centre and a rational radius bound.
/// Produced discs are pairwise disjoint and each holds exactly one root.
struct CertifiedDisc {
  Rational re, im;
  Rational radius;
};

/// Rational r with r >= sqrt(q), within 2^-bits of it.
Rational upper_sqrt(const Rational& q, int bits);
/// Rational r with 0 <= r <= sqrt(q), within 2^-bits of it.
Rational lower_sqrt(const Rational& q, int bits);

/// Inclusion discs for every complex root of a squarefree polynomial of
/// degree >= 1. Centres come from Aberth iteration in long double, then
/// Newton steps in exact arithmetic rounded to `bits` fractional bits.
/// Radii are n·|W_i| (Weierstrass corrections, evaluated exactly). Returns
/// nullopt when the discs fail to separate.
std::optional<std::vector<CertifiedDisc>> certified_roots(const IntPolynomial& squarefree, int bits);

/// Bounds on |z| over the disc.
Rational modulus_upper(const CertifiedDisc& d, int bits);
Rational modulus_lower(const CertifiedDisc& d, int bits);

}  // namespace syzcx
