#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syzcx/algebra.hpp"
#include "syzcx/algebraic_real.hpp"
#include "syzcx/polynomial.hpp"

namespace syzcx {

enum class CurvatureStatus { realizable, not_realizable, indeterminate };

/// How much is known about the irreducible polynomial of b.
enum class Irreducibility {
  verified,            // the squarefree input is proven irreducible
  assumed,             // caller asserted irreducibility
  reducible_factored,  // input reducible, the factor holding b proven irreducible
  unverified,          // the factor holding b could not be proven irreducible
};

std::string to_string(CurvatureStatus s);
std::string to_string(Irreducibility s);

struct CurvatureVerdict {
  CurvatureStatus status = CurvatureStatus::indeterminate;
  std::optional<AlgebraicReal> b;
  Irreducibility irreducibility = Irreducibility::unverified;
  std::string reason;
  /// Factor of the squarefree input that contains b (when b exists).
  IntPolynomial factor;
};

/// Decides whether the largest real root of a monic integer polynomial is a
/// nonnegative algebraic integer dominating, in modulus, every root of its
/// irreducible polynomial. Throws zero_polynomial or not_monic.
CurvatureVerdict check_condition_c(const IntPolynomial& p, bool assume_irreducible);

struct FactorPiece {
  IntPolynomial poly;
  bool irreducible;  // proven
};

/// Splits a monic squarefree polynomial: the factor x, linear integer
/// factors, then a search over certified root subsets. Pieces the search
/// cannot settle are returned with irreducible = false.
std::vector<FactorPiece> factor_best_effort(const IntPolynomial& monic_squarefree);

enum class DominanceResult { dominated, violated, undecided };

/// Whether every root of the squarefree f has modulus <= b, where b is a
/// nonnegative real root of f.
DominanceResult dominates_all_roots(const IntPolynomial& f, const AlgebraicReal& b);

enum class ClosureOp { sum, product, root };

/// Polynomial annihilating b+c, b·c or b^(1/l) for roots b of p and c of q.
/// Throws nonmonic_input, zero_constant_term, bad_root_index.
IntPolynomial closure_combine(const IntPolynomial& p, const IntPolynomial& q, ClosureOp op, int ell = 1);

/// Quiver v0..vs with chain arrows v_i -> v_{i+1} and a_i arrows v_i -> v0;
/// its adjacency matrix has characteristic polynomial x^{s+1} - Σ a_i x^{s-i}.
/// Throws trailing_zero or negative_coefficient.
Quiver realize_companion(const std::vector<BigInt>& coeffs);

}  // namespace syzcx
