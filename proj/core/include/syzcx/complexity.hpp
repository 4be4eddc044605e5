#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "syzcx/algebra.hpp"
#include "syzcx/algebraic_real.hpp"
#include "syzcx/spectra.hpp"
#include "syzcx/syzygy.hpp"

namespace syzcx {

/// [0] (finite projective dimension, or the zero module) or [b^n n^l].
class ComplexityClass {
 public:
  enum class Kind { zero, polyexp };

  static ComplexityClass zero(int projective_dimension);
  static ComplexityClass zero_module();
  static ComplexityClass polyexp(AlgebraicReal base, int degree);

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::zero; }
  /// nullopt for the zero module.
  std::optional<int> projective_dimension() const noexcept { return pd_; }
  const AlgebraicReal& base() const noexcept { return base_; }
  int degree() const noexcept { return degree_; }

  /// "[0]" or e.g. "[1.618033988750^n*n^1]".
  std::string to_string() const;

 private:
  Kind kind_ = Kind::zero;
  std::optional<int> pd_;
  AlgebraicReal base_;
  int degree_ = 0;
};

/// Zero < every PolyExp; PolyExp ordered by (base, degree). Zero payloads are ignored.
std::strong_ordering compare(const ComplexityClass& a, const ComplexityClass& b);
/// Same class; Zero payloads are ignored.
bool same_class(const ComplexityClass& a, const ComplexityClass& b);

ComplexityClass join(const ComplexityClass& a, const ComplexityClass& b);
ComplexityClass convolve(const ComplexityClass& a, const ComplexityClass& b);

/// Class of the path-count sequence from v.
ComplexityClass vertex_complexity(const Condensation& c, int v);

struct ComplexityReport {
  ComplexityClass cls;
  BuiltQuiver built;
  Condensation condensation;
  std::vector<ComplexityClass> start_classes;
};

ComplexityReport module_complexity(const MonomialAlgebra& a, const ModuleExpr& m);

/// Certified lower bound from a partial syzygy quiver. Throws invalid_partial.
ComplexityClass lower_bound_from_partial(const SyzygyQuiver& q, const MonomialAlgebra& a, int v);

struct RealizedClass {
  std::string algebra_text;
  /// module_names[s][i] is the simple at (vertex i of H, level s).
  std::vector<std::vector<std::string>> module_names;
};

/// Radical-square-zero algebra on the box product of H with the chain
/// 0 <- 1 <- ... <- l. Throws not_strongly_connected or no_arrows.
RealizedClass realize_class(const Quiver& h, int ell);

/// Replaces every arrow by a path of length l.
Quiver subdivide(const Quiver& q, int ell);

std::vector<std::pair<int, int>> arrow_pairs(const Quiver& q);

struct EmpiricalCheck {
  bool ok = false;
  double min_ratio = 0;
  double max_ratio = 0;
};

/// Heuristic bounded-ratio witness of f against c on the window [n0, n1].
/// Throws window_too_small when n1 - n0 < 8.
EmpiricalCheck empirical_class_check(const std::vector<BigInt>& f, const ComplexityClass& c, int n0, int n1);

}  // namespace syzcx
