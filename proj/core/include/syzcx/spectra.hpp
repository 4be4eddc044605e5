#pragma once

#include <utility>
#include <vector>

#include "syzcx/algebraic_real.hpp"
#include "syzcx/int_matrix.hpp"
#include "syzcx/polynomial.hpp"

namespace syzcx {

/// det(xI - M), division-free (Berkowitz).
IntPolynomial char_poly(const IntMatrix& m);

/// Largest real root of the characteristic polynomial; 0 (defined by x) for
/// the 1x1 zero matrix. For an irreducible nonnegative matrix this is the
/// spectral radius.
AlgebraicReal perron_root(const IntMatrix& adjacency);

/// Exact test that two Perron roots coincide.
bool equal_radius(const AlgebraicReal& r1, const AlgebraicReal& r2);

struct Component {
  std::vector<int> members;  // increasing
  IntMatrix adjacency;       // restricted to members, in member order
  AlgebraicReal rho;
  bool trivial() const { return rho.is_zero(); }
};

/// Strongly connected components in reverse-topological order: every arrow
/// between distinct components runs from a later one to an earlier one.
struct Condensation {
  std::vector<Component> components;
  std::vector<int> component_of;
  /// Distinct successor components, increasing.
  std::vector<std::vector<int>> dag;
};

/// Quiver given as a vertex count and arrow list (parallel arrows allowed).
Condensation scc_condense(std::size_t vertex_count, const std::vector<std::pair<int, int>>& arrows);

/// Adjacency matrix of a whole quiver.
IntMatrix adjacency_matrix(std::size_t vertex_count, const std::vector<std::pair<int, int>>& arrows);

}  // namespace syzcx
