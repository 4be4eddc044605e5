#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzcx/algebra.hpp"
#include "syzcx/syzygy.hpp"

namespace syzcx {

/// Finite-dimensional algebra with a multiplicative basis: every product of
/// basis elements is a basis element or zero.
struct AlgebraTable {
  std::vector<std::string> labels;
  /// product[i][j] = index of b_i·b_j, or -1 for zero.
  std::vector<std::vector<int>> product;
  /// Primitive orthogonal idempotents summing to the identity.
  std::vector<int> idempotents;
  /// Basis elements generating the radical.
  std::vector<int> generators;

  std::size_t dimension() const noexcept { return labels.size(); }
  /// Associativity on all triples, idempotent orthogonality, identity sum.
  bool check() const;
};

/// Path-basis table of a monomial algebra (basis = nonzero paths,
/// idempotents = trivial paths, generators = arrows).
AlgebraTable table_of(const MonomialAlgebra& a);

/// Built-in tables by id; "xyz-local" is k[X,Y,Z]/(X², Y², Z², XZ, YZ).
std::optional<AlgebraTable> builtin_table(const std::string& id);

using SparseVector = std::vector<std::pair<int, std::uint32_t>>;  // sorted by index

/// Right module over an AlgebraTable, over the prime field F_p. Every basis
/// vector lies in one idempotent component.
struct Representation {
  std::uint32_t prime = 0;
  std::vector<int> vertex_of;
  /// action[g][j] = image of basis vector j under generator g.
  std::vector<std::vector<SparseVector>> action;

  std::size_t dimension() const noexcept { return vertex_of.size(); }
  std::vector<std::size_t> vertex_dimensions(std::size_t vertex_count) const;
};

Representation rep_of(const ModuleExpr& m, const MonomialAlgebra& a, std::uint32_t prime);

/// Simple module at idempotent v.
Representation simple_rep(const AlgebraTable& t, int v, std::uint32_t prime);

/// Kernel of a projective cover. Throws inconsistent if the cover map is not onto.
Representation syzygy_rep(const Representation& r, const AlgebraTable& t);

struct DimSequenceResult {
  std::vector<std::size_t> dims;
  bool capped = false;
};

/// SYZCX_DIM_CAP, or 200000.
std::size_t default_dim_cap();

/// dim Ω^0..Ω^N; stops early (capped = true) before building a module larger than `cap`.
DimSequenceResult dim_sequence(const Representation& r, const AlgebraTable& t, int n, std::size_t cap);

struct CrosscheckRow {
  std::size_t oracle;
  BigInt quiver;
  bool equal;
};

struct CrosscheckReport {
  std::vector<CrosscheckRow> rows;
  std::optional<int> first_mismatch;
  bool capped = false;
};

inline constexpr std::uint32_t kOraclePrimes[2] = {32749, 65521};

/// Oracle dimensions over two primes (run concurrently; must agree, else
/// prime_disagreement) against syzygy-quiver weighted path counts.
CrosscheckReport crosscheck(const MonomialAlgebra& a, const ModuleExpr& m, int n, std::size_t cap);

}  // namespace syzcx
