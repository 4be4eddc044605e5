#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "syzcx/algebra.hpp"
#include "syzcx/parser.hpp"
#include "syzcx/polynomial.hpp"

namespace syzcx {

/// Canonical cyclic module Λe_v / Σ_{w∈killers} Λw. Killers form a prefix
/// antichain of nonzero positive-length paths starting at v, kept sorted.
struct CyclicKey {
  int vertex = 0;
  std::vector<Path> killers;

  bool is_projective() const noexcept { return killers.empty(); }
  friend auto operator<=>(const CyclicKey&, const CyclicKey&) = default;
  friend bool operator==(const CyclicKey&, const CyclicKey&) = default;
};

/// Formal direct sum of cyclic modules with positive multiplicities.
class ModuleExpr {
 public:
  ModuleExpr() = default;
  explicit ModuleExpr(CyclicKey key, std::int64_t mult = 1) { add(std::move(key), mult); }

  void add(CyclicKey key, std::int64_t mult = 1);
  void add(const ModuleExpr& other, std::int64_t scale = 1);

  bool empty() const noexcept { return terms_.empty(); }
  const std::map<CyclicKey, std::int64_t>& terms() const noexcept { return terms_; }
  /// True iff every summand of *this occurs in `other` with at least the same multiplicity.
  bool is_submultiset_of(const ModuleExpr& other) const;

  friend bool operator==(const ModuleExpr&, const ModuleExpr&) = default;

 private:
  std::map<CyclicKey, std::int64_t> terms_;
};

CyclicKey simple_key(const MonomialAlgebra& a, int v);
CyclicKey projective_key(int v);
/// Λp as a cyclic module: (t(p), minimal killers of p). p must be nonzero.
CyclicKey path_key(const MonomialAlgebra& a, const Path& p);

/// Checks that a key is well formed over the algebra (killers nonzero,
/// positive length, start at the vertex, prefix antichain).
bool valid_key(const MonomialAlgebra& a, const CyclicKey& key);

/// Prefix-minimal nonzero w with s(w) = t(p) and p.w zero. Throws zero_path.
std::vector<Path> minimal_killers(const Path& p, const MonomialAlgebra& a);

ModuleExpr syzygy_step(const ModuleExpr& m, const MonomialAlgebra& a);

/// k-dimension of a cyclic module.
std::int64_t key_dimension(const CyclicKey& key, const MonomialAlgebra& a);
std::int64_t module_dimension(const ModuleExpr& m, const MonomialAlgebra& a);

/// The module named in an algebra file. Throws zero_path for M(p) with p zero.
ModuleExpr module_expr(const ModuleDef& def, const MonomialAlgebra& a);

/// Multidigraph whose vertices carry module labels; parallel arrows repeat.
struct SyzygyQuiver {
  std::vector<ModuleExpr> labels;
  std::vector<std::pair<int, int>> arrows;
  bool partial = false;

  std::size_t vertex_count() const noexcept { return labels.size(); }
  std::vector<std::vector<int>> successors() const;
};

struct StartVertex {
  int vertex;
  std::int64_t multiplicity;
};

struct BuiltQuiver {
  SyzygyQuiver quiver;
  /// One entry per non-projective summand of the input module.
  std::vector<StartVertex> starts;
  /// Projective summands of the input module (no vertex is created for them).
  ModuleExpr projective_part;
};

/// Breadth-first closure under syzygy_step, deduplicated by key.
BuiltQuiver build_syzygy_quiver(const ModuleExpr& m, const MonomialAlgebra& a);

/// f(n) = number of paths of length n starting at v, for n = 0..N.
std::vector<BigInt> count_paths(const SyzygyQuiver& q, int v, int N);

/// Σ_w (paths v→w of length n)·weight(w), for n = 0..N.
std::vector<BigInt> weighted_path_counts(const SyzygyQuiver& q, int v, int N, const std::vector<BigInt>& weight);

struct SinkfreeResult {
  SyzygyQuiver quiver;
  int carrier;
};

/// Repeatedly deletes sinks and prepends a chain vertex carrying the
/// original module. Throws finite_projective_dimension when no cycle is
/// reachable from v.
SinkfreeResult sinkfree_reduce(const SyzygyQuiver& q, int v);

/// Every vertex's out-neighbourhood is a sub-multiset of the syzygy of its label.
bool validate_partial(const SyzygyQuiver& q, const MonomialAlgebra& a);

}  // namespace syzcx
