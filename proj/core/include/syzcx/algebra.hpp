#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace syzcx {

struct Arrow {
  std::string id;
  int source = 0;
  int target = 0;
};

/// Finite quiver; vertex and arrow order is declaration order.
class Quiver {
 public:
  /// Returns the new vertex index. Throws duplicate_identifier.
  int add_vertex(const std::string& id);
  /// Returns the new arrow index. Throws duplicate_identifier or unknown_reference.
  int add_arrow(const std::string& id, int source, int target);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const Arrow& arrow(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  /// Arrows leaving v, in declaration order.
  const std::vector<int>& out_arrows(int v) const { return out_.at(static_cast<std::size_t>(v)); }

  std::optional<int> find_vertex(const std::string& id) const;
  std::optional<int> find_arrow(const std::string& id) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> arrow_index_;
};

/// A path in traversal order. Length-0 paths are vertex markers e_v.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  static Path trivial(int v) { return Path{v, v, {}}; }
  std::size_t length() const noexcept { return arrows.size(); }

  /// Ordered by (length, arrow sequence, source).
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
  friend bool operator==(const Path& a, const Path& b) = default;
};

/// Builds a path from arrow indices; nullopt when consecutive arrows do not compose.
std::optional<Path> make_path(const Quiver& q, const std::vector<int>& arrows);

/// "a.b.g", or "e<vertex>" for a trivial path.
std::string path_string(const Quiver& q, const Path& p);

/// p.q as a raw path in the quiver (no relations applied); nullopt if t(p) != s(q).
std::optional<Path> concat(const Path& p, const Path& q);

/// Validated monomial algebra kQ/I with its nonzero paths enumerated.
class MonomialAlgebra {
 public:
  /// Normalizes the relations and checks finite dimensionality.
  /// Throws relation_too_short or infinite_dimensional.
  MonomialAlgebra(Quiver quiver, std::vector<Path> relations);

  const Quiver& quiver() const noexcept { return quiver_; }
  /// Normalized relations, sorted.
  const std::vector<Path>& relations() const noexcept { return relations_; }
  int max_relation_length() const noexcept { return max_rel_; }
  /// Every nonzero path, ordered by (length, arrow sequence); trivial paths
  /// come first in vertex order, so index v is e_v.
  const std::vector<Path>& nonzero_paths() const noexcept { return paths_; }
  std::size_t dimension() const noexcept { return paths_.size(); }
  /// Number of states of the forbidden-factor automaton.
  std::size_t automaton_states() const noexcept { return automaton_states_; }

  bool is_nonzero(const Path& p) const;
  /// Index into nonzero_paths(), or nullopt if p is zero.
  std::optional<int> index_of(const Path& p) const;
  /// Index of (path i).a, or -1 when zero or not composable.
  int extend_by_arrow(int i, int arrow) const { return ext_[static_cast<std::size_t>(i)][static_cast<std::size_t>(arrow)]; }

 private:
  Quiver quiver_;
  std::vector<Path> relations_;
  int max_rel_ = 0;
  std::vector<Path> paths_;
  std::map<std::vector<int>, int> positive_index_;
  std::vector<std::vector<int>> ext_;
  std::size_t automaton_states_ = 0;
  std::set<std::vector<int>> relation_set_;
  std::vector<int> relation_lengths_;

  bool has_relation_suffix(const std::vector<int>& word) const;
};

enum class ZeroReason { none, relation, non_composable };

struct Extension {
  std::optional<Path> path;
  ZeroReason reason = ZeroReason::none;
};

/// p.q in the algebra.
Extension extend(const Path& p, const Path& q, const MonomialAlgebra& algebra);

}  // namespace syzcx
