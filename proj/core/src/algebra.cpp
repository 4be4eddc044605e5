#include "syzcx/algebra.hpp"

#include <algorithm>
#include <set>

#include "syzcx/error.hpp"

namespace syzcx {

int Quiver::add_vertex(const std::string& id) {
  if (vertex_index_.count(id))
    throw Error(ErrorKind::parse, "duplicate_identifier", "vertex '" + id + "' declared twice");
  int v = static_cast<int>(vertices_.size());
  vertices_.push_back(id);
  out_.emplace_back();
  vertex_index_[id] = v;
  return v;
}

int Quiver::add_arrow(const std::string& id, int source, int target) {
  if (arrow_index_.count(id))
    throw Error(ErrorKind::parse, "duplicate_identifier", "arrow '" + id + "' declared twice");
  auto n = static_cast<int>(vertices_.size());
  if (source < 0 || source >= n || target < 0 || target >= n)
    throw Error(ErrorKind::parse, "unknown_reference", "arrow '" + id + "' has an undeclared endpoint");
  int a = static_cast<int>(arrows_.size());
  arrows_.push_back({id, source, target});
  out_[static_cast<std::size_t>(source)].push_back(a);
  arrow_index_[id] = a;
  return a;
}

std::optional<int> Quiver::find_vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::find_arrow(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) return c;
  if (auto c = a.arrows <=> b.arrows; c != 0) return c;
  return a.source <=> b.source;
}

std::optional<Path> make_path(const Quiver& q, const std::vector<int>& arrows) {
  if (arrows.empty()) return std::nullopt;
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source) return std::nullopt;
  return Path{q.arrow(arrows.front()).source, q.arrow(arrows.back()).target, arrows};
}

std::string path_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + q.vertex(p.source);
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '.';
    out += q.arrow(p.arrows[i]).id;
  }
  return out;
}

std::optional<Path> concat(const Path& p, const Path& q) {
  if (p.target != q.source) return std::nullopt;
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

namespace {

bool contains_factor(const std::vector<int>& word, const std::vector<int>& factor) {
  return std::search(word.begin(), word.end(), factor.begin(), factor.end()) != word.end();
}

}  // namespace

bool MonomialAlgebra::has_relation_suffix(const std::vector<int>& word) const {
  for (int len : relation_lengths_) {
    if (static_cast<std::size_t>(len) > word.size()) break;
    std::vector<int> tail(word.end() - len, word.end());
    if (relation_set_.count(tail)) return true;
  }
  return false;
}

MonomialAlgebra::MonomialAlgebra(Quiver quiver, std::vector<Path> relations) : quiver_(std::move(quiver)) {
  for (const auto& r : relations)
    if (r.length() < 2)
      throw Error(ErrorKind::validation, "relation_too_short",
                  "relation '" + path_string(quiver_, r) + "' has length " + std::to_string(r.length()));
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  // keep only relations with no other relation as a proper factor
  for (const auto& r : relations) {
    bool redundant = false;
    for (const auto& s : relations)
      if (s.length() < r.length() && contains_factor(r.arrows, s.arrows)) {
        redundant = true;
        break;
      }
    if (!redundant) relations_.push_back(r);
  }
  std::set<int> lengths;
  for (const auto& r : relations_) {
    relation_set_.insert(r.arrows);
    lengths.insert(static_cast<int>(r.length()));
    max_rel_ = std::max(max_rel_, static_cast<int>(r.length()));
  }
  relation_lengths_.assign(lengths.begin(), lengths.end());

  // Forbidden-factor automaton: states are nonzero paths of length <= W.
  const std::size_t W = max_rel_ > 0 ? static_cast<std::size_t>(max_rel_ - 1) : 0;
  std::map<Path, int> state_index;
  std::vector<Path> states;
  for (int v = 0; v < static_cast<int>(quiver_.vertex_count()); ++v) {
    state_index[Path::trivial(v)] = static_cast<int>(states.size());
    states.push_back(Path::trivial(v));
  }
  std::vector<std::vector<int>> next;
  for (std::size_t i = 0; i < states.size(); ++i) {
    next.emplace_back();
    Path s = states[i];
    for (int a : quiver_.out_arrows(s.target)) {
      std::vector<int> word = s.arrows;
      word.push_back(a);
      if (has_relation_suffix(word)) continue;
      std::vector<int> tail(word.end() - static_cast<std::ptrdiff_t>(std::min(W, word.size())), word.end());
      Path t = tail.empty() ? Path::trivial(quiver_.arrow(a).target) : *make_path(quiver_, tail);
      auto [it, inserted] = state_index.emplace(t, static_cast<int>(states.size()));
      if (inserted) states.push_back(t);
      next[i].push_back(it->second);
    }
  }
  automaton_states_ = states.size();

  // cycle detection (iterative DFS)
  std::vector<char> color(states.size(), 0);
  for (std::size_t root = 0; root < states.size(); ++root) {
    if (color[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(root), 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [u, k] = stack.back();
      auto& succ = next[static_cast<std::size_t>(u)];
      if (k < succ.size()) {
        int w = succ[k++];
        if (color[static_cast<std::size_t>(w)] == 1)
          throw Error(ErrorKind::validation, "infinite_dimensional",
                      "some cycle has all of its powers nonzero, so the algebra is infinite dimensional");
        if (color[static_cast<std::size_t>(w)] == 0) {
          color[static_cast<std::size_t>(w)] = 1;
          stack.push_back({w, 0});
        }
      } else {
        color[static_cast<std::size_t>(u)] = 2;
        stack.pop_back();
      }
    }
  }

  // enumerate nonzero paths layer by layer
  std::vector<Path> layer;
  for (int v = 0; v < static_cast<int>(quiver_.vertex_count()); ++v) layer.push_back(Path::trivial(v));
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    std::vector<Path> nxt;
    for (const auto& p : layer) {
      paths_.push_back(p);
      for (int a : quiver_.out_arrows(p.target)) {
        std::vector<int> word = p.arrows;
        word.push_back(a);
        if (has_relation_suffix(word)) continue;
        nxt.push_back(Path{p.source, quiver_.arrow(a).target, std::move(word)});
      }
    }
    layer = std::move(nxt);
  }
  for (std::size_t i = quiver_.vertex_count(); i < paths_.size(); ++i)
    positive_index_[paths_[i].arrows] = static_cast<int>(i);
  ext_.assign(paths_.size(), std::vector<int>(quiver_.arrow_count(), -1));
  for (std::size_t i = 0; i < paths_.size(); ++i)
    for (int a : quiver_.out_arrows(paths_[i].target)) {
      std::vector<int> word = paths_[i].arrows;
      word.push_back(a);
      auto it = positive_index_.find(word);
      if (it != positive_index_.end()) ext_[i][static_cast<std::size_t>(a)] = it->second;
    }
}

bool MonomialAlgebra::is_nonzero(const Path& p) const {
  for (const auto& r : relations_)
    if (contains_factor(p.arrows, r.arrows)) return false;
  return true;
}

std::optional<int> MonomialAlgebra::index_of(const Path& p) const {
  if (p.arrows.empty()) {
    if (p.source < 0 || p.source >= static_cast<int>(quiver_.vertex_count())) return std::nullopt;
    return p.source;
  }
  auto it = positive_index_.find(p.arrows);
  if (it == positive_index_.end()) return std::nullopt;
  return it->second;
}

Extension extend(const Path& p, const Path& q, const MonomialAlgebra& algebra) {
  auto c = concat(p, q);
  if (!c) return {std::nullopt, ZeroReason::non_composable};
  if (!algebra.is_nonzero(*c)) return {std::nullopt, ZeroReason::relation};
  return {std::move(c), ZeroReason::none};
}

}  // namespace syzcx
