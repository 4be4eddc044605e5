#include "syzcx/syzygy.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "syzcx/error.hpp"

namespace syzcx {

void ModuleExpr::add(CyclicKey key, std::int64_t mult) {
  if (mult <= 0) return;
  terms_[std::move(key)] += mult;
}

void ModuleExpr::add(const ModuleExpr& other, std::int64_t scale) {
  for (const auto& [k, m] : other.terms_) add(k, m * scale);
}

bool ModuleExpr::is_submultiset_of(const ModuleExpr& other) const {
  for (const auto& [k, m] : terms_) {
    auto it = other.terms_.find(k);
    if (it == other.terms_.end() || it->second < m) return false;
  }
  return true;
}

CyclicKey simple_key(const MonomialAlgebra& a, int v) {
  CyclicKey k{v, {}};
  for (int arrow : a.quiver().out_arrows(v)) k.killers.push_back(*make_path(a.quiver(), {arrow}));
  std::sort(k.killers.begin(), k.killers.end());
  return k;
}

CyclicKey projective_key(int v) { return CyclicKey{v, {}}; }

std::vector<Path> minimal_killers(const Path& p, const MonomialAlgebra& a) {
  auto idx = a.index_of(p);
  if (!idx)
    throw Error(ErrorKind::validation, "zero_path", "path '" + path_string(a.quiver(), p) + "' is zero in the algebra");
  std::vector<Path> out;
  std::vector<std::pair<int, int>> stack{{p.target, *idx}};
  while (!stack.empty()) {
    auto [u, pu] = stack.back();
    stack.pop_back();
    for (int arrow : a.quiver().out_arrows(a.nonzero_paths()[static_cast<std::size_t>(u)].target)) {
      int u2 = a.extend_by_arrow(u, arrow);
      if (u2 < 0) continue;
      int pu2 = a.extend_by_arrow(pu, arrow);
      if (pu2 < 0)
        out.push_back(a.nonzero_paths()[static_cast<std::size_t>(u2)]);
      else
        stack.push_back({u2, pu2});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CyclicKey path_key(const MonomialAlgebra& a, const Path& p) { return CyclicKey{p.target, minimal_killers(p, a)}; }

bool valid_key(const MonomialAlgebra& a, const CyclicKey& key) {
  if (key.vertex < 0 || key.vertex >= static_cast<int>(a.quiver().vertex_count())) return false;
  for (const auto& w : key.killers) {
    if (w.length() == 0 || w.source != key.vertex || !a.index_of(w)) return false;
  }
  for (std::size_t i = 0; i < key.killers.size(); ++i)
    for (std::size_t j = 0; j < key.killers.size(); ++j) {
      if (i == j) continue;
      const auto& x = key.killers[i].arrows;
      const auto& y = key.killers[j].arrows;
      if (x.size() <= y.size() && std::equal(x.begin(), x.end(), y.begin())) return false;
    }
  return std::is_sorted(key.killers.begin(), key.killers.end());
}

ModuleExpr syzygy_step(const ModuleExpr& m, const MonomialAlgebra& a) {
  ModuleExpr out;
  for (const auto& [key, mult] : m.terms())
    for (const auto& w : key.killers) out.add(path_key(a, w), mult);
  return out;
}

std::int64_t key_dimension(const CyclicKey& key, const MonomialAlgebra& a) {
  std::set<int> killers;
  for (const auto& w : key.killers)
    if (auto i = a.index_of(w)) killers.insert(*i);
  std::int64_t count = 1;
  std::vector<int> stack{key.vertex};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int arrow : a.quiver().out_arrows(a.nonzero_paths()[static_cast<std::size_t>(u)].target)) {
      int u2 = a.extend_by_arrow(u, arrow);
      if (u2 < 0 || killers.count(u2)) continue;
      ++count;
      stack.push_back(u2);
    }
  }
  return count;
}

std::int64_t module_dimension(const ModuleExpr& m, const MonomialAlgebra& a) {
  std::int64_t total = 0;
  for (const auto& [key, mult] : m.terms()) total += mult * key_dimension(key, a);
  return total;
}

ModuleExpr module_expr(const ModuleDef& def, const MonomialAlgebra& a) {
  ModuleExpr out;
  for (const auto& t : def.terms) {
    switch (t.kind) {
      case ModuleTerm::Kind::simple:
        out.add(simple_key(a, t.vertex), t.multiplicity);
        break;
      case ModuleTerm::Kind::projective:
        out.add(projective_key(t.vertex), t.multiplicity);
        break;
      case ModuleTerm::Kind::path:
        out.add(path_key(a, t.path), t.multiplicity);
        break;
    }
  }
  return out;
}

std::vector<std::vector<int>> SyzygyQuiver::successors() const {
  std::vector<std::vector<int>> s(labels.size());
  for (auto [f, t] : arrows) s[static_cast<std::size_t>(f)].push_back(t);
  return s;
}

BuiltQuiver build_syzygy_quiver(const ModuleExpr& m, const MonomialAlgebra& a) {
  BuiltQuiver out;
  std::map<CyclicKey, int> index;
  std::vector<CyclicKey> keys;
  auto vertex_for = [&](const CyclicKey& k) {
    auto [it, inserted] = index.emplace(k, static_cast<int>(keys.size()));
    if (inserted) {
      keys.push_back(k);
      out.quiver.labels.emplace_back(k);
    }
    return it->second;
  };
  for (const auto& [key, mult] : m.terms()) {
    if (key.is_projective())
      out.projective_part.add(key, mult);
    else
      out.starts.push_back({vertex_for(key), mult});
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    ModuleExpr omega = syzygy_step(ModuleExpr(keys[i]), a);
    for (const auto& [k, mult] : omega.terms()) {
      int j = vertex_for(k);
      for (std::int64_t r = 0; r < mult; ++r) out.quiver.arrows.emplace_back(static_cast<int>(i), j);
    }
  }
  return out;
}

std::vector<BigInt> weighted_path_counts(const SyzygyQuiver& q, int v, int N, const std::vector<BigInt>& weight) {
  std::vector<BigInt> x(q.vertex_count(), 0), f;
  x[static_cast<std::size_t>(v)] = 1;
  for (int n = 0; n <= N; ++n) {
    BigInt total = 0;
    for (std::size_t w = 0; w < x.size(); ++w) total += x[w] * weight[w];
    f.push_back(total);
    if (n == N) break;
    std::vector<BigInt> y(x.size(), 0);
    for (auto [from, to] : q.arrows) y[static_cast<std::size_t>(to)] += x[static_cast<std::size_t>(from)];
    x = std::move(y);
  }
  return f;
}

std::vector<BigInt> count_paths(const SyzygyQuiver& q, int v, int N) {
  return weighted_path_counts(q, v, N, std::vector<BigInt>(q.vertex_count(), 1));
}

namespace {

bool cycle_reachable(const SyzygyQuiver& q, int v) {
  auto succ = q.successors();
  std::vector<char> color(q.vertex_count(), 0);
  std::vector<std::pair<int, std::size_t>> stack{{v, 0}};
  color[static_cast<std::size_t>(v)] = 1;
  while (!stack.empty()) {
    auto& [u, k] = stack.back();
    const auto& s = succ[static_cast<std::size_t>(u)];
    if (k < s.size()) {
      int w = s[k++];
      if (color[static_cast<std::size_t>(w)] == 1) return true;
      if (color[static_cast<std::size_t>(w)] == 0) {
        color[static_cast<std::size_t>(w)] = 1;
        stack.push_back({w, 0});
      }
    } else {
      color[static_cast<std::size_t>(u)] = 2;
      stack.pop_back();
    }
  }
  return false;
}

}  // namespace

SinkfreeResult sinkfree_reduce(const SyzygyQuiver& q, int v) {
  if (q.partial) throw Error(ErrorKind::precondition, "partial_quiver", "sink-free reduction needs a complete quiver");
  if (!cycle_reachable(q, v))
    throw Error(ErrorKind::precondition, "finite_projective_dimension",
                "no cycle is reachable, so the module has finite projective dimension");
  SinkfreeResult cur{q, v};
  for (;;) {
    const SyzygyQuiver& g = cur.quiver;
    std::vector<int> outdeg(g.vertex_count(), 0);
    for (auto [f, t] : g.arrows) ++outdeg[static_cast<std::size_t>(f)];
    if (std::find(outdeg.begin(), outdeg.end(), 0) == outdeg.end()) return cur;

    std::vector<int> renumber(g.vertex_count(), -1);
    SyzygyQuiver next;
    for (std::size_t w = 0; w < g.vertex_count(); ++w)
      if (outdeg[w] > 0) {
        renumber[w] = static_cast<int>(next.labels.size());
        next.labels.emplace_back();
      }
    for (auto [f, t] : g.arrows) {
      // relabel by the syzygy, read off the out-neighbourhood
      next.labels[static_cast<std::size_t>(renumber[static_cast<std::size_t>(f)])].add(g.labels[static_cast<std::size_t>(t)]);
      if (renumber[static_cast<std::size_t>(t)] >= 0)
        next.arrows.emplace_back(renumber[static_cast<std::size_t>(f)], renumber[static_cast<std::size_t>(t)]);
    }
    int carrier = static_cast<int>(next.labels.size());
    next.labels.push_back(g.labels[static_cast<std::size_t>(cur.carrier)]);
    next.arrows.emplace_back(carrier, renumber[static_cast<std::size_t>(cur.carrier)]);
    cur = SinkfreeResult{std::move(next), carrier};
  }
}

bool validate_partial(const SyzygyQuiver& q, const MonomialAlgebra& a) {
  for (const auto& label : q.labels)
    for (const auto& [key, mult] : label.terms())
      if (!valid_key(a, key)) return false;
  std::vector<ModuleExpr> actual(q.vertex_count());
  for (auto [f, t] : q.arrows) actual[static_cast<std::size_t>(f)].add(q.labels[static_cast<std::size_t>(t)]);
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (!actual[v].is_submultiset_of(syzygy_step(q.labels[v], a))) return false;
  return true;
}

}  // namespace syzcx
