#include "syzcx/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <queue>
#include <set>

#include "syzcx/error.hpp"

namespace syzcx {

bool AlgebraTable::check() const {
  const auto n = static_cast<int>(dimension());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int ij = product[i][j], jk = product[j][k];
        int left = ij < 0 ? -1 : product[ij][k];
        int right = jk < 0 ? -1 : product[i][jk];
        if (left != right) return false;
      }
  for (int e : idempotents)
    for (int f : idempotents)
      if (product[e][f] != (e == f ? e : -1)) return false;
  // the idempotents sum to 1: each basis element is e·b·f for exactly one pair
  for (int b = 0; b < n; ++b) {
    int left = 0, right = 0;
    for (int e : idempotents) {
      if (product[e][b] == b) ++left;
      else if (product[e][b] != -1) return false;
      if (product[b][e] == b) ++right;
      else if (product[b][e] != -1) return false;
    }
    if (left != 1 || right != 1) return false;
  }
  return true;
}

AlgebraTable table_of(const MonomialAlgebra& a) {
  AlgebraTable t;
  const auto& paths = a.nonzero_paths();
  const auto n = paths.size();
  for (const auto& p : paths) t.labels.push_back(path_string(a.quiver(), p));
  t.product.assign(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (paths[i].target != paths[j].source) continue;
      int cur = static_cast<int>(i);
      for (int arrow : paths[j].arrows) {
        cur = a.extend_by_arrow(cur, arrow);
        if (cur < 0) break;
      }
      t.product[i][j] = cur;
    }
  for (std::size_t v = 0; v < a.quiver().vertex_count(); ++v) t.idempotents.push_back(static_cast<int>(v));
  for (std::size_t arrow = 0; arrow < a.quiver().arrow_count(); ++arrow)
    t.generators.push_back(*a.index_of(*make_path(a.quiver(), {static_cast<int>(arrow)})));
  return t;
}

std::optional<AlgebraTable> builtin_table(const std::string& id) {
  if (id != "xyz-local") return std::nullopt;
  AlgebraTable t;
  t.labels = {"1", "x", "y", "z", "xy"};
  // x^2 = y^2 = z^2 = xz = yz = 0, xy = yx
  t.product = {
      {0, 1, 2, 3, 4},
      {1, -1, 4, -1, -1},
      {2, 4, -1, -1, -1},
      {3, -1, -1, -1, -1},
      {4, -1, -1, -1, -1},
  };
  t.idempotents = {0};
  t.generators = {1, 2, 3};
  return t;
}

std::vector<std::size_t> Representation::vertex_dimensions(std::size_t vertex_count) const {
  std::vector<std::size_t> d(vertex_count, 0);
  for (int v : vertex_of) ++d[static_cast<std::size_t>(v)];
  return d;
}

namespace {

/// Per-vertex projective bases e_vΛ, with a spanning tree over generators.
struct TableData {
  std::size_t vertices = 0;
  std::vector<int> source, target;  // vertex index per basis element
  std::vector<std::vector<int>> block;  // basis elements of e_vΛ, tree order
  std::vector<int> parent, parent_gen;  // tree edges; -1 at idempotents
  std::vector<int> local;               // position inside its block
  std::vector<std::vector<int>> times;  // times[b][g]
};

TableData derive(const AlgebraTable& t) {
  TableData d;
  const auto n = t.dimension();
  d.vertices = t.idempotents.size();
  d.source.assign(n, -1);
  d.target.assign(n, -1);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t v = 0; v < d.vertices; ++v) {
      auto e = static_cast<std::size_t>(t.idempotents[v]);
      if (t.product[e][b] == static_cast<int>(b)) d.source[b] = static_cast<int>(v);
      if (t.product[b][e] == static_cast<int>(b)) d.target[b] = static_cast<int>(v);
    }
  d.times.assign(n, std::vector<int>(t.generators.size(), -1));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t g = 0; g < t.generators.size(); ++g)
      d.times[b][g] = t.product[b][static_cast<std::size_t>(t.generators[g])];
  d.block.assign(d.vertices, {});
  d.parent.assign(n, -1);
  d.parent_gen.assign(n, -1);
  d.local.assign(n, -1);
  for (std::size_t v = 0; v < d.vertices; ++v) {
    int e = t.idempotents[v];
    auto& blk = d.block[v];
    blk.push_back(e);
    d.local[static_cast<std::size_t>(e)] = 0;
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t g = 0; g < t.generators.size(); ++g) {
        int c = d.times[static_cast<std::size_t>(blk[i])][g];
        if (c < 0 || d.local[static_cast<std::size_t>(c)] >= 0) continue;
        d.local[static_cast<std::size_t>(c)] = static_cast<int>(blk.size());
        d.parent[static_cast<std::size_t>(c)] = blk[i];
        d.parent_gen[static_cast<std::size_t>(c)] = static_cast<int>(g);
        blk.push_back(c);
      }
    std::size_t expected = 0;
    for (std::size_t b = 0; b < n; ++b) expected += d.source[b] == static_cast<int>(v);
    if (blk.size() != expected)
      throw Error(ErrorKind::internal, "inconsistent", "the generators do not span the radical");
  }
  return d;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

/// Dense scratch vector with a touched-index list.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : value_(n, 0), touched_flag_(n, 0) {}

  void add(int i, std::uint64_t v, std::uint32_t p) {
    auto si = static_cast<std::size_t>(i);
    if (!touched_flag_[si]) {
      touched_flag_[si] = 1;
      touched_.push_back(i);
    }
    value_[si] = static_cast<std::uint32_t>((value_[si] + v) % p);
  }
  /// Drains into a sorted sparse vector.
  SparseVector take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVector out;
    for (int i : touched_) {
      auto si = static_cast<std::size_t>(i);
      if (value_[si]) out.emplace_back(i, value_[si]);
      value_[si] = 0;
      touched_flag_[si] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<std::uint32_t> value_;
  std::vector<char> touched_flag_;
  std::vector<int> touched_;
};

/// Incremental echelon basis over F_p. Stored rows have leading entry 1 at
/// their smallest index. Optionally tracks each row as a combination of
/// the inserted vectors.
class Eliminator {
 public:
  Eliminator(std::size_t n, std::size_t history_dim, std::uint32_t p)
      : p_(p), slot_(n, -1), dense_(n, 0), queued_(n, 0), hist_(history_dim) {}

  /// Reduces v against the stored rows. If it survives, stores it and
  /// returns nullopt; otherwise returns the combination (over the history
  /// space) that vanishes, seeded with `origin`.
  std::optional<SparseVector> insert(const SparseVector& v, const SparseVector& origin, bool track) {
    std::priority_queue<int, std::vector<int>, std::greater<>> heap;
    for (auto [i, x] : v) {
      dense_[static_cast<std::size_t>(i)] = x;
      queued_[static_cast<std::size_t>(i)] = 1;
      heap.push(i);
    }
    if (track)
      for (auto [i, x] : origin) hist_.add(i, x, p_);
    SparseVector rest;
    while (!heap.empty()) {
      int r = heap.top();
      heap.pop();
      auto sr = static_cast<std::size_t>(r);
      queued_[sr] = 0;
      std::uint32_t c = dense_[sr];
      if (!c) continue;
      int s = slot_[sr];
      if (s < 0) {
        rest.emplace_back(r, c);
        dense_[sr] = 0;
        continue;
      }
      std::uint64_t neg = p_ - c;
      for (auto [i, x] : rows_[static_cast<std::size_t>(s)]) {
        auto si = static_cast<std::size_t>(i);
        dense_[si] = static_cast<std::uint32_t>((dense_[si] + neg * x) % p_);
        if (!queued_[si]) {
          queued_[si] = 1;
          heap.push(i);
        }
      }
      if (track)
        for (auto [i, x] : history_[static_cast<std::size_t>(s)]) hist_.add(i, neg * x % p_, p_);
    }
    if (rest.empty()) return track ? hist_.take() : SparseVector{};
    std::uint64_t inv = inverse_mod(rest.front().second, p_);
    for (auto& e : rest) e.second = static_cast<std::uint32_t>(e.second * inv % p_);
    slot_[static_cast<std::size_t>(rest.front().first)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(rest));
    if (track) {
      SparseVector h = hist_.take();
      for (auto& e : h) e.second = static_cast<std::uint32_t>(e.second * inv % p_);
      history_.push_back(std::move(h));
    }
    return std::nullopt;
  }

  bool is_pivot(std::size_t i) const { return slot_[i] >= 0; }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::uint32_t p_;
  std::vector<int> slot_;
  std::vector<SparseVector> rows_;
  std::vector<SparseVector> history_;
  std::vector<std::uint32_t> dense_;
  std::vector<char> queued_;
  Accumulator hist_;
};

struct Cover {
  std::vector<int> top;  // coordinates of the top lifts
  std::size_t dimension = 0;
};

Cover projective_cover(const Representation& r, const TableData& d) {
  Eliminator radical(r.dimension(), 0, r.prime);
  for (const auto& gen : r.action)
    for (const auto& col : gen)
      if (!col.empty()) radical.insert(col, {}, false);
  Cover c;
  for (std::size_t i = 0; i < r.dimension(); ++i)
    if (!radical.is_pivot(i)) {
      c.top.push_back(static_cast<int>(i));
      c.dimension += d.block[static_cast<std::size_t>(r.vertex_of[i])].size();
    }
  return c;
}

Representation cover_kernel(const Representation& r, const TableData& d, const Cover& cover) {
  const std::uint32_t p = r.prime;
  const std::size_t G = r.action.size();
  // P has basis (j, b) with b in the block of the vertex of top lift j
  std::vector<std::size_t> offset;
  std::vector<int> col_element;       // basis element b for each column
  for (int top : cover.top) {
    int v = r.vertex_of[static_cast<std::size_t>(top)];
    offset.push_back(col_element.size());
    for (int b : d.block[static_cast<std::size_t>(v)]) {
      col_element.push_back(b);
    }
  }
  const std::size_t ncols = col_element.size();

  Accumulator acc(r.dimension());
  auto apply = [&](const SparseVector& x, std::size_t g) {
    for (auto [k, val] : x)
      for (auto [i, y] : r.action[g][static_cast<std::size_t>(k)]) acc.add(i, static_cast<std::uint64_t>(val) * y, p);
    return acc.take();
  };

  Eliminator elim(r.dimension(), ncols, p);
  std::vector<SparseVector> kernel;
  std::vector<int> free_to_kernel(ncols, -1);
  for (std::size_t j = 0; j < cover.top.size(); ++j) {
    int v = r.vertex_of[static_cast<std::size_t>(cover.top[j])];
    const auto& blk = d.block[static_cast<std::size_t>(v)];
    std::vector<SparseVector> image(blk.size());
    image[0] = {{cover.top[j], 1}};
    for (std::size_t i = 1; i < blk.size(); ++i) {
      auto b = static_cast<std::size_t>(blk[i]);
      auto parent = static_cast<std::size_t>(d.local[static_cast<std::size_t>(d.parent[b])]);
      image[i] = apply(image[parent], static_cast<std::size_t>(d.parent_gen[b]));
    }
    for (std::size_t i = 0; i < blk.size(); ++i) {
      auto col = static_cast<int>(offset[j] + i);
      auto dep = elim.insert(image[i], {{col, 1}}, true);
      if (dep) {
        free_to_kernel[static_cast<std::size_t>(col)] = static_cast<int>(kernel.size());
        kernel.push_back(std::move(*dep));
      }
    }
  }
  if (elim.rank() != r.dimension())
    throw Error(ErrorKind::internal, "inconsistent", "the projective cover map is not surjective");

  Representation out;
  out.prime = p;
  out.action.assign(G, std::vector<SparseVector>(kernel.size()));
  Accumulator pacc(ncols);
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    // the free column of a kernel vector is its largest index
    auto lead = static_cast<std::size_t>(kernel[k].back().first);
    out.vertex_of.push_back(d.target[static_cast<std::size_t>(col_element[lead])]);
    for (std::size_t g = 0; g < G; ++g) {
      for (auto [col, val] : kernel[k]) {
        auto sc = static_cast<std::size_t>(col);
        int nb = d.times[static_cast<std::size_t>(col_element[sc])][g];
        if (nb < 0) continue;
        std::size_t base = sc - static_cast<std::size_t>(d.local[static_cast<std::size_t>(col_element[sc])]);
        pacc.add(static_cast<int>(base + static_cast<std::size_t>(d.local[static_cast<std::size_t>(nb)])), val, p);
      }
      SparseVector coords;
      for (auto [col, val] : pacc.take()) {
        int kk = free_to_kernel[static_cast<std::size_t>(col)];
        if (kk >= 0) coords.emplace_back(kk, val);
      }
      std::sort(coords.begin(), coords.end());
      out.action[g][k] = std::move(coords);
    }
  }
  return out;
}

}  // namespace

Representation rep_of(const ModuleExpr& m, const MonomialAlgebra& a, std::uint32_t prime) {
  Representation r;
  r.prime = prime;
  r.action.assign(a.quiver().arrow_count(), {});
  for (const auto& [key, mult] : m.terms()) {
    std::set<int> killers;
    for (const auto& w : key.killers)
      if (auto i = a.index_of(w)) killers.insert(*i);
    // basis: nonzero paths from the vertex with no killer prefix
    std::vector<int> basis{key.vertex};
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (int arrow : a.quiver().out_arrows(a.nonzero_paths()[static_cast<std::size_t>(basis[i])].target)) {
        int next = a.extend_by_arrow(basis[i], arrow);
        if (next >= 0 && !killers.count(next)) basis.push_back(next);
      }
    std::map<int, int> local;
    for (std::size_t i = 0; i < basis.size(); ++i) local[basis[i]] = static_cast<int>(i);
    for (std::int64_t copy = 0; copy < mult; ++copy) {
      auto base = static_cast<int>(r.vertex_of.size());
      for (int b : basis) r.vertex_of.push_back(a.nonzero_paths()[static_cast<std::size_t>(b)].target);
      for (std::size_t arrow = 0; arrow < a.quiver().arrow_count(); ++arrow)
        for (int b : basis) {
          int next = a.extend_by_arrow(b, static_cast<int>(arrow));
          auto it = next >= 0 ? local.find(next) : local.end();
          if (it == local.end())
            r.action[arrow].emplace_back();
          else
            r.action[arrow].push_back({{base + it->second, 1}});
        }
    }
  }
  return r;
}

Representation simple_rep(const AlgebraTable& t, int v, std::uint32_t prime) {
  Representation r;
  r.prime = prime;
  r.vertex_of = {v};
  r.action.assign(t.generators.size(), std::vector<SparseVector>(1));
  return r;
}

Representation syzygy_rep(const Representation& r, const AlgebraTable& t) {
  TableData d = derive(t);
  return cover_kernel(r, d, projective_cover(r, d));
}

std::size_t default_dim_cap() {
  if (const char* env = std::getenv("SYZCX_DIM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

DimSequenceResult dim_sequence(const Representation& r, const AlgebraTable& t, int n, std::size_t cap) {
  TableData d = derive(t);
  DimSequenceResult out;
  Representation cur = r;
  out.dims.push_back(cur.dimension());
  for (int i = 1; i <= n; ++i) {
    if (cur.dimension() == 0) {
      out.dims.push_back(0);
      continue;
    }
    Cover c = projective_cover(cur, d);
    if (c.dimension - cur.dimension() > cap) {
      out.capped = true;
      break;
    }
    cur = cover_kernel(cur, d, c);
    out.dims.push_back(cur.dimension());
  }
  return out;
}

CrosscheckReport crosscheck(const MonomialAlgebra& a, const ModuleExpr& m, int n, std::size_t cap) {
  AlgebraTable table = table_of(a);
  auto run = [&](std::uint32_t prime) { return dim_sequence(rep_of(m, a, prime), table, n, cap); };
  auto first = std::async(std::launch::async, run, kOraclePrimes[0]);
  DimSequenceResult second = run(kOraclePrimes[1]);
  DimSequenceResult one = first.get();
  std::size_t len = std::min(one.dims.size(), second.dims.size());
  for (std::size_t i = 0; i < len; ++i)
    if (one.dims[i] != second.dims[i])
      throw Error(ErrorKind::internal, "prime_disagreement",
                  "oracle dimensions differ between primes at n = " + std::to_string(i));

  BuiltQuiver built = build_syzygy_quiver(m, a);
  std::vector<BigInt> weight;
  for (const auto& label : built.quiver.labels) weight.push_back(static_cast<long>(module_dimension(label, a)));
  std::vector<BigInt> predicted(static_cast<std::size_t>(n) + 1, 0);
  predicted[0] = static_cast<long>(module_dimension(built.projective_part, a));
  for (const auto& s : built.starts) {
    auto f = weighted_path_counts(built.quiver, s.vertex, n, weight);
    for (std::size_t i = 0; i < f.size(); ++i) predicted[i] += f[i] * static_cast<long>(s.multiplicity);
  }

  CrosscheckReport report;
  report.capped = one.capped || second.capped;
  for (std::size_t i = 0; i < len; ++i) {
    bool eq = BigInt(static_cast<unsigned long>(one.dims[i])) == predicted[i];
    report.rows.push_back({one.dims[i], predicted[i], eq});
    if (!eq && !report.first_mismatch) report.first_mismatch = static_cast<int>(i);
  }
  return report;
}

}  // namespace syzcx
