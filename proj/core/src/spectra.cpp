#include "syzcx/spectra.hpp"

#include <algorithm>
#include <functional>

namespace syzcx {

IntPolynomial char_poly(const IntMatrix& m) {
  const std::size_t n = m.size();
  // descending coefficients of det(xI - A_k) for the leading k x k block
  std::vector<BigInt> poly{1};
  for (std::size_t k = 0; k < n; ++k) {
    // A_{k+1} = [[A_k, C], [R, a]] with C the new column, R the new row
    std::vector<BigInt> q;
    q.push_back(1);
    q.push_back(-m(k, k));
    std::vector<BigInt> col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = m(i, k);
    for (std::size_t p = 0; p + 1 < k + 1 && p < k; ++p) {
      BigInt s = 0;
      for (std::size_t j = 0; j < k; ++j) s += m(k, j) * col[j];
      q.push_back(-s);
      std::vector<BigInt> nxt(k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) nxt[i] += m(i, j) * col[j];
      col = std::move(nxt);
    }
    std::vector<BigInt> out(k + 2, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j)
        if (i - j < q.size()) out[i] += q[i - j] * poly[j];
    poly = std::move(out);
  }
  std::reverse(poly.begin(), poly.end());
  return IntPolynomial(std::move(poly));
}

AlgebraicReal perron_root(const IntMatrix& adjacency) {
  IntPolynomial p = char_poly(adjacency);
  auto r = largest_real_root(p);
  return r ? *r : AlgebraicReal();
}

bool equal_radius(const AlgebraicReal& r1, const AlgebraicReal& r2) { return algebraic_equal(r1, r2); }

IntMatrix adjacency_matrix(std::size_t vertex_count, const std::vector<std::pair<int, int>>& arrows) {
  IntMatrix m(vertex_count);
  for (auto [f, t] : arrows) m(static_cast<std::size_t>(f), static_cast<std::size_t>(t)) += 1;
  return m;
}

Condensation scc_condense(std::size_t n, const std::vector<std::pair<int, int>>& arrows) {
  std::vector<std::vector<int>> succ(n);
  for (auto [f, t] : arrows) succ[static_cast<std::size_t>(f)].push_back(t);

  // iterative Tarjan; components are emitted in reverse-topological order
  Condensation c;
  c.component_of.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int counter = 0;
  std::vector<std::vector<int>> members;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> call{{static_cast<int>(root), 0}};
    while (!call.empty()) {
      auto [u, k] = call.back();
      auto su = static_cast<std::size_t>(u);
      if (k == 0) {
        index[su] = low[su] = counter++;
        stack.push_back(u);
        on_stack[su] = 1;
      }
      if (k < succ[su].size()) {
        call.back().second = k + 1;
        int w = succ[su][k];
        auto sw = static_cast<std::size_t>(w);
        if (index[sw] < 0)
          call.push_back({w, 0});
        else if (on_stack[sw])
          low[su] = std::min(low[su], index[sw]);
        continue;
      }
      if (low[su] == index[su]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          c.component_of[static_cast<std::size_t>(w)] = static_cast<int>(members.size());
          comp.push_back(w);
        } while (w != u);
        std::sort(comp.begin(), comp.end());
        members.push_back(std::move(comp));
      }
      call.pop_back();
      if (!call.empty()) {
        auto sp = static_cast<std::size_t>(call.back().first);
        low[sp] = std::min(low[sp], low[su]);
      }
    }
  }

  c.dag.assign(members.size(), {});
  std::vector<std::vector<std::pair<int, int>>> internal(members.size());
  for (auto [f, t] : arrows) {
    int cf = c.component_of[static_cast<std::size_t>(f)], ct = c.component_of[static_cast<std::size_t>(t)];
    if (cf == ct)
      internal[static_cast<std::size_t>(cf)].emplace_back(f, t);
    else
      c.dag[static_cast<std::size_t>(cf)].push_back(ct);
  }
  for (auto& d : c.dag) {
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    Component comp;
    comp.members = members[i];
    comp.adjacency = IntMatrix(comp.members.size());
    auto pos = [&](int v) {
      return static_cast<std::size_t>(std::lower_bound(comp.members.begin(), comp.members.end(), v) - comp.members.begin());
    };
    for (auto [f, t] : internal[i]) comp.adjacency(pos(f), pos(t)) += 1;
    comp.rho = internal[i].empty() ? AlgebraicReal() : perron_root(comp.adjacency);
    c.components.push_back(std::move(comp));
  }
  return c;
}

}  // namespace syzcx
