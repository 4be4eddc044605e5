#include "syzcx/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "syzcx/error.hpp"

namespace syzcx {

ComplexityClass ComplexityClass::zero(int projective_dimension) {
  ComplexityClass c;
  c.kind_ = Kind::zero;
  c.pd_ = projective_dimension;
  return c;
}

ComplexityClass ComplexityClass::zero_module() {
  ComplexityClass c;
  c.kind_ = Kind::zero;
  return c;
}

ComplexityClass ComplexityClass::polyexp(AlgebraicReal base, int degree) {
  ComplexityClass c;
  c.kind_ = Kind::polyexp;
  c.base_ = std::move(base);
  c.degree_ = degree;
  return c;
}

std::string ComplexityClass::to_string() const {
  if (is_zero()) return "[0]";
  std::string s = "[" + base_.approx() + "^n";
  if (degree_ > 0) s += "*n^" + std::to_string(degree_);
  return s + "]";
}

std::strong_ordering compare(const ComplexityClass& a, const ComplexityClass& b) {
  if (a.is_zero() || b.is_zero()) return (!a.is_zero()) <=> (!b.is_zero());
  if (auto c = compare(a.base(), b.base()); c != 0) return c;
  return a.degree() <=> b.degree();
}

bool same_class(const ComplexityClass& a, const ComplexityClass& b) { return compare(a, b) == 0; }

ComplexityClass join(const ComplexityClass& a, const ComplexityClass& b) {
  if (a.is_zero() && b.is_zero()) {
    auto pa = a.projective_dimension(), pb = b.projective_dimension();
    if (!pa) return b;
    if (!pb) return a;
    return *pa >= *pb ? a : b;
  }
  return compare(a, b) >= 0 ? a : b;
}

ComplexityClass convolve(const ComplexityClass& a, const ComplexityClass& b) {
  if (a.is_zero() && b.is_zero()) return join(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto c = compare(a.base(), b.base());
  if (c < 0) return b;
  if (c > 0) return a;
  return ComplexityClass::polyexp(a.base(), a.degree() + b.degree() + 1);
}

ComplexityClass vertex_complexity(const Condensation& c, int v) {
  const std::size_t k = c.components.size();
  const int home = c.component_of[static_cast<std::size_t>(v)];
  std::vector<char> reach(k, 0);
  std::vector<int> todo{home};
  reach[static_cast<std::size_t>(home)] = 1;
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    for (int y : c.dag[static_cast<std::size_t>(x)])
      if (!reach[static_cast<std::size_t>(y)]) {
        reach[static_cast<std::size_t>(y)] = 1;
        todo.push_back(y);
      }
  }
  const AlgebraicReal* best = nullptr;
  for (std::size_t i = 0; i < k; ++i)
    if (reach[i] && (!best || compare(c.components[i].rho, *best) > 0)) best = &c.components[i].rho;

  // successors always carry smaller indices, so a forward sweep is a valid DP order
  std::vector<int> dp(k, 0);
  if (best->is_zero()) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!reach[i]) continue;
      for (int s : c.dag[i]) dp[i] = std::max(dp[i], dp[static_cast<std::size_t>(s)] + 1);
    }
    return ComplexityClass::zero(dp[static_cast<std::size_t>(home)]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!reach[i]) continue;
    int m = 0;
    for (int s : c.dag[i]) m = std::max(m, dp[static_cast<std::size_t>(s)]);
    dp[i] = m + (equal_radius(c.components[i].rho, *best) ? 1 : 0);
  }
  return ComplexityClass::polyexp(*best, dp[static_cast<std::size_t>(home)] - 1);
}

ComplexityReport module_complexity(const MonomialAlgebra& a, const ModuleExpr& m) {
  ComplexityReport r;
  r.built = build_syzygy_quiver(m, a);
  r.condensation = scc_condense(r.built.quiver.vertex_count(), r.built.quiver.arrows);
  if (m.empty()) {
    r.cls = ComplexityClass::zero_module();
    return r;
  }
  std::optional<ComplexityClass> acc;
  if (!r.built.projective_part.empty()) acc = ComplexityClass::zero(0);
  for (const auto& s : r.built.starts) {
    r.start_classes.push_back(vertex_complexity(r.condensation, s.vertex));
    acc = acc ? join(*acc, r.start_classes.back()) : r.start_classes.back();
  }
  r.cls = *acc;
  return r;
}

ComplexityClass lower_bound_from_partial(const SyzygyQuiver& q, const MonomialAlgebra& a, int v) {
  if (!validate_partial(q, a))
    throw Error(ErrorKind::validation, "invalid_partial",
                "some vertex has out-neighbours that are not summands of the syzygy of its label");
  if (v < 0 || v >= static_cast<int>(q.vertex_count()))
    throw Error(ErrorKind::usage, "unknown_vertex", "no such quiver vertex");
  Condensation c = scc_condense(q.vertex_count(), q.arrows);
  return vertex_complexity(c, v);
}

std::vector<std::pair<int, int>> arrow_pairs(const Quiver& q) {
  std::vector<std::pair<int, int>> out;
  for (const auto& a : q.arrows()) out.emplace_back(a.source, a.target);
  return out;
}

RealizedClass realize_class(const Quiver& h, int ell) {
  if (ell < 0) throw Error(ErrorKind::usage, "bad_degree", "the degree must be nonnegative");
  if (h.arrow_count() == 0) throw Error(ErrorKind::precondition, "no_arrows", "the quiver has no arrows");
  if (scc_condense(h.vertex_count(), arrow_pairs(h)).components.size() != 1)
    throw Error(ErrorKind::precondition, "not_strongly_connected", "the quiver is not strongly connected");

  auto vname = [&](int v, int s) { return h.vertex(v) + "_" + std::to_string(s); };
  std::ostringstream out;
  RealizedClass r;
  out << "algebra realized\n";
  for (int s = 0; s <= ell; ++s)
    for (int v = 0; v < static_cast<int>(h.vertex_count()); ++v) out << "vertex " << vname(v, s) << "\n";
  // (id, source, target) of every arrow in the box product
  struct A {
    std::string id;
    std::string src, tgt;
  };
  std::vector<A> arrows;
  for (int s = 0; s <= ell; ++s) {
    for (const auto& a : h.arrows())
      arrows.push_back({a.id + "_" + std::to_string(s), vname(a.source, s), vname(a.target, s)});
    if (s > 0)
      for (int v = 0; v < static_cast<int>(h.vertex_count()); ++v)
        arrows.push_back({vname(v, s) + "_down", vname(v, s), vname(v, s - 1)});
  }
  for (const auto& a : arrows) out << "arrow " << a.id << " : " << a.src << " -> " << a.tgt << "\n";
  for (const auto& x : arrows)
    for (const auto& y : arrows)
      if (x.tgt == y.src) out << "relation " << x.id << "." << y.id << "\n";
  r.module_names.resize(static_cast<std::size_t>(ell) + 1);
  for (int s = 0; s <= ell; ++s)
    for (int v = 0; v < static_cast<int>(h.vertex_count()); ++v) {
      std::string name = "S_" + vname(v, s);
      out << "module " << name << " = S(" << vname(v, s) << ")\n";
      r.module_names[static_cast<std::size_t>(s)].push_back(name);
    }
  r.algebra_text = out.str();
  return r;
}

Quiver subdivide(const Quiver& q, int ell) {
  if (ell < 1) throw Error(ErrorKind::usage, "bad_length", "subdivision length must be at least 1");
  Quiver out;
  for (const auto& v : q.vertices()) out.add_vertex(v);
  for (const auto& a : q.arrows()) {
    int prev = a.source;
    for (int i = 1; i <= ell; ++i) {
      int next = i == ell ? a.target : out.add_vertex(a.id + "_" + std::to_string(i));
      out.add_arrow(ell == 1 ? a.id : a.id + "_" + std::to_string(i), prev, next);
      prev = next;
    }
  }
  return out;
}

EmpiricalCheck empirical_class_check(const std::vector<BigInt>& f, const ComplexityClass& c, int n0, int n1) {
  if (n1 - n0 < 8) throw Error(ErrorKind::precondition, "window_too_small", "the window must span at least 8 steps");
  if (n0 < 0 || n1 >= static_cast<int>(f.size()))
    throw Error(ErrorKind::precondition, "window_out_of_range", "the window exceeds the sequence");
  EmpiricalCheck r;
  if (c.is_zero()) {
    r.ok = true;
    for (int n = n0; n <= n1; ++n) r.ok = r.ok && f[static_cast<std::size_t>(n)] == 0;
    return r;
  }
  const double logb = std::log(c.base().to_double());
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (int n = n0; n <= n1; ++n) {
    const BigInt& v = f[static_cast<std::size_t>(n)];
    if (v <= 0) {
      lo = 0;
      continue;
    }
    long e = 0;
    double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    double logf = std::log(m) + static_cast<double>(e) * std::log(2.0);
    double ratio = std::exp(logf - n * logb - c.degree() * std::log(std::max(n, 1)));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  r.min_ratio = lo;
  r.max_ratio = hi;
  r.ok = std::isfinite(hi) && lo > 0 && hi / lo < 1e4;
  return r;
}

}  // namespace syzcx
