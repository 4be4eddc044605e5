#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "syzcx/complexity.hpp"
#include "syzcx/int_matrix.hpp"
#include "syzcx/spectra.hpp"

using namespace syzcx;

namespace {

IntMatrix matrix(std::vector<std::vector<long>> rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

BigInt det_x_minus(const IntMatrix& m, long x) {
  IntMatrix a(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) a(i, j) = (i == j ? BigInt(x) : BigInt(0)) - m(i, j);
  return bareiss_determinant(a);
}

AlgebraicReal rho_of(std::size_t n, const std::vector<std::pair<int, int>>& arrows) {
  return perron_root(adjacency_matrix(n, arrows));
}

}  // namespace

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(matrix({{0, 1}, {1, 1}})), (IntPolynomial{-1, -1, 1}));
  EXPECT_EQ(char_poly(matrix({{7}})), (IntPolynomial{-7, 1}));
  EXPECT_EQ(char_poly(matrix({{0, 2}, {1, 1}})), (IntPolynomial{-2, -1, 1}));
  EXPECT_EQ(char_poly(IntMatrix(0)), (IntPolynomial{1}));
}

TEST(CharPoly, AgreesWithDeterminantsAtIntegerPoints) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = std::uniform_int_distribution<long>(-3, 5)(rng);
    IntPolynomial p = char_poly(m);
    EXPECT_EQ(p.degree(), static_cast<int>(n));
    for (long x : {-2L, -1L, 0L, 1L, 2L}) EXPECT_EQ(p(BigInt(x)), det_x_minus(m, x));
  }
}

TEST(PerronRoot, Examples) {
  EXPECT_TRUE(algebraic_equal(rho_of(1, {{0, 0}}), AlgebraicReal::from_integer(1)));
  EXPECT_TRUE(algebraic_equal(rho_of(1, {{0, 0}, {0, 0}, {0, 0}}), AlgebraicReal::from_integer(3)));
  AlgebraicReal fib = rho_of(2, {{0, 1}, {1, 0}, {1, 1}});
  EXPECT_EQ(fib.approx(), "1.618033988750");
  EXPECT_EQ(fib.poly(), (IntPolynomial{-1, -1, 1}));
  EXPECT_TRUE(perron_root(matrix({{0}})).is_zero());
}

TEST(PerronRoot, RowSumBoundsAndAnnihilation) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    IntMatrix m(n);
    // a Hamiltonian cycle keeps the matrix irreducible
    for (std::size_t i = 0; i < n; ++i) m(i, (i + 1) % n) = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) += std::uniform_int_distribution<long>(0, 2)(rng);
    BigInt lo = -1, hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
      BigInt s = 0;
      for (std::size_t j = 0; j < n; ++j) s += m(i, j);
      if (lo < 0 || s < lo) lo = s;
      if (s > hi) hi = s;
    }
    AlgebraicReal r = perron_root(m);
    EXPECT_NE(compare(r, Rational(lo)), std::strong_ordering::less);
    EXPECT_NE(compare(r, Rational(hi)), std::strong_ordering::greater);
    IntPolynomial p = char_poly(m);
    EXPECT_TRUE(divides(r.poly(), p));
    EXPECT_NE(p.sign_at(r.lo()) * p.sign_at(r.hi()), 1);
  }
}

TEST(PerronRoot, TraceOfPowersStaysBounded) {
  IntMatrix m = matrix({{0, 1, 0}, {1, 0, 1}, {1, 1, 1}});
  AlgebraicReal r = perron_root(m);
  double rho = r.to_double();
  IntMatrix p = m;
  for (int n = 1; n <= 60; ++n) {
    BigInt tr = 0;
    for (std::size_t i = 0; i < 3; ++i) tr += p(i, i);
    double ratio = tr.get_d() / std::pow(rho, n);
    EXPECT_LE(ratio, 10.0 * 3);
    IntMatrix next(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) next(i, j) += p(i, k) * m(k, j);
    p = next;
  }
}

TEST(EqualRadius, Examples) {
  std::vector<std::pair<int, int>> fib{{0, 1}, {1, 0}, {1, 1}};
  AlgebraicReal a = rho_of(2, fib);
  std::vector<std::pair<int, int>> two = fib;
  for (auto [s, t] : fib) two.emplace_back(s + 2, t + 2);
  EXPECT_TRUE(equal_radius(a, rho_of(4, two)));
  EXPECT_FALSE(equal_radius(a, rho_of(2, {{0, 1}, {1, 0}})));
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 0);
  q.add_arrow("g", 1, 1);
  Quiver sub = subdivide(q, 2);
  EXPECT_FALSE(equal_radius(a, rho_of(sub.vertex_count(), arrow_pairs(sub))));
}

TEST(Condense, Examples) {
  Condensation fib = scc_condense(2, {{0, 1}, {1, 0}, {1, 1}});
  ASSERT_EQ(fib.components.size(), 1u);
  EXPECT_EQ(fib.components[0].members, (std::vector<int>{0, 1}));

  Condensation chain = scc_condense(3, {{0, 0}, {1, 1}, {2, 2}, {2, 1}, {1, 0}});
  ASSERT_EQ(chain.components.size(), 3u);
  for (const auto& c : chain.components) EXPECT_EQ(c.rho.approx(), "1.000000000000");
  // reverse-topological: successors have smaller indices
  for (std::size_t i = 0; i < chain.dag.size(); ++i)
    for (int j : chain.dag[i]) EXPECT_LT(j, static_cast<int>(i));
  EXPECT_EQ(chain.dag[chain.component_of[2]], (std::vector<int>{chain.component_of[1]}));

  Condensation dag = scc_condense(2, {{0, 1}});
  ASSERT_EQ(dag.components.size(), 2u);
  for (const auto& c : dag.components) {
    EXPECT_TRUE(c.trivial());
    EXPECT_EQ(c.rho.poly(), (IntPolynomial{0, 1}));
  }
}

TEST(Condense, RandomGraphsRespectReachability) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 9)(rng);
    int m = std::uniform_int_distribution<int>(0, 14)(rng);
    std::vector<std::pair<int, int>> arrows;
    for (int i = 0; i < m; ++i)
      arrows.emplace_back(std::uniform_int_distribution<int>(0, n - 1)(rng), std::uniform_int_distribution<int>(0, n - 1)(rng));
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v) reach[v][v] = true;
    for (auto [s, t] : arrows) reach[s][t] = true;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    Condensation c = scc_condense(n, arrows);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        EXPECT_EQ(c.component_of[i] == c.component_of[j], reach[i][j] && reach[j][i]);
    for (auto [s, t] : arrows) EXPECT_GE(c.component_of[s], c.component_of[t]);
  }
}
