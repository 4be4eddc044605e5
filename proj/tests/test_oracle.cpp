#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "syzcx/oracle.hpp"
#include "test_support.hpp"

using namespace syzcx;
using syzcx::testing::kFibonacciText;
using syzcx::testing::load;

namespace {

constexpr std::uint32_t kPrime = kOraclePrimes[0];
constexpr std::size_t kCap = 1000000;

Path P(const MonomialAlgebra& a, const std::string& literal) { return parse_path_literal(a.quiver(), literal); }

}  // namespace

TEST(Table, FibonacciIsConsistent) {
  auto l = load(kFibonacciText);
  AlgebraTable t = table_of(l.algebra);
  EXPECT_EQ(t.dimension(), 5u);
  EXPECT_TRUE(t.check());
  EXPECT_EQ(t.idempotents.size(), 2u);
  EXPECT_EQ(t.generators.size(), 3u);
}

TEST(Table, BuiltinXyz) {
  auto t = builtin_table("xyz-local");
  ASSERT_TRUE(t);
  EXPECT_EQ(t->dimension(), 5u);
  EXPECT_TRUE(t->check());
  EXPECT_FALSE(builtin_table("nope"));
}

TEST(Rep, Dimensions) {
  auto l = load(kFibonacciText);
  const auto& A = l.algebra;
  Representation s1 = rep_of(ModuleExpr(simple_key(A, 0)), A, kPrime);
  EXPECT_EQ(s1.vertex_dimensions(2), (std::vector<std::size_t>{1, 0}));
  for (const auto& g : s1.action)
    for (const auto& col : g) EXPECT_TRUE(col.empty());
  EXPECT_EQ(rep_of(ModuleExpr(projective_key(0)), A, kPrime).dimension(), 2u);
  EXPECT_EQ(rep_of(ModuleExpr(path_key(A, P(A, "a"))), A, kPrime).dimension(), 1u);
}

TEST(Syzygy, SingleSteps) {
  auto l = load(kFibonacciText);
  const auto& A = l.algebra;
  AlgebraTable t = table_of(A);
  EXPECT_EQ(syzygy_rep(rep_of(ModuleExpr(simple_key(A, 0)), A, kPrime), t).dimension(), 1u);
  EXPECT_EQ(syzygy_rep(rep_of(ModuleExpr(projective_key(1)), A, kPrime), t).dimension(), 0u);
  auto x = *builtin_table("xyz-local");
  EXPECT_EQ(syzygy_rep(simple_rep(x, 0, kPrime), x).dimension(), 4u);
}

TEST(DimSequence, Fibonacci) {
  auto l = load(kFibonacciText);
  auto r = dim_sequence(rep_of(ModuleExpr(simple_key(l.algebra, 0)), l.algebra, kPrime), table_of(l.algebra), 5, kCap);
  EXPECT_FALSE(r.capped);
  EXPECT_EQ(r.dims, (std::vector<std::size_t>{1, 1, 2, 3, 5, 8}));
}

TEST(DimSequence, Xyz) {
  auto x = *builtin_table("xyz-local");
  auto r = dim_sequence(simple_rep(x, 0, kPrime), x, 4, kCap);
  EXPECT_EQ(r.dims, (std::vector<std::size_t>{1, 4, 11, 29, 76}));
}

TEST(DimSequence, Projective) {
  auto l = load(kFibonacciText);
  auto r = dim_sequence(rep_of(ModuleExpr(projective_key(1)), l.algebra, kPrime), table_of(l.algebra), 3, kCap);
  EXPECT_EQ(r.dims, (std::vector<std::size_t>{3, 0, 0, 0}));
}

TEST(DimSequence, CapStopsEarly) {
  auto x = *builtin_table("xyz-local");
  auto r = dim_sequence(simple_rep(x, 0, kPrime), x, 10, 50);
  EXPECT_TRUE(r.capped);
  EXPECT_EQ(r.dims, (std::vector<std::size_t>{1, 4, 11, 29}));
}

TEST(DimSequence, DefaultCapFromEnvironment) {
  ::setenv("SYZCX_DIM_CAP", "1234", 1);
  EXPECT_EQ(default_dim_cap(), 1234u);
  ::unsetenv("SYZCX_DIM_CAP");
  EXPECT_EQ(default_dim_cap(), 200000u);
}

TEST(DimSequence, Additivity) {
  auto l = load(kFibonacciText);
  const auto& A = l.algebra;
  AlgebraTable t = table_of(A);
  ModuleExpr m(simple_key(A, 0));
  m.add(simple_key(A, 1));
  auto a = dim_sequence(rep_of(ModuleExpr(simple_key(A, 0)), A, kPrime), t, 6, kCap);
  auto b = dim_sequence(rep_of(ModuleExpr(simple_key(A, 1)), A, kPrime), t, 6, kCap);
  auto s = dim_sequence(rep_of(m, A, kPrime), t, 6, kCap);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(s.dims[n], a.dims[n] + b.dims[n]);
}

TEST(Crosscheck, Fixtures) {
  auto l = load(kFibonacciText);
  auto r = crosscheck(l.algebra, ModuleExpr(simple_key(l.algebra, 0)), 10, kCap);
  ASSERT_EQ(r.rows.size(), 11u);
  EXPECT_FALSE(r.first_mismatch);
  for (const auto& row : r.rows) EXPECT_TRUE(row.equal);
  auto c = load("vertex v\narrow x : v -> v\nrelation x.x.x\n");
  auto rc = crosscheck(c.algebra, ModuleExpr(simple_key(c.algebra, 0)), 6, kCap);
  EXPECT_FALSE(rc.first_mismatch);
  // Ω alternates between (x) and (x^2)
  for (std::size_t n = 0; n < rc.rows.size(); ++n) EXPECT_EQ(rc.rows[n].oracle, n == 0 ? 1u : (n % 2 ? 2u : 1u));
}

TEST(Crosscheck, RandomRadicalSquareZero) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    auto l = load(syzcx::testing::random_algebra_text(rng, 6, 10, true));
    for (std::size_t v = 0; v < l.algebra.quiver().vertex_count(); ++v) {
      auto r = crosscheck(l.algebra, ModuleExpr(simple_key(l.algebra, static_cast<int>(v))), 10, kCap);
      EXPECT_FALSE(r.first_mismatch);
    }
  }
}

TEST(Crosscheck, RandomMonomial) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 15; ++trial) {
    auto l = load(syzcx::testing::random_algebra_text(rng, 4, 6, false));
    for (std::size_t v = 0; v < l.algebra.quiver().vertex_count(); ++v) {
      auto r = crosscheck(l.algebra, ModuleExpr(simple_key(l.algebra, static_cast<int>(v))), 8, kCap);
      EXPECT_FALSE(r.first_mismatch);
    }
  }
}
