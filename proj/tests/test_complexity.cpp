#include <gtest/gtest.h>

#include "syzcx/complexity.hpp"
#include "syzcx/spectra.hpp"
#include "test_support.hpp"

using namespace syzcx;
using syzcx::testing::kFibonacciText;
using syzcx::testing::load;

namespace {

AlgebraicReal integer(long n) { return AlgebraicReal::from_integer(n); }
AlgebraicReal phi() { return *largest_real_root(IntPolynomial{-1, -1, 1}); }
ComplexityClass pe(AlgebraicReal b, int d) { return ComplexityClass::polyexp(std::move(b), d); }

Quiver quiver_of(const std::string& text) { return parse_algebra(text).quiver; }

const char* kSingleLoop = "vertex v\narrow x : v -> v\n";
const char* kDoubleLoop = "vertex v\narrow x : v -> v\narrow y : v -> v\n";

std::vector<BigInt> fibonacci_dims(int n) {
  std::vector<BigInt> f{1, 1};
  while (static_cast<int>(f.size()) <= n) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

}  // namespace

TEST(ClassOrder, Compare) {
  EXPECT_EQ(compare(pe(integer(2), 0), pe(integer(3), 0)), std::strong_ordering::less);
  auto f1 = largest_real_root(IntPolynomial{-1, -1, 1});
  auto f2 = largest_real_root(IntPolynomial{-1, -1, 1} * IntPolynomial{1, 1});
  EXPECT_EQ(compare(pe(*f1, 0), pe(*f2, 0)), std::strong_ordering::equal);
  EXPECT_EQ(compare(pe(integer(2), 1), pe(integer(2), 0)), std::strong_ordering::greater);
  EXPECT_EQ(compare(ComplexityClass::zero(3), pe(integer(1), 0)), std::strong_ordering::less);
  EXPECT_TRUE(same_class(ComplexityClass::zero(1), ComplexityClass::zero(4)));
}

TEST(ClassOrder, Join) {
  EXPECT_TRUE(same_class(join(pe(integer(2), 0), pe(integer(3), 0)), pe(integer(3), 0)));
  ComplexityClass z = join(ComplexityClass::zero(2), ComplexityClass::zero(5));
  EXPECT_EQ(z.projective_dimension(), 5);
  EXPECT_TRUE(same_class(join(pe(phi(), 1), pe(phi(), 0)), pe(phi(), 1)));
  EXPECT_EQ(join(ComplexityClass::zero_module(), ComplexityClass::zero(2)).projective_dimension(), 2);
}

TEST(ClassOrder, Convolve) {
  EXPECT_TRUE(same_class(convolve(pe(integer(2), 4), pe(integer(3), 1)), pe(integer(3), 1)));
  EXPECT_TRUE(same_class(convolve(pe(phi(), 1), pe(phi(), 0)), pe(phi(), 2)));
  EXPECT_TRUE(same_class(convolve(ComplexityClass::zero(0), pe(integer(2), 0)), pe(integer(2), 0)));
  EXPECT_TRUE(convolve(ComplexityClass::zero(1), ComplexityClass::zero(2)).is_zero());
}

TEST(ClassOrder, ToString) {
  EXPECT_EQ(pe(phi(), 1).to_string(), "[1.618033988750^n*n^1]");
  EXPECT_EQ(pe(integer(2), 0).to_string(), "[2.000000000000^n]");
  EXPECT_EQ(ComplexityClass::zero(2).to_string(), "[0]");
}

TEST(VertexComplexity, Examples) {
  Condensation fib = scc_condense(2, {{0, 1}, {1, 0}, {1, 1}});
  for (int v : {0, 1}) EXPECT_TRUE(same_class(vertex_complexity(fib, v), pe(phi(), 0)));
  Condensation chain = scc_condense(3, {{0, 0}, {1, 1}, {2, 2}, {2, 1}, {1, 0}});
  EXPECT_TRUE(same_class(vertex_complexity(chain, 2), pe(integer(1), 2)));
  EXPECT_TRUE(same_class(vertex_complexity(chain, 0), pe(integer(1), 0)));
  Condensation dag = scc_condense(2, {{0, 1}});
  ComplexityClass z = vertex_complexity(dag, 0);
  ASSERT_TRUE(z.is_zero());
  EXPECT_EQ(z.projective_dimension(), 1);
  // near tie: a 2-loop component feeding a component of radius 2 with degree 1
  Condensation tie = scc_condense(3, {{0, 0}, {0, 0}, {1, 1}, {2, 2}, {2, 0}, {1, 2}});
  EXPECT_TRUE(same_class(vertex_complexity(tie, 1), pe(integer(2), 0)));
}

TEST(ModuleComplexity, Fibonacci) {
  auto l = load(kFibonacciText);
  ComplexityReport r = module_complexity(l.algebra, ModuleExpr(simple_key(l.algebra, 0)));
  ASSERT_FALSE(r.cls.is_zero());
  EXPECT_EQ(r.cls.base().poly(), (IntPolynomial{-1, -1, 1}));
  EXPECT_EQ(r.cls.degree(), 0);
  ComplexityReport p = module_complexity(l.algebra, ModuleExpr(projective_key(0)));
  ASSERT_TRUE(p.cls.is_zero());
  EXPECT_EQ(p.cls.projective_dimension(), 0);
}

TEST(ModuleComplexity, FiniteProjectiveDimension) {
  // A2: 1 -> 2, S1 has pd 1
  auto l = load("vertex 1\nvertex 2\narrow a : 1 -> 2\n");
  ComplexityReport r = module_complexity(l.algebra, ModuleExpr(simple_key(l.algebra, 0)));
  ASSERT_TRUE(r.cls.is_zero());
  EXPECT_EQ(r.cls.projective_dimension(), 1);
}

TEST(LowerBound, Partials) {
  auto l = load(kFibonacciText);
  BuiltQuiver b = build_syzygy_quiver(ModuleExpr(simple_key(l.algebra, 0)), l.algebra);
  SyzygyQuiver full = b.quiver;
  full.partial = true;
  EXPECT_TRUE(same_class(lower_bound_from_partial(full, l.algebra, 0), pe(phi(), 0)));
  SyzygyQuiver cut = full;
  cut.arrows.erase(std::remove(cut.arrows.begin(), cut.arrows.end(), std::pair<int, int>{1, 1}), cut.arrows.end());
  EXPECT_TRUE(same_class(lower_bound_from_partial(cut, l.algebra, 0), pe(integer(1), 0)));
  SyzygyQuiver single;
  single.labels = {ModuleExpr(simple_key(l.algebra, 0))};
  single.partial = true;
  ComplexityClass z = lower_bound_from_partial(single, l.algebra, 0);
  ASSERT_TRUE(z.is_zero());
  EXPECT_EQ(z.projective_dimension(), 0);
  SyzygyQuiver bad = full;
  bad.arrows.emplace_back(0, 0);
  try {
    lower_bound_from_partial(bad, l.algebra, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "invalid_partial");
  }
}

TEST(Realize, FibonacciLevelOne) {
  RealizedClass rc = realize_class(quiver_of(kFibonacciText), 1);
  auto l = load(rc.algebra_text);
  EXPECT_EQ(l.algebra.quiver().vertex_count(), 4u);
  ASSERT_EQ(rc.module_names.size(), 2u);
  for (int s = 0; s <= 1; ++s)
    for (const auto& name : rc.module_names[s]) {
      auto r = module_complexity(l.algebra, module_expr(*l.spec.find_module(name), l.algebra));
      EXPECT_TRUE(same_class(r.cls, pe(phi(), s))) << name;
    }
}

TEST(Realize, LoopsAndErrors) {
  RealizedClass chain = realize_class(quiver_of(kSingleLoop), 2);
  auto l = load(chain.algebra_text);
  auto top = module_complexity(l.algebra, module_expr(*l.spec.find_module(chain.module_names[2][0]), l.algebra));
  EXPECT_TRUE(same_class(top.cls, pe(integer(1), 2)));
  RealizedClass two = realize_class(quiver_of(kDoubleLoop), 0);
  auto d = load(two.algebra_text);
  EXPECT_EQ(d.algebra.quiver().vertex_count(), 1u);
  auto r = module_complexity(d.algebra, ModuleExpr(simple_key(d.algebra, 0)));
  EXPECT_TRUE(same_class(r.cls, pe(integer(2), 0)));
  EXPECT_THROW(realize_class(quiver_of("vertex v\n"), 1), Error);
  EXPECT_THROW(realize_class(quiver_of("vertex v\nvertex w\narrow a : v -> w\n"), 1), Error);
}

TEST(Subdivide, Examples) {
  Quiver fib = quiver_of(kFibonacciText);
  Quiver same = subdivide(fib, 1);
  EXPECT_EQ(same.vertices(), fib.vertices());
  EXPECT_EQ(arrow_pairs(same), arrow_pairs(fib));
  Quiver two = subdivide(fib, 2);
  EXPECT_EQ(two.vertex_count(), 5u);
  AlgebraicReal r = perron_root(adjacency_matrix(two.vertex_count(), arrow_pairs(two)));
  // r^2 = φ, so r is the largest root of x^4 - x^2 - 1
  EXPECT_TRUE(algebraic_equal(r, *largest_real_root(IntPolynomial{-1, -1, 1}.compose_power(2))));
  EXPECT_NE(compare(r, Rational(1)), std::strong_ordering::less);
  Quiver loop3 = subdivide(quiver_of(kSingleLoop), 3);
  EXPECT_EQ(loop3.vertex_count(), 3u);
  EXPECT_TRUE(algebraic_equal(perron_root(adjacency_matrix(3, arrow_pairs(loop3))), integer(1)));
}

TEST(Empirical, Examples) {
  auto f = fibonacci_dims(40);
  EmpiricalCheck c = empirical_class_check(f, pe(phi(), 0), 5, 40);
  EXPECT_TRUE(c.ok);
  // dim Ω^n S_1 = F(n+1), so the ratio tends to φ/√5
  EXPECT_GT(c.min_ratio, 0.72);
  EXPECT_LT(c.max_ratio, 0.73);
  std::vector<BigInt> ones(50, 1);
  EmpiricalCheck o = empirical_class_check(ones, pe(integer(1), 0), 5, 40);
  EXPECT_TRUE(o.ok);
  EXPECT_DOUBLE_EQ(o.min_ratio, 1.0);
  EXPECT_DOUBLE_EQ(o.max_ratio, 1.0);
  EXPECT_FALSE(empirical_class_check(f, pe(integer(1), 1), 5, 40).ok);
  EXPECT_THROW(empirical_class_check(f, pe(phi(), 0), 5, 10), Error);
  EXPECT_THROW(empirical_class_check(f, pe(phi(), 0), 5, 60), Error);
}
