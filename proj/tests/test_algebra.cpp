#include <gtest/gtest.h>

#include <functional>

#include "test_support.hpp"

using namespace syzcx;
using syzcx::testing::kFibonacciText;
using syzcx::testing::load;

namespace {

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

Path P(const MonomialAlgebra& a, const std::string& literal) { return parse_path_literal(a.quiver(), literal); }

std::vector<std::string> path_names(const MonomialAlgebra& a) {
  std::vector<std::string> out;
  for (const auto& p : a.nonzero_paths()) out.push_back(path_string(a.quiver(), p));
  return out;
}

}  // namespace

TEST(Parser, FibonacciSpec) {
  AlgebraSpec s = parse_algebra(kFibonacciText);
  EXPECT_EQ(s.name, "fib");
  EXPECT_EQ(s.quiver.vertex_count(), 2u);
  EXPECT_EQ(s.quiver.arrow_count(), 3u);
  EXPECT_EQ(s.relations.size(), 5u);
  ASSERT_NE(s.find_module("S1"), nullptr);
  EXPECT_EQ(s.find_module("S1")->terms.size(), 1u);
  EXPECT_EQ(s.find_module("nope"), nullptr);
}

TEST(Parser, OnePointQuiver) {
  AlgebraSpec s = parse_algebra("vertex v\n");
  EXPECT_EQ(s.quiver.vertex_count(), 1u);
  EXPECT_TRUE(s.relations.empty());
  MonomialAlgebra a = validate_admissible(s);
  EXPECT_EQ(path_names(a), std::vector<std::string>{"ev"});
}

TEST(Parser, DeclarationOrderIsFree) {
  AlgebraSpec s = parse_algebra("module M = 2*S(v) + P(w)\nrelation x.x\narrow x : v -> v\nvertex v\nvertex w\n");
  EXPECT_EQ(s.quiver.vertex(0), "v");
  ASSERT_EQ(s.modules.size(), 1u);
  EXPECT_EQ(s.modules[0].terms[0].multiplicity, 2);
  EXPECT_EQ(s.modules[0].terms[1].kind, ModuleTerm::Kind::projective);
}

TEST(Parser, Errors) {
  EXPECT_EQ(error_code([] { parse_algebra("vertex 1\nvertex 2\narrow a : 1 -> 2\nrelation a.a\n"); }), "non_composable");
  EXPECT_EQ(error_code([] { parse_algebra("vertex v\nvertex v\n"); }), "duplicate_identifier");
  EXPECT_EQ(error_code([] { parse_algebra("vertex v\narrow a : v -> w\n"); }), "unknown_reference");
  EXPECT_EQ(error_code([] { parse_algebra("vertex v\narrow a v -> v\n"); }), "syntax_error");
  EXPECT_EQ(error_code([] { parse_algebra("vertex v\nmodule M = S(q)\n"); }), "unknown_reference");
  try {
    parse_algebra("vertex v\n\n  vertex ?\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
  }
}

TEST(Validate, FibonacciNonzeroPaths) {
  auto l = load(kFibonacciText);
  EXPECT_EQ(path_names(l.algebra), (std::vector<std::string>{"e1", "e2", "a", "b", "g"}));
  EXPECT_EQ(l.algebra.dimension(), 5u);
  EXPECT_EQ(l.algebra.max_relation_length(), 2);
}

TEST(Validate, TruncatedPolynomialRings) {
  auto l = load("vertex v\narrow x : v -> v\nrelation x.x\n");
  EXPECT_EQ(path_names(l.algebra), (std::vector<std::string>{"ev", "x"}));
  auto c = load("vertex v\narrow x : v -> v\nrelation x.x.x\n");
  EXPECT_EQ(path_names(c.algebra), (std::vector<std::string>{"ev", "x", "x.x"}));
  EXPECT_TRUE(c.algebra.is_nonzero(P(c.algebra, "x.x")));
}

TEST(Validate, FreeLoopIsInfinite) {
  try {
    load("vertex v\narrow x : v -> v\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "infinite_dimensional");
    EXPECT_EQ(e.kind(), ErrorKind::validation);
  }
}

TEST(Validate, RejectsShortRelationsAndDropsRedundantOnes) {
  EXPECT_EQ(error_code([] { load("vertex v\narrow x : v -> v\nrelation x\n"); }), "relation_too_short");
  auto l = load("vertex v\narrow x : v -> v\nrelation x.x\nrelation x.x.x\n");
  EXPECT_EQ(l.algebra.relations().size(), 1u);
}

TEST(Extend, Cases) {
  auto l = load(kFibonacciText);
  const auto& A = l.algebra;
  Extension ab = extend(P(A, "a"), P(A, "b"), A);
  EXPECT_FALSE(ab.path);
  EXPECT_EQ(ab.reason, ZeroReason::relation);
  Extension aa = extend(P(A, "a"), P(A, "a"), A);
  EXPECT_EQ(aa.reason, ZeroReason::non_composable);
  Extension ea = extend(P(A, "e1"), P(A, "a"), A);
  ASSERT_TRUE(ea.path);
  EXPECT_EQ(*ea.path, P(A, "a"));

  auto m = load("vertex 1\nvertex 2\narrow a : 1 -> 2\narrow b : 2 -> 1\narrow g : 2 -> 2\nrelation b.a\n"
                "relation g.g\nrelation a.g.b\nrelation g.b.a\n");
  Extension ag = extend(P(m.algebra, "a"), P(m.algebra, "g"), m.algebra);
  ASSERT_TRUE(ag.path);
  EXPECT_EQ(path_string(m.algebra.quiver(), *ag.path), "a.g");
}

TEST(Algebra, IsNonzeroAndIndexing) {
  auto l = load(kFibonacciText);
  const auto& A = l.algebra;
  EXPECT_FALSE(A.is_nonzero(P(A, "g.g")));
  EXPECT_TRUE(A.is_nonzero(P(A, "e2")));
  for (std::size_t i = 0; i < A.dimension(); ++i) EXPECT_EQ(A.index_of(A.nonzero_paths()[i]), static_cast<int>(i));
  int ia = *A.index_of(P(A, "a"));
  EXPECT_EQ(A.extend_by_arrow(*A.index_of(P(A, "e1")), *A.quiver().find_arrow("a")), ia);
  EXPECT_EQ(A.extend_by_arrow(ia, *A.quiver().find_arrow("b")), -1);
  EXPECT_EQ(A.extend_by_arrow(ia, *A.quiver().find_arrow("a")), -1);
}

TEST(Algebra, PathOrderIsLengthFirst) {
  auto l = load("vertex v\narrow x : v -> v\narrow y : v -> v\nrelation x.x\nrelation y.y\nrelation x.y.x\nrelation y.x.y\n");
  auto names = path_names(l.algebra);
  EXPECT_EQ(names, (std::vector<std::string>{"ev", "x", "y", "x.y", "y.x"}));
}
