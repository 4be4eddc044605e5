#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "syzcx/complexity.hpp"
#include "syzcx/oracle.hpp"
#include "syzcx/parser.hpp"
#include "syzcx/spectra.hpp"

using namespace syzcx;

namespace {

IntMatrix random_adjacency(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, (i + 1) % n) = 1;
    for (std::size_t j = 0; j < n; ++j) m(i, j) += std::uniform_int_distribution<long>(0, 1)(rng);
  }
  return m;
}

/// Radical-square-zero algebra on a k-level chain over the Fibonacci quiver.
std::string realized_text(int ell) {
  Quiver h;
  h.add_vertex("1");
  h.add_vertex("2");
  h.add_arrow("a", 0, 1);
  h.add_arrow("b", 1, 0);
  h.add_arrow("g", 1, 1);
  return realize_class(h, ell).algebra_text;
}

void BM_CharPoly(benchmark::State& state) {
  IntMatrix m = random_adjacency(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_PerronRoot(benchmark::State& state) {
  IntMatrix m = random_adjacency(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(perron_root(m));
}
BENCHMARK(BM_PerronRoot)->Arg(8)->Arg(16)->Arg(32);

void BM_ModuleComplexity(benchmark::State& state) {
  AlgebraSpec spec = parse_algebra(realized_text(static_cast<int>(state.range(0))));
  MonomialAlgebra a = validate_admissible(spec);
  ModuleExpr m(simple_key(a, static_cast<int>(a.quiver().vertex_count()) - 1));
  for (auto _ : state) benchmark::DoNotOptimize(module_complexity(a, m));
}
BENCHMARK(BM_ModuleComplexity)->Arg(1)->Arg(4)->Arg(16);

void BM_OracleXyz(benchmark::State& state) {
  AlgebraTable t = *builtin_table("xyz-local");
  for (auto _ : state)
    benchmark::DoNotOptimize(dim_sequence(simple_rep(t, 0, kOraclePrimes[0]), t, static_cast<int>(state.range(0)), 1000000));
}
BENCHMARK(BM_OracleXyz)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
