#include <benchmark/benchmark.h>

#include <random>

#include "pga/analysis.hpp"
#include "pga/automaton.hpp"
#include "pga/linalg.hpp"
#include "pga/oracle.hpp"
#include "pga/parser.hpp"
#include "pga/semantics.hpp"

namespace {

using namespace pga;

const char* kPiranha =
    "P := bernoulli(1/2);\n"
    "if (P = 1) { R := 1 } else { R := bernoulli(1/2) };\n"
    "observe(R = 1)\n";

void BM_ParsePiranha(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse(kPiranha));
}
BENCHMARK(BM_ParsePiranha);

void BM_PiranhaPosteriorQuery(benchmark::State& state) {
  Program p = parse(kPiranha);
  const VarId var("P");
  for (auto _ : state) {
    Pga post = posterior(p);
    benchmark::DoNotOptimize(coefficient(post, Valuation{{var, 1}}));
  }
}
BENCHMARK(BM_PiranhaPosteriorQuery);

void BM_GeometricCoefficient(benchmark::State& state) {
  const VarId x("X");
  Pga a = infer(parse("X := geometric(1/2); Y := geometric(1/3)"));
  const auto degree = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(coefficient(a, Valuation{{x, degree}}));
}
BENCHMARK(BM_GeometricCoefficient)->Arg(8)->Arg(32)->Arg(128);

void BM_MarginalTable(benchmark::State& state) {
  Pga a = infer(parse("X := geometric(1/2); Y := geometric(2/3); observe(X <= 4)"));
  const VarId x("X"), y("Y");
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        marginal_table(a, {{x, bound}, {y, bound}}));
  }
}
BENCHMARK(BM_MarginalTable)->Arg(4)->Arg(16)->Arg(64);

void BM_GuardProduct(benchmark::State& state) {
  const VarId x("X");
  const auto chain = static_cast<std::uint64_t>(state.range(0));
  Pga a = dirac_pga(x, chain);
  Guard g = Guard::conjunction(Guard::atom(x, Cmp::Ge, 2), Guard::atom(x, Cmp::Le, 5));
  for (auto _ : state) benchmark::DoNotOptimize(guard_filter(a, g));
}
BENCHMARK(BM_GuardProduct)->Arg(8)->Arg(64)->Arg(256);

void BM_StarMatrixDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  RationalMatrix m(n, n);
  // Row sums strictly below one keep the star convergent.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng() % 4 == 0) m(i, j) = Rational(1, static_cast<long>(2 * n));
  for (auto _ : state) benchmark::DoNotOptimize(star_matrix(m));
}
BENCHMARK(BM_StarMatrixDense)->Arg(8)->Arg(32)->Arg(64);

void BM_BisimMinimizeParallelChains(benchmark::State& state) {
  const VarId x("X");
  const auto copies = static_cast<std::uint64_t>(state.range(0));
  Pga a(1 + static_cast<std::size_t>(copies) * 3);
  a.set_initial(0, 1);
  for (std::uint64_t c = 0; c < copies; ++c) {
    StateId base = static_cast<StateId>(1 + c * 3);
    a.add_transition(0, base, Rational(1, 2), x);
    a.add_transition(base, base + 1, Rational(1, 3));
    a.add_transition(base + 1, base + 2, Rational(1), x);
    a.set_final(base + 2, 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(bisim_minimize(a));
}
BENCHMARK(BM_BisimMinimizeParallelChains)->Arg(4)->Arg(32)->Arg(128);

void BM_OracleEnumerate(benchmark::State& state) {
  Program p = parse("X := geometric(1/2); Y := geometric(1/2); observe(X <= 8)");
  Rational epsilon(1, 1000000000);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate(p, epsilon));
}
BENCHMARK(BM_OracleEnumerate);

}  // namespace

BENCHMARK_MAIN();
