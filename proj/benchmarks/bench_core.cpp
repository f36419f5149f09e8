#include <benchmark/benchmark.h>

#include "pgfr/engine.hpp"
#include "pgfr/walker.hpp"

namespace {

pgfr::ConnectionSet canonical_set(std::int64_t n) {
  return {n, {1, 2 * n - 1}, true};
}

void BM_CycloMultiply(benchmark::State& state) {
  const std::int64_t order = state.range(0);
  pgfr::Cyclo a = pgfr::Cyclo::root_of_unity(order, 1) + pgfr::Cyclo::root_of_unity(order, 3);
  pgfr::Cyclo b = pgfr::Cyclo::root_of_unity(order, 7) + pgfr::Cyclo::from_rational(order, 5);
  for (auto _ : state) {
    pgfr::Cyclo c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CycloMultiply)->Arg(12)->Arg(60)->Arg(116);

void BM_EigenvalueTable(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  pgfr::ConnectionSet s = canonical_set(n);
  pgfr::eigenvalues(s);  // warm the representation cache
  for (auto _ : state) {
    auto table = pgfr::eigenvalues(s);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_EigenvalueTable)->Arg(8)->Arg(15)->Arg(30);

void BM_RelationLattice(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  pgfr::ConnectionSet s = canonical_set(n);
  pgfr::eigenvalues(s);
  for (auto _ : state) {
    auto lattice = pgfr::relation_lattice(s);
    benchmark::DoNotOptimize(lattice);
  }
}
BENCHMARK(BM_RelationLattice)->Arg(8)->Arg(15)->Arg(30);

void BM_TransitionMatrix(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  pgfr::ConnectionSet s = canonical_set(n);
  pgfr::WalkEvaluator walk(s);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.1;
    auto h = walk.full(t);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_TransitionMatrix)->Arg(8)->Arg(15);

void BM_FidelityEntry(benchmark::State& state) {
  pgfr::ConnectionSet s = canonical_set(8);
  pgfr::WalkEvaluator walk(s);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.1;
    benchmark::DoNotOptimize(walk.entry(8, 0, t));
  }
}
BENCHMARK(BM_FidelityEntry);

void BM_OracleSmall(benchmark::State& state) {
  pgfr::ConnectionSet s = canonical_set(3);
  pgfr::relation_lattice(s);
  for (auto _ : state) {
    auto result = pgfr::brute_force_oracle(s, state.range(0));
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_OracleSmall)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
