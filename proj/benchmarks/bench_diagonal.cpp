#include <benchmark/benchmark.h>

#include "amc/clifford.hpp"
#include "amc/diagonal.hpp"
#include "amc/enumeration.hpp"
#include "amc/families.hpp"
#include "amc/moebius.hpp"

using namespace amc;

static void BM_RecursivePowerset(benchmark::State& state) {
  const Semilattice s = families::powerset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_recursive(s));
  state.SetLabel(std::to_string(s.size()) + " elements");
}
BENCHMARK(BM_RecursivePowerset)->DenseRange(2, 5);

static void BM_MobiusPowerset(benchmark::State& state) {
  const Semilattice s = families::powerset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_via_mobius(s));
}
BENCHMARK(BM_MobiusPowerset)->DenseRange(2, 5);

static void BM_SolverPowerset(benchmark::State& state) {
  const CliffordSemigroup g = trivial_clifford(families::powerset(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_solve(g));
}
BENCHMARK(BM_SolverPowerset)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_SolverG6(benchmark::State& state) {
  const Semilattice s = families::six_element();
  std::vector<FiniteAbelianGroup> groups(6);
  groups[3] = FiniteAbelianGroup::cyclic(6);
  const CliffordSemigroup g = build_clifford(s, groups, trivial_homs(s, groups)).value();
  for (auto _ : state) benchmark::DoNotOptimize(am_constant(g));
}
BENCHMARK(BM_SolverG6)->Unit(benchmark::kMillisecond);

static void BM_Enumerate(benchmark::State& state) {
  const auto strategy = state.range(1) == 0 ? EnumerationStrategy::PosetSpace : EnumerationStrategy::Extension;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_semilattices(static_cast<std::size_t>(state.range(0)), strategy));
  state.SetLabel(state.range(1) == 0 ? "poset space" : "extension");
}
BENCHMARK(BM_Enumerate)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
