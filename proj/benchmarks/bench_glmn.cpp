#include <benchmark/benchmark.h>

#include "glmn/analysis.hpp"
#include "glmn/characters.hpp"

namespace {

glmn::Rank rank_of(const benchmark::State& state) {
  return glmn::Rank(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
}

void BM_BuildLattice(benchmark::State& state) {
  const auto r = rank_of(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(glmn::build_lattice(r));
}
BENCHMARK(BM_BuildLattice)->Args({3, 2})->Args({4, 4})->Args({5, 5});

void BM_ContractAtWeight(benchmark::State& state) {
  const auto r = rank_of(state);
  const auto g = glmn::build_lattice(r);
  std::vector<glmn::Rational> t(r.dim());
  for (std::size_t k = 0; k < t.size(); ++k)
    t[k] = glmn::Rational(static_cast<glmn::Integer>(k % 3));
  const auto nu = glmn::from_pairings(r, t);
  for (auto _ : state)
    benchmark::DoNotOptimize(glmn::contract_at_weight(g, nu));
}
BENCHMARK(BM_ContractAtWeight)->Args({3, 2})->Args({4, 4})->Args({5, 5});

void BM_DistanceTable(benchmark::State& state) {
  const auto g = glmn::build_lattice(rank_of(state));
  for (auto _ : state)
    benchmark::DoNotOptimize(glmn::DistanceTable(g));
}
BENCHMARK(BM_DistanceTable)->Args({3, 2})->Args({4, 4})->Args({5, 5});

void BM_VermaNumerator(benchmark::State& state) {
  const auto r = rank_of(state);
  const auto p = glmn::Partition::full(r);
  const auto nu = glmn::rho(r);
  for (auto _ : state)
    benchmark::DoNotOptimize(glmn::verma_numerator(p, nu));
}
BENCHMARK(BM_VermaNumerator)->Args({2, 2})->Args({3, 2})->Args({3, 3});

void BM_RainbowSweep(benchmark::State& state) {
  const glmn::Sweep sweep{rank_of(state), 2, true};
  for (auto _ : state)
    benchmark::DoNotOptimize(glmn::verify_rainbow_shortest(sweep));
}
BENCHMARK(BM_RainbowSweep)->Args({2, 2})->Args({3, 2})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
