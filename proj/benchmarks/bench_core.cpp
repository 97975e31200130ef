#include <benchmark/benchmark.h>

#include "fashion/dynamics.hpp"
#include "fashion/graph.hpp"
#include "fashion/metrics.hpp"
#include "fashion/oracle.hpp"
#include "fashion/patterns.hpp"

using namespace fashion;

namespace {

void BM_TorusConstruction(benchmark::State& state) {
  const auto side = static_cast<std::int32_t>(state.range(0));
  for (auto _ : state) {
    Network net = make_torus({side, side});
    benchmark::DoNotOptimize(net);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TorusConstruction)->Arg(41)->Arg(101)->Arg(201)->Complexity();

void BM_SmallWorldConstruction(benchmark::State& state) {
  Rng rng(7);
  for (auto _ : state) {
    Network net = make_small_world(200, static_cast<std::int32_t>(state.range(0)), 0.5, rng);
    benchmark::DoNotOptimize(net);
  }
}
BENCHMARK(BM_SmallWorldConstruction)->Arg(8)->Arg(58);

// agent-updates per second of the hot loop
void BM_Step(benchmark::State& state) {
  const auto side = static_cast<std::int32_t>(state.range(0));
  Network net = make_torus({side, side});
  Rng rng(11);
  TypeAssignment types = init_types(net.node_count(), 1.0, rng);
  ActionProfile x = init_profile(net.node_count(), rng);
  for (auto _ : state) {
    auto [next, flipped] = step(net, types, x, 0.5, rng);
    x = std::move(next);
    benchmark::DoNotOptimize(flipped);
  }
  state.SetItemsProcessed(state.iterations() * net.node_count());
}
BENCHMARK(BM_Step)->Arg(41)->Arg(201);

void BM_Indices(benchmark::State& state) {
  Network net = make_torus({41, 41});
  Rng rng(13);
  TypeAssignment types = init_types(net.node_count(), 0.5, rng);
  ActionProfile x = init_profile(net.node_count(), rng);
  for (auto _ : state) {
    IndexCounts counts = index_counts(net, types, x);
    benchmark::DoNotOptimize(counts);
  }
  state.SetItemsProcessed(state.iterations() * net.node_count());
}
BENCHMARK(BM_Indices);

void BM_FullRun(benchmark::State& state) {
  RunConfig config;
  config.network = TorusSpec{41, 41};
  config.rebel_ratio = 1.0;
  config.update_probability = 0.5;
  config.max_steps = 500;
  for (auto _ : state) {
    config.master_seed = static_cast<std::uint64_t>(state.iterations());
    RunRecord record = run(config);
    benchmark::DoNotOptimize(record);
  }
}
BENCHMARK(BM_FullRun);

void BM_Continents(benchmark::State& state) {
  Network net = make_torus({41, 41});
  Rng rng(17);
  ActionProfile x = init_profile(net.node_count(), rng);
  for (auto _ : state) {
    ContinentDecomposition d = continents(net, x);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Continents);

void BM_OracleEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::int32_t>(state.range(0));
  Network net = make_ring_lattice(n, 4);
  TypeAssignment types(static_cast<std::size_t>(n), AgentType::Rebel);
  for (auto _ : state) {
    EquilibriumSet set = enumerate_equilibria(net, types, n);
    benchmark::DoNotOptimize(set);
  }
}
BENCHMARK(BM_OracleEnumeration)->Arg(12)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
