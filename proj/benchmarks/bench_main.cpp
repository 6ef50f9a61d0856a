#include <benchmark/benchmark.h>

#include "relnet/cactus.hpp"
#include "relnet/corpus.hpp"
#include "relnet/flow.hpp"
#include "relnet/oracle.hpp"
#include "relnet/rsnd3.hpp"
#include "relnet/sdk.hpp"
#include "relnet/snd.hpp"

namespace {

using namespace relnet;

Graph chained_blocks(int blocks) {
  // A chain of K4 blocks joined by bridge pairs; scales the cactus and the
  // hierarchy machinery without leaving the unit-weight regime.
  std::vector<std::tuple<VertexId, VertexId, double>> edges;
  int n = 4 * blocks;
  for (int b = 0; b < blocks; ++b) {
    int base = 4 * b;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) edges.emplace_back(base + u, base + v, 1.0);
    if (b + 1 < blocks) {
      edges.emplace_back(base + 0, base + 4, 1.0);
      edges.emplace_back(base + 3, base + 7, 1.0);
    }
  }
  return Graph(n, edges);
}

void bm_max_flow(benchmark::State& state) {
  Rng rng(1);
  Graph g = random_two_edge_connected_multigraph(rng, 8, 14);
  for (auto _ : state) {
    FlowResult r = max_flow(g, {0}, {g.vertex_count() - 1});
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(bm_max_flow);

void bm_min_cost_flow(benchmark::State& state) {
  Graph g = chained_blocks(3);
  for (auto _ : state) {
    auto sol = min_cost_flow(g, 0, g.vertex_count() - 1, 2);
    benchmark::DoNotOptimize(sol->weight);
  }
}
BENCHMARK(bm_min_cost_flow);

void bm_build_cactus(benchmark::State& state) {
  Graph g = chained_blocks(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    CactusModel model = build_cactus(g);
    benchmark::DoNotOptimize(model.cycles.size());
  }
}
BENCHMARK(bm_build_cactus)->Arg(2)->Arg(4)->Arg(6);

void bm_solve_3rsnd(benchmark::State& state) {
  Graph g = chained_blocks(static_cast<int>(state.range(0)));
  std::vector<Demand> demands{{1, g.vertex_count() - 3, 3}};
  for (auto _ : state) {
    Solution sol = solve_3rsnd(g, demands);
    benchmark::DoNotOptimize(sol.weight);
  }
}
BENCHMARK(bm_solve_3rsnd)->Arg(2)->Arg(4);

void bm_solve_sdk(benchmark::State& state) {
  Graph g = chained_blocks(2);
  for (auto _ : state) {
    Solution sol = solve_sdk(g, 1, g.vertex_count() - 3, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(sol.weight);
  }
}
BENCHMARK(bm_solve_sdk)->Arg(3)->Arg(4);

void bm_solve_kefts(benchmark::State& state) {
  Graph g = fixtures::cube();
  for (auto _ : state) {
    Solution sol = solve_kefts(g, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(sol.weight);
  }
}
BENCHMARK(bm_solve_kefts)->Arg(2)->Arg(3);

void bm_fault_enumeration(benchmark::State& state) {
  Graph g = fixtures::two_k4();
  EdgeSet h;
  for (EdgeId e = 0; e < g.edge_count(); ++e) h.insert(e);
  std::vector<Demand> demands{{1, 5, 3}};
  for (auto _ : state) {
    auto report = feasible_by_fault_enumeration(g, h, demands);
    benchmark::DoNotOptimize(report.feasible);
  }
}
BENCHMARK(bm_fault_enumeration);

void bm_exact_optimum(benchmark::State& state) {
  Graph g = fixtures::two_k4();
  std::vector<Demand> demands{{1, 5, 3}};
  for (auto _ : state) {
    Solution opt = exact_optimum(g, demands);
    benchmark::DoNotOptimize(opt.weight);
  }
}
BENCHMARK(bm_exact_optimum);

void bm_important_separators(benchmark::State& state) {
  Graph g = fixtures::cube();
  for (auto _ : state) {
    auto seps = enumerate_important_separators(g, {0}, {7}, 3);
    benchmark::DoNotOptimize(seps.size());
  }
}
BENCHMARK(bm_important_separators);

}  // namespace

BENCHMARK_MAIN();
