// Solver and matching-engine benchmarks on seeded ring-plus-chords graphs.

#include <random>
#include <set>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "threading/junction.hpp"
#include "threading/matching.hpp"
#include "threading/reductions.hpp"

using namespace threading;

namespace {

// Ring of n vertices plus n/2 random chords, max degree capped at 6.
Graph ring_with_chords(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::set<std::pair<int, int>> picked;
  std::vector<int> deg(n, 2);
  for (int i = 0; i < n; ++i) picked.insert(std::minmax(i, (i + 1) % n));
  int added = 0;
  while (added < n / 2) {
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a == b || deg[a] >= 6 || deg[b] >= 6) continue;
    if (!picked.insert(std::minmax(a, b)).second) continue;
    ++deg[a], ++deg[b], ++added;
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : picked)
    edges.emplace_back("v" + std::to_string(a), "v" + std::to_string(b));
  return Graph::from_edges(edges);
}

void bm_solve_optimal(benchmark::State& state) {
  Graph g = ring_with_chords(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) {
    SolveResult r = solve_optimal(g);
    benchmark::DoNotOptimize(r.length);
  }
  state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(bm_solve_optimal)->Arg(25)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void bm_realize_walk(benchmark::State& state) {
  Graph g = ring_with_chords(static_cast<int>(state.range(0)), 42);
  CountVector counts = solve_optimal(g).counts;
  for (auto _ : state) {
    ThreadingWalk w = realize_walk(g, counts);
    benchmark::DoNotOptimize(w.vertices.size());
  }
}
BENCHMARK(bm_realize_walk)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void bm_matching_engine(benchmark::State& state) {
  // Benchmark the blossom engine on the solver's own reduction instance.
  Graph g = ring_with_chords(static_cast<int>(state.range(0)), 42);
  MatchingInstance inst = build_Hhat(g).inst;
  for (auto _ : state) {
    auto sol = min_weight_perfect_matching(inst);
    benchmark::DoNotOptimize(sol->weight);
  }
  state.counters["nodes"] = static_cast<double>(inst.labels().size());
}
BENCHMARK(bm_matching_engine)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
