#include "threading/special_cases.hpp"

#include <algorithm>
#include <stdexcept>

#include "threading/matching.hpp"
#include "threading/reductions.hpp"

namespace threading {

CyclePacking max_disjoint_cycles(const Graph& g, PackingObjective objective) {
  MatchingInstance inst;
  // Per vertex v: minus nodes D_v^-[0..d), plus nodes D_v^+[0..d); the i-th
  // incident edge of v is tied to D_v^+[i].
  std::vector<int> minus_base(g.vertex_count()), plus_base(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    minus_base[v] = inst.node_count();
    for (int i = 0; i < d; ++i) inst.add_node(g.label(v) + "-" + std::to_string(i));
    plus_base[v] = inst.node_count();
    for (int i = 0; i < d; ++i) inst.add_node(g.label(v) + "+" + std::to_string(i));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        inst.add_edge(minus_base[v] + i, plus_base[v] + k, Rational(0));
    inst.add_edge(minus_base[v], minus_base[v] + 1, Rational(0));
  }
  auto plus_node = [&](int v, int e) {
    const auto& inc = g.incident(v);
    for (int i = 0; i < static_cast<int>(inc.size()); ++i)
      if (inc[i].edge == e) return plus_base[v] + i;
    throw std::logic_error("tube not incident to vertex");
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    Rational w = objective == PackingObjective::EdgeCount ? Rational(1) : g.edge(e).length;
    inst.add_edge(plus_node(g.edge(e).u, e), plus_node(g.edge(e).v, e), w);
  }

  auto sol = max_weight_perfect_matching(inst);
  if (!sol) throw std::logic_error("cycle-packing gadget has no perfect matching");

  // Matched tube edges form a subgraph where every touched vertex has
  // exactly two matched tubes: vertex-disjoint simple cycles.
  std::vector<char> selected(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    int a = plus_node(g.edge(e).u, e);
    int b = plus_node(g.edge(e).v, e);
    if (sol->mate(a) == b) selected[e] = 1;
  }

  CyclePacking packing;
  packing.total_length = Rational(0);
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());  // (neighbor, edge)
  for (int e = 0; e < g.edge_count(); ++e)
    if (selected[e]) {
      adj[g.edge(e).u].emplace_back(g.edge(e).v, e);
      adj[g.edge(e).v].emplace_back(g.edge(e).u, e);
      packing.edges.push_back(e);
      ++packing.total_edges;
      packing.total_length += g.edge(e).length;
    }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!adj[v].empty() && adj[v].size() != 2)
      throw std::logic_error("cycle packing: vertex with matched tube degree != 2");

  std::vector<char> used(g.edge_count(), 0);
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (adj[start].empty() || used[adj[start][0].second]) continue;
    std::vector<int> cycle;
    int v = start;
    int via = -1;
    do {
      cycle.push_back(v);
      const auto& options = adj[v];
      auto [next, e] = options[0].second != via ? options[0] : options[1];
      used[e] = 1;
      via = e;
      v = next;
    } while (v != start);
    packing.cycles.push_back(std::move(cycle));
  }
  return packing;
}

SpecialSolve solve_cubic(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3)
      throw std::invalid_argument("solve_cubic: vertex " + g.label(v) + " has degree " +
                                  std::to_string(g.degree(v)));
  MatchingInstance inst;
  for (int v = 0; v < g.vertex_count(); ++v) inst.add_node(g.label(v));
  for (int e = 0; e < g.edge_count(); ++e)
    inst.add_edge(g.edge(e).u, g.edge(e).v, g.edge(e).length);

  auto sol = min_weight_perfect_matching(inst);
  if (!sol) {
    auto general = solve_optimal(g);
    return SpecialSolve{std::move(general.counts), general.length};
  }
  CountVector counts = CountVector::all(g, 1);
  for (int e = 0; e < g.edge_count(); ++e)
    if (sol->mate(g.edge(e).u) == g.edge(e).v) counts.counts[e] = 2;
  Rational length = threading_length(g, counts);
  return SpecialSolve{std::move(counts), length};
}

SpecialSolve solve_double(const Graph& g) {
  PackingObjective objective =
      g.unit_lengths() ? PackingObjective::EdgeCount : PackingObjective::TotalLength;
  CyclePacking packing = max_disjoint_cycles(g, objective);
  CountVector counts = CountVector::all(g, 2);
  for (int e : packing.edges) counts.counts[e] = 1;
  Rational length = threading_length(g, counts);
  return SpecialSolve{std::move(counts), length};
}

}  // namespace threading
