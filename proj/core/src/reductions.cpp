#include "threading/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace threading {

namespace {

// Shared construction skeleton. copies_per_edge fixes the number of copy
// pairs of each edge; slot/cross weight callbacks distinguish the existence
// instance (all zero, no cross edges) from the optimization instances.
ReductionGraph build_instance(const Graph& g, const std::vector<int>& copies_per_edge,
                              bool cross_edges,
                              const std::vector<Rational>& slot_weight_per_edge,
                              const std::vector<Rational>& cross_weight_base) {
  ReductionGraph r;
  r.copies.resize(g.edge_count());
  r.slots.resize(g.vertex_count());

  for (int e = 0; e < g.edge_count(); ++e) {
    EdgeId id = g.edge_id(e);
    for (int i = 0; i < copies_per_edge[e]; ++i) {
      int a = r.inst.add_node(id.u + "~" + id.v + "#" + std::to_string(i));
      int b = r.inst.add_node(id.v + "~" + id.u + "#" + std::to_string(i));
      r.inst.add_edge(a, b, Rational(0));
      r.copies[e].emplace_back(a, b);
    }
  }
  // copy node of edge e facing vertex v's junction
  auto side = [&](int e, int v, int i) {
    return g.edge(e).u == v ? r.copies[e][i].first : r.copies[e][i].second;
  };

  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int s = 0; s < g.degree(v) - 2; ++s)
      r.slots[v].push_back(r.inst.add_node(g.label(v) + "@" + std::to_string(s)));
    for (int slot : r.slots[v])
      for (const auto& inc : g.incident(v))
        for (int i = 0; i < copies_per_edge[inc.edge]; ++i)
          r.inst.add_edge(slot, side(inc.edge, v, i), slot_weight_per_edge[inc.edge]);
    if (!cross_edges) continue;
    const auto& inc = g.incident(v);
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        Rational w = cross_weight_base[inc[a].edge] + cross_weight_base[inc[b].edge];
        for (int i = 0; i < copies_per_edge[inc[a].edge]; ++i)
          for (int k = 0; k < copies_per_edge[inc[b].edge]; ++k)
            r.inst.add_edge(side(inc[a].edge, v, i), side(inc[b].edge, v, k), w);
      }
  }
  return r;
}

std::vector<Rational> half_lengths(const Graph& g, bool weighted) {
  std::vector<Rational> h(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    h[e] = (weighted ? g.edge(e).length : Rational(1)) / 2;
  return h;
}

ReductionGraph build_opt(const Graph& g, const std::vector<int>& copies_per_edge,
                         bool weighted) {
  auto half = half_lengths(g, weighted);
  return build_instance(g, copies_per_edge, true, half, half);
}

CountVector counts_from_matching(const Graph& g, const ReductionGraph& h,
                                 const MatchingSolution& m) {
  if (2 * static_cast<int>(m.pairs.size()) != h.inst.node_count())
    throw std::invalid_argument("counts_from_matching: matching is not perfect");
  CountVector x = CountVector::all(g, 1);
  for (int e = 0; e < g.edge_count(); ++e)
    for (const auto& [a, b] : h.copies[e])
      if (m.mate(a) != b) ++x.counts[e];
  return x;
}

SolveResult all_ones_solution(const Graph& g) {
  CountVector x = CountVector::all(g, 1);
  Rational length = threading_length(g, x);
  ThreadingWalk walk = realize_walk(g, x);
  return SolveResult{std::move(x), std::move(walk), length};
}

std::optional<SolveResult> solve_with_copies(const Graph& g,
                                             const std::vector<int>& copies_per_edge) {
  ReductionGraph h = build_opt(g, copies_per_edge, !g.unit_lengths());
  auto m = min_weight_perfect_matching(h.inst);
  if (!m) return std::nullopt;
  CountVector x = psi(g, h, *m);
  Rational length = threading_length(g, x);
  if (length != m->weight + g.total_length())
    throw std::logic_error("reduction weight identity violated");
  ThreadingWalk walk = realize_walk(g, x);
  return SolveResult{std::move(x), std::move(walk), length};
}

}  // namespace

ReductionGraph build_H(const Graph& g) {
  std::vector<int> copies(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    copies[e] = std::min(g.degree(g.edge(e).u), g.degree(g.edge(e).v)) - 2;
  std::vector<Rational> zero(g.edge_count(), Rational(0));
  return build_instance(g, copies, false, zero, zero);
}

ReductionGraph build_Hhat(const Graph& g) {
  if (g.max_degree() < 3) throw std::invalid_argument("build_Hhat: max degree must be >= 3");
  return build_opt(g, std::vector<int>(g.edge_count(), g.max_degree() - 2), false);
}

ReductionGraph build_Htilde(const Graph& g) {
  if (g.max_degree() < 3) throw std::invalid_argument("build_Htilde: max degree must be >= 3");
  return build_opt(g, std::vector<int>(g.edge_count(), g.max_degree() - 2), true);
}

CountVector phi(const Graph& g, const ReductionGraph& h, const MatchingSolution& m) {
  return counts_from_matching(g, h, m);
}

CountVector psi(const Graph& g, const ReductionGraph& h, const MatchingSolution& m) {
  return counts_from_matching(g, h, m);
}

std::optional<CountVector> has_perfect_threading(const Graph& g) {
  ReductionGraph h = build_H(g);
  auto m = min_weight_perfect_matching(h.inst);
  if (!m) return std::nullopt;
  return phi(g, h, *m);
}

SolveResult solve_optimal(const Graph& g) {
  if (g.max_degree() == 2) return all_ones_solution(g);
  auto result = solve_with_copies(g, std::vector<int>(g.edge_count(), g.max_degree() - 2));
  if (!result) throw std::logic_error("optimization instance unexpectedly infeasible");
  return std::move(*result);
}

std::optional<SolveResult> solve_capped(const Graph& g,
                                        const std::map<EdgeId, long long>& cap) {
  std::vector<long long> caps(g.edge_count(), g.max_degree() > 2 ? g.max_degree() - 1 : 1);
  for (const auto& [id, c] : cap) {
    if (c < 1) throw std::invalid_argument("solve_capped: caps must be >= 1");
    int u = g.vertex_index(id.u);
    int v = g.vertex_index(id.v);
    int e = u >= 0 && v >= 0 ? g.edge_index(u, v) : -1;
    if (e < 0) throw std::invalid_argument("solve_capped: unknown edge " + id.u + " " + id.v);
    caps[e] = std::min(caps[e], c);
  }
  if (g.max_degree() == 2) return all_ones_solution(g);  // caps >= 1 always admit it
  std::vector<int> copies(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) copies[e] = static_cast<int>(caps[e]) - 1;
  return solve_with_copies(g, copies);
}

}  // namespace threading
