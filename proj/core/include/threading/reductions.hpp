#pragma once

#include <map>
#include <optional>
#include <vector>

#include "threading/constraints.hpp"
#include "threading/graph.hpp"
#include "threading/junction.hpp"
#include "threading/matching.hpp"

namespace threading {

// A matching instance derived from a Graph, remembering which instance nodes
// realize what. For every edge e of G there are copies(e) copy-node pairs
// {u-side, v-side}; each pair is joined by a zero-weight "doubling" edge whose
// absence from a perfect matching raises x_e by one. slots[v] are the
// d(v)-2 auxiliary nodes of vertex v.
struct ReductionGraph {
  MatchingInstance inst;
  std::vector<std::vector<std::pair<int, int>>> copies;  // per edge of G
  std::vector<std::vector<int>> slots;                   // per vertex of G
};

// Unweighted existence instance: per edge uv, min(d(u),d(v))-2 copy pairs;
// per vertex, d(v)-2 slot nodes joined to the v-side copy node of every
// incident edge. A perfect matching exists iff g has a perfect threading.
ReductionGraph build_H(const Graph& g);

// Optimization instance: Delta-2 copy pairs per edge. Slot-to-copy edges
// weigh 1/2, copy-to-copy edges between distinct incident edges at a shared
// vertex weigh 1. Minimum matching weight W gives optimum length W + m.
// Requires max degree >= 3.
ReductionGraph build_Hhat(const Graph& g);

// Weighted variant: slot edges weigh l(uv)/2, cross edges (l(uv)+l(wv))/2.
// Coincides with build_Hhat on unit lengths. Optimum length = W + sum of
// lengths.
ReductionGraph build_Htilde(const Graph& g);

// Counts recovered from a perfect matching: x_e = 1 + number of copy pairs
// of e whose doubling edge is unmatched. Throws std::invalid_argument if M
// is not perfect on the instance.
CountVector phi(const Graph& g, const ReductionGraph& h, const MatchingSolution& m);
CountVector psi(const Graph& g, const ReductionGraph& h, const MatchingSolution& m);

// Witness counts of a perfect threading (length exactly 2m-n), or nullopt
// when none exists.
std::optional<CountVector> has_perfect_threading(const Graph& g);

struct SolveResult {
  CountVector counts;
  ThreadingWalk walk;
  Rational length;
};

// Exact optimum: minimum-weight perfect matching on the optimization
// instance, counts via psi, walk via realize_walk. Single cycles (max degree
// 2) short-circuit to the all-ones threading.
SolveResult solve_optimal(const Graph& g);

// Optimum subject to x_e <= cap(e). Edges absent from the map are uncapped.
// Returns nullopt when no threading respects the caps. Throws
// std::invalid_argument on caps < 1 or unknown edge ids.
std::optional<SolveResult> solve_capped(const Graph& g,
                                        const std::map<EdgeId, long long>& cap);

}  // namespace threading
