#pragma once

#include <vector>

#include "threading/constraints.hpp"
#include "threading/graph.hpp"

namespace threading {

// Vertex-disjoint simple cycles of g.
struct CyclePacking {
  std::vector<std::vector<int>> cycles;  // vertex index sequences
  std::vector<int> edges;                // sorted edge indices on some cycle
  long long total_edges = 0;
  Rational total_length;
};

enum class PackingObjective { EdgeCount, TotalLength };

// Maximum vertex-disjoint cycle packing via a per-vertex bipartite gadget
// reduction to maximum-weight perfect matching: each vertex v gets a
// zero-weight K_{d(v),d(v)} plus one zero-weight edge inside its minus side;
// tubes are matched one-to-one with plus-side nodes and carry weight 1 (or
// the tube length). Matched tube edges form the packing.
CyclePacking max_disjoint_cycles(const Graph& g, PackingObjective objective);

struct SpecialSolve {
  CountVector counts;
  Rational length;
};

// Cubic fast path: a perfect threading exists iff g has a perfect matching;
// doubled edges are exactly a (minimum-length) perfect matching of g itself.
// Falls back to the general solver when g has no perfect matching. Throws
// std::invalid_argument when g is not 3-regular.
SpecialSolve solve_cubic(const Graph& g);

// Double threading: counts in {1,2}, single-threaded exactly on a maximum
// cycle packing; length 2m - |C| (weighted: 2*sum(l) - packing length).
SpecialSolve solve_double(const Graph& g);

}  // namespace threading
