#pragma once

#include <string>
#include <vector>

#include "threading/constraints.hpp"
#include "threading/graph.hpp"

namespace threading {

// Multigraph on the tubes incident to one vertex. `tubes` holds edge indices
// of G in canonical order; `links` are index pairs into `tubes`. Invariants:
// no self-loops, connected, degree of tube t_uv equals x_uv.
struct JunctionGraph {
  int owner = -1;                             // vertex index
  std::vector<int> tubes;                     // edge indices of G
  std::vector<std::pair<int, int>> links;     // positions in `tubes`
};

// Builds a tree on d labeled nodes with the prescribed degrees via the
// two-stack procedure. Requires d >= 2, all degrees >= 1, sum == 2(d-1).
// Returns the d-1 tree edges. Throws std::invalid_argument otherwise.
std::vector<std::pair<int, int>> degree_tree(const std::vector<long long>& degrees);

// Builds the junction graph at v for the given counts: repeatedly pairs off
// the two largest remaining counts as redundant links (lexicographically
// smallest tube among ties) until C4 holds with equality, then attaches the
// degree tree. Requires the counts restricted to v to satisfy C1-C4.
JunctionGraph build_junction(const Graph& g, int v, const CountVector& x);

// Union of all junction graphs over tube nodes.
struct ThreadingGraph {
  struct Link {
    int tube_a;  // edge index of G
    int tube_b;
    int owner;   // vertex index of G
  };
  int tube_count = 0;
  std::vector<Link> links;
};

// Requires one junction graph per vertex, mutually consistent on shared
// tubes. Throws std::invalid_argument on inconsistent degrees.
ThreadingGraph build_threading_graph(const Graph& g, const std::vector<JunctionGraph>& junctions);

// Closed walk through G, stored as the cyclic vertex sequence (the final
// return to vertices.front() is implied). Consecutive entries are adjacent
// in G and consecutive steps never reuse an edge.
struct ThreadingWalk {
  std::vector<std::string> vertices;

  static ThreadingWalk parse(const std::string& text);  // comma-separated ids
  std::string to_text() const;
};

// Finds a closed walk using every threading-graph link exactly once with no
// U-turns. Each tube node pairs its two owners' link endpoints one-to-one;
// the resulting closed trails are merged by swapping transition pairs at a
// shared node until a single trail remains, which connectivity guarantees.
// When `link_order` is non-null it receives, per link, its position in the
// emitted walk.
ThreadingWalk euler_no_uturn(const Graph& g, const ThreadingGraph& tg,
                             std::vector<int>* link_order = nullptr);

struct WalkReport {
  bool ok = false;
  std::string error;        // first failed check, with location
  CountVector counts;       // induced counts, valid when ok
};

// Checks coverage, absence of U-turns, and per-vertex junction connectivity.
WalkReport verify_walk(const Graph& g, const ThreadingWalk& walk);

// Full realization pipeline for a validated count vector: junction graphs,
// threading graph, no-U-turn Euler tour.
ThreadingWalk realize_walk(const Graph& g, const CountVector& x);

}  // namespace threading
