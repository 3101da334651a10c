#pragma once

#include <string>
#include <vector>

#include "threading/graph.hpp"

namespace threading {

// Per-edge visit counts, indexed by the graph's canonical edge order. The
// domain must equal E(g) exactly.
struct CountVector {
  std::vector<long long> counts;

  static CountVector all(const Graph& g, long long value) {
    return CountVector{std::vector<long long>(g.edge_count(), value)};
  }
  // Parses lines of `u v count`; every edge must appear exactly once.
  static CountVector parse(const Graph& g, const std::string& text);
  std::string to_text(const Graph& g) const;

  bool operator==(const CountVector&) const = default;
};

struct ConstraintViolation {
  enum Kind { C1, C2, C3, C4 } kind;
  int vertex;  // -1 for C1
  int edge;    // -1 for C2/C4
  std::string describe(const Graph& g) const;
};

struct ValidationReport {
  bool ok = false;
  std::vector<ConstraintViolation> violations;
};

// Evaluates the four local-threading constraints:
//   C1: every count >= 1;
//   C2: the counts around each vertex sum to an even number;
//   C3: no count exceeds the sum of the other counts at either endpoint;
//   C4: the counts around each vertex sum to at least 2(d(v)-1).
// Throws std::invalid_argument on a domain mismatch.
ValidationReport check_local_threading(const Graph& g, const CountVector& x);

// Sum of length(e) * x_e.
Rational threading_length(const Graph& g, const CountVector& x);

// True iff C4 holds with equality at every vertex (all junction graphs are
// trees). Precondition: x passes check_local_threading.
bool is_perfect(const Graph& g, const CountVector& x);

struct BoundsReport {
  // Unit-length bounds (counts, not lengths).
  long long lower_basic = 0;    // 2m - n
  long long lower_london = 0;   // 2m - n + |L|
  long long upper_cycles = 0;   // 2m - |C| for a maximum vertex-disjoint cycle packing
  long long upper_trivial = 0;  // 2m
  // Weighted bracket. The unit lower-bound argument does not transfer to
  // lengths, so the weighted lower bound is just every edge once; the cycle
  // upper bound transfers verbatim with the packing maximizing total length.
  Rational lower_weighted;        // sum of lengths
  Rational upper_cycles_weighted; // 2*sum - max weighted packing length
  Rational upper_trivial_weighted;
};

BoundsReport bounds(const Graph& g);

}  // namespace threading
