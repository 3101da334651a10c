#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "threading/constraints.hpp"
#include "threading/graph.hpp"
#include "threading/matching.hpp"

namespace threading {

// Instance too large for exhaustive search. Raise the limit (at your own
// risk) with the THREADING_ORACLE_LIMIT environment variable.
class OracleGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  CountVector counts;  // lexicographically smallest optimum
  Rational length;
};

struct OracleBox {
  // Per-edge upper bounds for the count search; empty means the default
  // max(degree(u), degree(v))-independent bound max_degree-1 everywhere.
  std::vector<long long> caps;
  // Overrides the default per-edge ceiling when > 0 (used to double-check
  // that the ceiling itself never cuts off an optimum).
  long long max_count = 0;
};

// Reference solver: depth-first enumeration of all count vectors in the
// search box satisfying the local threading constraints, minimizing total
// length. Prunes on per-vertex parity/connectivity requirements and an
// additive completion bound. Guarded by m*(max_degree-2) <=
// THREADING_ORACLE_LIMIT (default 200). Returns nullopt when the box admits
// no threading (only possible with caps).
std::optional<OracleResult> oracle_optimal(const Graph& g, const OracleBox& box = {});

struct OracleMatchings {
  bool feasible = false;
  Rational min_weight;
  Rational max_weight;
  std::vector<std::pair<int, int>> min_pairs;  // a < b, sorted
  std::vector<std::pair<int, int>> max_pairs;
};

// Exact min/max perfect matching by recursive enumeration. Guard: at most
// 12 nodes.
OracleMatchings oracle_matchings(const MatchingInstance& inst);

}  // namespace threading
