#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "threading/rational.hpp"

namespace threading {

// Weighted general (non-bipartite) graph for perfect-matching solves. Nodes
// are opaque labels; edges carry exact rational weights (negative allowed).
// Node and edge insertion order fixes the solver's tie-breaking, so identical
// construction order yields identical matchings.
class MatchingInstance {
 public:
  struct WeightedEdge {
    int a;
    int b;
    Rational weight;
  };

  int add_node(std::string label);
  void add_edge(int a, int b, const Rational& weight);

  int node_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

 private:
  std::vector<std::string> labels_;
  std::vector<WeightedEdge> edges_;
};

enum class Objective { Minimize, Maximize };

struct BlossomDual {
  std::vector<int> members;  // node indices, sorted
  Rational z;                // >= 0
};

// A perfect matching together with the dual certificate produced by the
// blossom solver. With s = +1 for Maximize and s = -1 for Minimize, the duals
// satisfy, for every instance edge (a, b):
//     y_a + y_b + sum of z over blossoms containing both  >=  s * w(a, b)
// with equality on matched edges, all z >= 0, and
//     sum(y) + sum(z * (|B| - 1) / 2)  ==  s * weight.
// These are exactly the complementary-slackness conditions, so any solution
// passing verify_matching_certificate is optimal.
struct MatchingSolution {
  std::vector<std::pair<int, int>> pairs;  // a < b, sorted
  Rational weight;
  std::vector<Rational> node_duals;
  std::vector<BlossomDual> blossom_duals;

  int mate(int v) const;  // -1 if v unmatched (never, for a valid solution)
};

// Exact primal-dual blossom solve. Returns std::nullopt when no perfect
// matching exists (odd node count or structurally infeasible). Throws
// std::logic_error if the internal certificate check fails.
std::optional<MatchingSolution> solve_perfect_matching(const MatchingInstance& inst,
                                                       Objective objective);

inline std::optional<MatchingSolution> min_weight_perfect_matching(const MatchingInstance& inst) {
  return solve_perfect_matching(inst, Objective::Minimize);
}
inline std::optional<MatchingSolution> max_weight_perfect_matching(const MatchingInstance& inst) {
  return solve_perfect_matching(inst, Objective::Maximize);
}

// Re-checks the dual certificate from scratch; used by tests and asserted
// internally on every solve.
bool verify_matching_certificate(const MatchingInstance& inst, Objective objective,
                                 const MatchingSolution& solution);

}  // namespace threading
