#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "threading/rational.hpp"

namespace threading {

// Input could not be tokenized; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Input parsed but violates a structural invariant (disconnected, degree-1
// vertex, self-loop, duplicate edge, nonpositive length).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical unordered vertex pair: u is lexicographically smaller than v.
struct EdgeId {
  std::string u;
  std::string v;

  static EdgeId canonical(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return EdgeId{std::move(a), std::move(b)};
  }
  bool operator==(const EdgeId&) const = default;
  auto operator<=>(const EdgeId&) const = default;
};

// Simple undirected connected graph with minimum degree 2 and positive
// rational edge lengths (default 1). Immutable after construction; safe for
// concurrent reads. Vertices are opaque strings, held sorted so that vertex
// and edge indices are deterministic across runs.
class Graph {
 public:
  struct Edge {
    int u;  // vertex index, u < v in label order
    int v;
    Rational length;
  };
  struct Incidence {
    int neighbor;  // vertex index
    int edge;      // edge index
  };

  // Parses the edge-list text format: one `u v [length]` per line, `#`
  // comments, blank lines ignored. Throws ParseError or ValidationError.
  static Graph parse(const std::string& text);

  // Builds from explicit labeled edges (lengths default to 1). Validates the
  // same invariants as parse.
  static Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edges);
  static Graph from_edges(
      const std::vector<std::pair<std::string, std::string>>& edges,
      const std::vector<Rational>& lengths);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  int vertex_index(const std::string& label) const;  // -1 if absent

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  EdgeId edge_id(int e) const { return EdgeId{labels_[edges_[e].u], labels_[edges_[e].v]}; }
  int edge_index(int u, int v) const;  // -1 if absent

  int degree(int v) const { return static_cast<int>(incidence_[v].size()); }
  const std::vector<Incidence>& incident(int v) const { return incidence_[v]; }
  int other_end(int e, int v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  int max_degree() const { return max_degree_; }
  bool unit_lengths() const { return unit_lengths_; }
  Rational total_length() const;

 private:
  Graph() = default;
  void finalize();  // sorts, indexes, validates

  std::vector<std::string> labels_;              // sorted
  std::vector<Edge> edges_;                      // sorted by (u, v)
  std::vector<std::vector<Incidence>> incidence_;  // per vertex, sorted by neighbor
  int max_degree_ = 0;
  bool unit_lengths_ = true;
};

// Edges whose removal disconnects the graph, as sorted edge indices.
std::vector<int> bridges(const Graph& g);

// Vertices all of whose incident edges are bridges, as sorted vertex indices.
std::vector<int> london_vertices(const Graph& g);

}  // namespace threading
