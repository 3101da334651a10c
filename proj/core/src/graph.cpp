#include "threading/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace threading {

namespace {

struct RawEdge {
  std::string u;
  std::string v;
  Rational length;
  int line;
};

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

Graph Graph::parse(const std::string& text) {
  std::vector<RawEdge> raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() < 2 || tokens.size() > 3)
      throw ParseError(lineno, "expected `u v [length]`, got " + std::to_string(tokens.size()) + " tokens");
    Rational length(1);
    if (tokens.size() == 3) {
      try {
        length = parse_decimal(tokens[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
    }
    raw.push_back(RawEdge{tokens[0], tokens[1], length, lineno});
  }
  if (raw.empty()) throw ValidationError("graph has no edges");

  Graph g;
  std::map<std::string, int> index;
  for (const RawEdge& e : raw) {
    index.emplace(e.u, 0);
    index.emplace(e.v, 0);
  }
  for (auto& [label, idx] : index) {
    idx = static_cast<int>(g.labels_.size());
    g.labels_.push_back(label);
  }
  for (const RawEdge& e : raw) {
    if (e.u == e.v)
      throw ValidationError("self-loop at vertex " + e.u + " (line " + std::to_string(e.line) + ")");
    if (e.length <= Rational(0))
      throw ValidationError("nonpositive length on edge " + e.u + " " + e.v + " (line " +
                            std::to_string(e.line) + ")");
    int u = index[e.u];
    int v = index[e.v];
    if (v < u) std::swap(u, v);
    g.edges_.push_back(Edge{u, v, e.length});
  }
  g.finalize();
  return g;
}

Graph Graph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
  return from_edges(edges, std::vector<Rational>(edges.size(), Rational(1)));
}

Graph Graph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<Rational>& lengths) {
  if (edges.size() != lengths.size()) throw std::invalid_argument("edges/lengths size mismatch");
  Graph g;
  std::map<std::string, int> index;
  for (const auto& [u, v] : edges) {
    index.emplace(u, 0);
    index.emplace(v, 0);
  }
  for (auto& [label, idx] : index) {
    idx = static_cast<int>(g.labels_.size());
    g.labels_.push_back(label);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& [lu, lv] = edges[i];
    if (lu == lv) throw ValidationError("self-loop at vertex " + lu);
    if (lengths[i] <= Rational(0))
      throw ValidationError("nonpositive length on edge " + lu + " " + lv);
    int u = index[lu];
    int v = index[lv];
    if (v < u) std::swap(u, v);
    g.edges_.push_back(Edge{u, v, lengths[i]});
  }
  g.finalize();
  return g;
}

void Graph::finalize() {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
      throw ValidationError("duplicate edge " + labels_[edges_[i].u] + " " + labels_[edges_[i].v]);
  }

  incidence_.assign(labels_.size(), {});
  for (int e = 0; e < edge_count(); ++e) {
    incidence_[edges_[e].u].push_back(Incidence{edges_[e].v, e});
    incidence_[edges_[e].v].push_back(Incidence{edges_[e].u, e});
  }
  for (auto& inc : incidence_) {
    std::sort(inc.begin(), inc.end(),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  }

  max_degree_ = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    int d = degree(v);
    if (d < 2) throw ValidationError("vertex " + labels_[v] + " has degree " + std::to_string(d));
    max_degree_ = std::max(max_degree_, d);
  }

  // connectivity
  std::vector<char> seen(labels_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : incidence_[v]) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  if (reached != vertex_count()) {
    for (int v = 0; v < vertex_count(); ++v)
      if (!seen[v]) throw ValidationError("graph is disconnected (vertex " + labels_[v] + " unreachable)");
  }

  unit_lengths_ = true;
  for (const Edge& e : edges_)
    if (e.length != Rational(1)) unit_lengths_ = false;
}

int Graph::vertex_index(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

int Graph::edge_index(int u, int v) const {
  if (v < u) std::swap(u, v);
  for (const Incidence& inc : incidence_[u])
    if (inc.neighbor == v) return inc.edge;
  return -1;
}

Rational Graph::total_length() const {
  Rational sum(0);
  for (const Edge& e : edges_) sum += e.length;
  return sum;
}

std::vector<int> bridges(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> result;
  int timer = 0;
  // iterative lowpoint DFS
  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const auto& step = inc[f.next++];
        if (step.edge == f.parent_edge) continue;
        if (disc[step.neighbor] == -1) {
          disc[step.neighbor] = low[step.neighbor] = timer++;
          stack.push_back(Frame{step.neighbor, step.edge, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[step.neighbor]);
        }
      } else {
        int v = f.v;
        int pe = f.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) result.push_back(pe);
        }
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> london_vertices(const Graph& g) {
  std::vector<char> is_bridge(g.edge_count(), 0);
  for (int e : bridges(g)) is_bridge[e] = 1;
  std::vector<int> result;
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool all = true;
    for (const auto& inc : g.incident(v))
      if (!is_bridge[inc.edge]) {
        all = false;
        break;
      }
    if (all) result.push_back(v);
  }
  return result;
}

}  // namespace threading
