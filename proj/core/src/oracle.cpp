#include "threading/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace threading {

namespace {

long long oracle_limit() {
  if (const char* env = std::getenv("THREADING_ORACLE_LIMIT")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 200;
}

struct Search {
  const Graph& g;
  std::vector<long long> cap;       // per edge
  std::vector<long long> sum;       // per vertex, over assigned incident edges
  std::vector<long long> mx;        // max assigned count at vertex
  std::vector<int> rem;             // unassigned incident edges at vertex
  std::vector<long long> cap_rem;   // their total cap
  std::vector<Rational> suffix_len; // sum of lengths of edges >= e
  std::vector<Rational> min_len;    // min length among edges >= e
  std::vector<long long> assigned;
  Rational current;

  bool found = false;
  Rational best_len;
  std::vector<long long> best;

  explicit Search(const Graph& graph, std::vector<long long> caps)
      : g(graph),
        cap(std::move(caps)),
        sum(graph.vertex_count(), 0),
        mx(graph.vertex_count(), 0),
        rem(graph.vertex_count()),
        cap_rem(graph.vertex_count(), 0),
        suffix_len(graph.edge_count() + 1, Rational(0)),
        min_len(graph.edge_count() + 1, Rational(1)),
        assigned(graph.edge_count(), 0),
        current(0) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      rem[v] = g.degree(v);
      for (const auto& inc : g.incident(v)) cap_rem[v] += cap[inc.edge];
    }
    for (int e = g.edge_count() - 1; e >= 0; --e) {
      suffix_len[e] = suffix_len[e + 1] + g.edge(e).length;
      min_len[e] = e + 1 < g.edge_count() ? std::min(min_len[e + 1], g.edge(e).length)
                                          : g.edge(e).length;
    }
  }

  // Minimum total count the unassigned edges at v must still contribute:
  // at least one visit each, even vertex sum, C3 against the assigned
  // maximum, and the C4 floor. -1 when no completion fits under the caps.
  long long needed(int v) const {
    long long need = std::max<long long>(
        {rem[v], 2LL * (g.degree(v) - 1) - sum[v], 2 * mx[v] - sum[v]});
    if ((need + sum[v]) % 2 != 0) ++need;
    return need <= cap_rem[v] ? need : -1;
  }

  bool vertex_ok(int v) const {
    if (rem[v] > 0) return needed(v) >= 0;
    return sum[v] % 2 == 0 && 2 * mx[v] <= sum[v] && sum[v] >= 2LL * (g.degree(v) - 1);
  }

  void dfs(int e) {
    if (e == g.edge_count()) {
      if (!found || current < best_len) {
        found = true;
        best_len = current;
        best = assigned;
      }
      return;
    }
    if (found) {
      // completion bound: one visit per remaining edge plus the cheapest
      // placement of the per-vertex deficits (each extra visit settles two)
      long long deficit = 0;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (rem[v] > 0) deficit += needed(v) - rem[v];
      Rational bound = current + suffix_len[e] + Rational((deficit + 1) / 2) * min_len[e];
      if (bound >= best_len) return;
    }
    int u = g.edge(e).u;
    int w = g.edge(e).v;
    --rem[u];
    --rem[w];
    cap_rem[u] -= cap[e];
    cap_rem[w] -= cap[e];
    long long old_mxu = mx[u], old_mxw = mx[w];
    for (long long c = 1; c <= cap[e]; ++c) {
      sum[u] += c;
      sum[w] += c;
      mx[u] = std::max(old_mxu, c);
      mx[w] = std::max(old_mxw, c);
      if (vertex_ok(u) && vertex_ok(w)) {
        assigned[e] = c;
        current += g.edge(e).length * c;
        dfs(e + 1);
        current -= g.edge(e).length * c;
      }
      sum[u] -= c;
      sum[w] -= c;
    }
    mx[u] = old_mxu;
    mx[w] = old_mxw;
    ++rem[u];
    ++rem[w];
    cap_rem[u] += cap[e];
    cap_rem[w] += cap[e];
  }
};

}  // namespace

std::optional<OracleResult> oracle_optimal(const Graph& g, const OracleBox& box) {
  long long measure = static_cast<long long>(g.edge_count()) *
                      std::max(0, g.max_degree() - 2);
  long long limit = oracle_limit();
  if (measure > limit)
    throw OracleGuardError("oracle: instance measure " + std::to_string(measure) +
                           " exceeds limit " + std::to_string(limit) +
                           " (set THREADING_ORACLE_LIMIT to override)");
  long long ceiling = box.max_count > 0
                          ? box.max_count
                          : std::max<long long>(1, g.max_degree() - 1);
  std::vector<long long> caps(g.edge_count(), ceiling);
  if (!box.caps.empty()) {
    if (static_cast<int>(box.caps.size()) != g.edge_count())
      throw std::invalid_argument("oracle: cap vector domain mismatch");
    for (int e = 0; e < g.edge_count(); ++e) {
      if (box.caps[e] < 1) throw std::invalid_argument("oracle: caps must be >= 1");
      caps[e] = std::min(caps[e], box.caps[e]);
    }
  }

  Search search(g, std::move(caps));
  search.dfs(0);
  if (!search.found) return std::nullopt;
  return OracleResult{CountVector{std::move(search.best)}, search.best_len};
}

OracleMatchings oracle_matchings(const MatchingInstance& inst) {
  int n = inst.node_count();
  if (n > 12) throw std::invalid_argument("oracle_matchings: at most 12 nodes");
  OracleMatchings out;
  if (n % 2 != 0) return out;

  std::vector<std::vector<std::pair<int, Rational>>> adj(n);
  for (const auto& e : inst.edges()) {
    adj[e.a].emplace_back(e.b, e.weight);
    adj[e.b].emplace_back(e.a, e.weight);
  }
  std::vector<int> mate(n, -1);
  std::vector<std::pair<int, int>> pairs;
  Rational weight(0);

  auto record = [&]() {
    if (!out.feasible || weight < out.min_weight) {
      out.min_weight = weight;
      out.min_pairs = pairs;
    }
    if (!out.feasible || weight > out.max_weight) {
      out.max_weight = weight;
      out.max_pairs = pairs;
    }
    out.feasible = true;
  };

  auto rec = [&](auto&& self, int v) -> void {
    while (v < n && mate[v] != -1) ++v;
    if (v == n) {
      record();
      return;
    }
    for (const auto& [w, len] : adj[v]) {
      if (w < v || mate[w] != -1) continue;
      mate[v] = w;
      mate[w] = v;
      pairs.emplace_back(v, w);
      weight += len;
      self(self, v + 1);
      weight -= len;
      pairs.pop_back();
      mate[v] = -1;
      mate[w] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.min_pairs.begin(), out.min_pairs.end());
  std::sort(out.max_pairs.begin(), out.max_pairs.end());
  return out;
}

}  // namespace threading
