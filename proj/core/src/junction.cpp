#include "threading/junction.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace threading {

std::vector<std::pair<int, int>> degree_tree(const std::vector<long long>& degrees) {
  int d = static_cast<int>(degrees.size());
  if (d < 2) throw std::invalid_argument("degree_tree: need at least 2 nodes");
  long long sum = 0;
  for (long long x : degrees) {
    if (x < 1) throw std::invalid_argument("degree_tree: degrees must be >= 1");
    sum += x;
  }
  if (sum != 2LL * (d - 1)) throw std::invalid_argument("degree_tree: degree sum must be 2(d-1)");

  std::vector<long long> remaining = degrees;
  std::vector<int> big, leaf;  // stacks: degree > 1 / degree == 1
  for (int i = d - 1; i >= 0; --i)
    (remaining[i] > 1 ? big : leaf).push_back(i);

  std::vector<std::pair<int, int>> edges;
  while (static_cast<int>(edges.size()) < d - 1) {
    int i;
    if (!big.empty()) {
      i = big.back();
      big.pop_back();
    } else {
      i = leaf.back();
      leaf.pop_back();
    }
    int j = leaf.back();
    leaf.pop_back();
    edges.emplace_back(i, j);
    if (--remaining[i] == 1) leaf.push_back(i);
    else if (remaining[i] > 1) big.push_back(i);
  }
  return edges;
}

JunctionGraph build_junction(const Graph& g, int v, const CountVector& x) {
  if (static_cast<int>(x.counts.size()) != g.edge_count())
    throw std::invalid_argument("build_junction: count vector domain mismatch");
  JunctionGraph j;
  j.owner = v;
  int d = g.degree(v);
  std::vector<long long> counts(d);
  long long sum = 0;
  long long maxc = 0;
  for (int i = 0; i < d; ++i) {
    j.tubes.push_back(g.incident(v)[i].edge);
    counts[i] = x.counts[g.incident(v)[i].edge];
    if (counts[i] < 1) throw std::invalid_argument("build_junction: C1 fails at " + g.label(v));
    sum += counts[i];
    maxc = std::max(maxc, counts[i]);
  }
  if (sum % 2 != 0) throw std::invalid_argument("build_junction: C2 fails at " + g.label(v));
  if (maxc > sum - maxc) throw std::invalid_argument("build_junction: C3 fails at " + g.label(v));
  if (sum < 2LL * (d - 1)) throw std::invalid_argument("build_junction: C4 fails at " + g.label(v));

  // Redundant links: peel the two largest counts until C4 is tight. Ties go
  // to the smaller tube position (tubes are in canonical incident order).
  auto cmp_desc = [](const std::pair<long long, int>& a, const std::pair<long long, int>& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  };
  std::set<std::pair<long long, int>, decltype(cmp_desc)> order(cmp_desc);
  for (int i = 0; i < d; ++i) order.insert({counts[i], i});
  while (sum > 2LL * (d - 1)) {
    auto first = *order.begin();
    order.erase(order.begin());
    auto second = *order.begin();
    order.erase(order.begin());
    j.links.emplace_back(first.second, second.second);
    counts[first.second] = first.first - 1;
    counts[second.second] = second.first - 1;
    order.insert({first.first - 1, first.second});
    order.insert({second.first - 1, second.second});
    sum -= 2;
  }
  for (const auto& [i, k] : degree_tree(counts)) j.links.emplace_back(i, k);
  return j;
}

ThreadingGraph build_threading_graph(const Graph& g, const std::vector<JunctionGraph>& junctions) {
  if (static_cast<int>(junctions.size()) != g.vertex_count())
    throw std::invalid_argument("build_threading_graph: need one junction graph per vertex");
  ThreadingGraph tg;
  tg.tube_count = g.edge_count();
  std::vector<long long> degree(g.edge_count(), 0);
  for (const JunctionGraph& j : junctions) {
    for (const auto& [a, b] : j.links) {
      int ta = j.tubes[a];
      int tb = j.tubes[b];
      if (ta == tb) throw std::invalid_argument("build_threading_graph: self-loop in junction graph");
      tg.links.push_back(ThreadingGraph::Link{ta, tb, j.owner});
      ++degree[ta];
      ++degree[tb];
    }
  }
  // consistency: the two junction graphs sharing tube uv must give it equal
  // degree, so its total degree here is even
  for (int e = 0; e < g.edge_count(); ++e)
    if (degree[e] % 2 != 0 || degree[e] == 0)
      throw std::invalid_argument("build_threading_graph: inconsistent junction degrees on tube " +
                                  g.edge_id(e).u + " " + g.edge_id(e).v);
  return tg;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ThreadingWalk euler_no_uturn(const Graph& g, const ThreadingGraph& tg,
                             std::vector<int>* link_order) {
  int L = static_cast<int>(tg.links.size());
  if (L == 0) throw std::invalid_argument("euler_no_uturn: empty threading graph");
  // Endpoint 2*l is the end of link l at tube_a, 2*l+1 the end at tube_b.
  // The side of an endpoint at its tube node is the link's owner vertex.
  auto node_of = [&](int ep) {
    const auto& lk = tg.links[ep / 2];
    return ep % 2 == 0 ? lk.tube_a : lk.tube_b;
  };

  // Pair u-side and w-side endpoints at every tube node t_uw.
  std::vector<int> partner(2 * L, -1);
  std::vector<std::vector<int>> side_u(tg.tube_count), side_w(tg.tube_count);
  for (int ep = 0; ep < 2 * L; ++ep) {
    int t = node_of(ep);
    int owner = tg.links[ep / 2].owner;
    if (owner == g.edge(t).u)
      side_u[t].push_back(ep);
    else if (owner == g.edge(t).v)
      side_w[t].push_back(ep);
    else
      throw std::invalid_argument("euler_no_uturn: link owner not an endpoint of its tube");
  }
  for (int t = 0; t < tg.tube_count; ++t) {
    if (side_u[t].size() != side_w[t].size())
      throw std::invalid_argument("euler_no_uturn: unbalanced sides at a tube node");
    for (std::size_t i = 0; i < side_u[t].size(); ++i) {
      partner[side_u[t][i]] = side_w[t][i];
      partner[side_w[t][i]] = side_u[t][i];
    }
  }

  // Initial trail decomposition: endpoints connected by partnering or by
  // belonging to the same link are in the same (undirected) closed trail.
  Dsu trails(2 * L);
  for (int ep = 0; ep < 2 * L; ++ep) {
    trails.unite(ep, partner[ep]);
    trails.unite(ep, ep ^ 1);
  }

  // Merge trails meeting at a tube node by swapping two transition pairs
  // there; swapping keeps the side bijection, so no U-turn can appear.
  for (int t = 0; t < tg.tube_count; ++t) {
    for (std::size_t i = 1; i < side_u[t].size(); ++i) {
      int a0 = side_u[t][0];
      int ai = side_u[t][i];
      if (trails.find(a0) == trails.find(ai)) continue;
      int b0 = partner[a0];
      int bi = partner[ai];
      partner[a0] = bi;
      partner[bi] = a0;
      partner[ai] = b0;
      partner[b0] = ai;
      trails.unite(a0, ai);
    }
  }
  for (int ep = 1; ep < 2 * L; ++ep)
    if (trails.find(ep) != trails.find(0))
      throw std::invalid_argument("euler_no_uturn: threading graph is disconnected");

  // Emit: arriving at endpoint ep, leave its node via partner[ep] and
  // traverse that link to its far end.
  ThreadingWalk walk;
  walk.vertices.reserve(L);
  if (link_order) link_order->assign(L, -1);
  int ep = 0;
  int steps = 0;
  do {
    int link = ep / 2;
    walk.vertices.push_back(g.label(tg.links[link].owner));
    if (link_order) (*link_order)[link] = steps;
    ep = partner[ep] ^ 1;
    ++steps;
  } while (ep != 0 && steps <= L);
  if (ep != 0 || steps != L)
    throw std::logic_error("euler_no_uturn: trail merge did not produce a single tour");
  return walk;
}

ThreadingWalk ThreadingWalk::parse(const std::string& text) {
  ThreadingWalk walk;
  std::string token;
  std::istringstream in(text);
  std::string line;
  std::string all;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    all += line;
  }
  std::istringstream items(all);
  while (std::getline(items, token, ',')) {
    auto start = token.find_first_not_of(" \t\r");
    auto end = token.find_last_not_of(" \t\r");
    if (start == std::string::npos) continue;
    walk.vertices.push_back(token.substr(start, end - start + 1));
  }
  return walk;
}

std::string ThreadingWalk::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ",";
    out += vertices[i];
  }
  out += "\n";
  return out;
}

WalkReport verify_walk(const Graph& g, const ThreadingWalk& walk) {
  WalkReport report;
  int k = static_cast<int>(walk.vertices.size());
  if (k < 3) {
    report.error = "walk too short";
    return report;
  }
  std::vector<int> verts(k);
  for (int i = 0; i < k; ++i) {
    verts[i] = g.vertex_index(walk.vertices[i]);
    if (verts[i] < 0) {
      report.error = "unknown vertex " + walk.vertices[i] + " at step " + std::to_string(i);
      return report;
    }
  }
  std::vector<int> step_edges(k);
  for (int i = 0; i < k; ++i) {
    int e = g.edge_index(verts[i], verts[(i + 1) % k]);
    if (e < 0) {
      report.error = "step " + std::to_string(i) + ": " + walk.vertices[i] + " and " +
                     walk.vertices[(i + 1) % k] + " are not adjacent";
      return report;
    }
    step_edges[i] = e;
  }

  CountVector counts = CountVector::all(g, 0);
  for (int e : step_edges) ++counts.counts[e];
  for (int e = 0; e < g.edge_count(); ++e)
    if (counts.counts[e] == 0) {
      EdgeId id = g.edge_id(e);
      report.error = "edge " + id.u + " " + id.v + " is never visited";
      return report;
    }

  for (int i = 0; i < k; ++i)
    if (step_edges[i] == step_edges[(i + 1) % k]) {
      report.error = "U-turn at step " + std::to_string((i + 1) % k);
      return report;
    }

  // Junction connectivity: at vertex w_i the walk links the tubes of steps
  // i-1 and i; the induced multigraph on all incident tubes must be
  // connected.
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident(v);
    int d = static_cast<int>(inc.size());
    std::vector<int> position(g.edge_count(), -1);
    for (int i = 0; i < d; ++i) position[inc[i].edge] = i;
    Dsu dsu(d);
    int classes = d;
    for (int i = 0; i < k; ++i) {
      if (verts[i] != v) continue;
      int ta = position[step_edges[(i + k - 1) % k]];
      int tb = position[step_edges[i]];
      if (dsu.find(ta) != dsu.find(tb)) {
        dsu.unite(ta, tb);
        --classes;
      }
    }
    if (classes != 1) {
      report.error = "junction graph at vertex " + g.label(v) + " is disconnected";
      return report;
    }
  }

  report.ok = true;
  report.counts = std::move(counts);
  return report;
}

ThreadingWalk realize_walk(const Graph& g, const CountVector& x) {
  std::vector<JunctionGraph> junctions;
  junctions.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) junctions.push_back(build_junction(g, v, x));
  ThreadingGraph tg = build_threading_graph(g, junctions);
  return euler_no_uturn(g, tg);
}

}  // namespace threading
