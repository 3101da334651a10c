#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "generators.hpp"
#include "threading/junction.hpp"
#include "threading/oracle.hpp"

using namespace threading;

namespace {

bool tree_matches(const std::vector<std::pair<int, int>>& edges,
                  const std::vector<long long>& degrees) {
  int d = static_cast<int>(degrees.size());
  if (static_cast<int>(edges.size()) != d - 1) return false;
  std::vector<long long> got(d, 0);
  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : edges) {
    ++got[a];
    ++got[b];
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;  // cycle
    parent[ra] = rb;
  }
  return got == degrees;
}

void enumerate_degree_sequences(int d, long long budget, std::vector<long long>& prefix,
                                const std::function<void(const std::vector<long long>&)>& emit) {
  if (static_cast<int>(prefix.size()) == d) {
    if (budget == 0) emit(prefix);
    return;
  }
  int left = d - static_cast<int>(prefix.size());
  for (long long v = 1; v <= budget - (left - 1); ++v) {
    prefix.push_back(v);
    enumerate_degree_sequences(d, budget - v, prefix, emit);
    prefix.pop_back();
  }
}

long long junction_degree(const JunctionGraph& j, int position) {
  long long deg = 0;
  for (const auto& [a, b] : j.links) deg += (a == position) + (b == position);
  return deg;
}

bool junction_connected(const JunctionGraph& j) {
  int d = static_cast<int>(j.tubes.size());
  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& [a, b] : j.links) parent[find(a)] = find(b);
  for (int i = 1; i < d; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

}  // namespace

TEST_CASE("degree_tree: small shapes") {
  CHECK(degree_tree({1, 1}) == std::vector<std::pair<int, int>>{{0, 1}});

  auto star = degree_tree({3, 1, 1, 1});
  CHECK(tree_matches(star, {3, 1, 1, 1}));
  for (auto [a, b] : star) CHECK((a == 0 || b == 0));

  auto path = degree_tree({2, 2, 1, 1});
  CHECK(tree_matches(path, {2, 2, 1, 1}));
}

TEST_CASE("degree_tree: rejects bad input") {
  CHECK_THROWS_AS(degree_tree({2}), std::invalid_argument);
  CHECK_THROWS_AS(degree_tree({1, 1, 1}), std::invalid_argument);  // sum != 2(d-1)
  CHECK_THROWS_AS(degree_tree({0, 2}), std::invalid_argument);
}

TEST_CASE("degree_tree: exhaustive over valid degree sequences, d <= 10") {
  for (int d = 2; d <= 10; ++d) {
    std::vector<long long> prefix;
    enumerate_degree_sequences(d, 2LL * (d - 1), prefix, [&](const std::vector<long long>& seq) {
      CHECK(tree_matches(degree_tree(seq), seq));
    });
  }
}

TEST_CASE("build_junction: forced and redundant shapes") {
  Graph theta = fixtures::graph(fixtures::kTheta);
  // degree-2 midpoint: counts (1,1) -> single link
  CountVector ones = CountVector::all(theta, 1);
  JunctionGraph mid = build_junction(theta, theta.vertex_index("p1"), ones);
  CHECK(mid.links == std::vector<std::pair<int, int>>{{0, 1}});

  // d(v)=3, counts (2,1,1): tree with the count-2 tube in the middle
  Graph k4 = fixtures::graph(fixtures::kK4);
  CountVector x = CountVector::parse(k4, "a b 2\na c 1\na d 1\nb c 1\nb d 1\nc d 2\n");
  JunctionGraph ja = build_junction(k4, k4.vertex_index("a"), x);
  CHECK(ja.links.size() == 2);
  CHECK(junction_degree(ja, 0) == 2);  // tube ab has count 2
  CHECK(junction_connected(ja));

  // d(v)=3, counts (2,2,2): one redundant link + degree tree on (1,1,2)
  JunctionGraph jt = build_junction(k4, 0, CountVector::all(k4, 2));
  CHECK(jt.links.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(junction_degree(jt, i) == 2);
  CHECK(junction_connected(jt));
}

TEST_CASE("build_junction: invariants on oracle-validated counts") {
  std::mt19937 rng(31);
  for (int t = 0; t < 25; ++t) {
    Graph g = generators::random_graph(rng, 8, false);
    auto opt = oracle_optimal(g);
    REQUIRE(opt.has_value());
    for (int v = 0; v < g.vertex_count(); ++v) {
      JunctionGraph j = build_junction(g, v, opt->counts);
      long long sum = 0;
      for (std::size_t i = 0; i < j.tubes.size(); ++i) {
        CHECK(junction_degree(j, static_cast<int>(i)) == opt->counts.counts[j.tubes[i]]);
        sum += opt->counts.counts[j.tubes[i]];
      }
      CHECK(static_cast<long long>(j.links.size()) == sum / 2);
      CHECK(junction_connected(j));
      for (const auto& [a, b] : j.links) CHECK(a != b);  // no self-loops
    }
  }
}

TEST_CASE("build_junction: rejects constraint violations at the vertex") {
  Graph k4 = fixtures::graph(fixtures::kK4);
  CHECK_THROWS_AS(build_junction(k4, 0, CountVector::all(k4, 1)), std::invalid_argument);
}

TEST_CASE("build_threading_graph: shapes and degrees") {
  Graph tri = fixtures::graph(fixtures::kTriangle);
  CountVector ones = CountVector::all(tri, 1);
  std::vector<JunctionGraph> js;
  for (int v = 0; v < 3; ++v) js.push_back(build_junction(tri, v, ones));
  ThreadingGraph tg = build_threading_graph(tri, js);
  CHECK(tg.links.size() == 3);

  Graph k4 = fixtures::graph(fixtures::kK4);
  CountVector x = CountVector::parse(k4, "a b 2\na c 1\na d 1\nb c 1\nb d 1\nc d 2\n");
  std::vector<JunctionGraph> j4;
  for (int v = 0; v < 4; ++v) j4.push_back(build_junction(k4, v, x));
  ThreadingGraph tg4 = build_threading_graph(k4, j4);
  CHECK(tg4.links.size() == 8);
  std::vector<long long> deg(k4.edge_count(), 0);
  for (const auto& link : tg4.links) {
    ++deg[link.tube_a];
    ++deg[link.tube_b];
  }
  for (int e = 0; e < k4.edge_count(); ++e) CHECK(deg[e] == 2 * x.counts[e]);
}

TEST_CASE("euler_no_uturn: fixtures") {
  Graph tri = fixtures::graph(fixtures::kTriangle);
  ThreadingWalk w = realize_walk(tri, CountVector::all(tri, 1));
  CHECK(w.vertices.size() == 3);
  CHECK(verify_walk(tri, w).ok);

  Graph k4 = fixtures::graph(fixtures::kK4);
  CountVector x = CountVector::parse(k4, "a b 2\na c 1\na d 1\nb c 1\nb d 1\nc d 2\n");
  ThreadingWalk w4 = realize_walk(k4, x);
  CHECK(w4.vertices.size() == 8);
  auto report = verify_walk(k4, w4);
  CHECK(report.ok);
  CHECK(report.counts == x);

  Graph theta = fixtures::graph(fixtures::kTheta);
  CountVector xt = CountVector::parse(theta, "p1 u 1\np1 v 1\np2 u 1\np2 v 1\np3 u 2\np3 v 2\n");
  ThreadingWalk wt = realize_walk(theta, xt);
  CHECK(wt.vertices.size() == 8);
  CHECK(verify_walk(theta, wt).ok);
}

TEST_CASE("verify_walk: rejections name the first failure") {
  Graph theta = fixtures::graph(fixtures::kTheta);
  // U-turn: immediately bounce back through p1
  ThreadingWalk uturn = ThreadingWalk::parse("u,p1,u,p2,v,p3,u,p1,v,p2");
  auto r = verify_walk(theta, uturn);
  CHECK_FALSE(r.ok);
  CHECK(r.error.find("U-turn") != std::string::npos);

  // missing edge coverage
  Graph k4 = fixtures::graph(fixtures::kK4);
  auto r2 = verify_walk(k4, ThreadingWalk::parse("a,b,c,a,d,b"));
  CHECK_FALSE(r2.ok);
  CHECK(r2.error.find("never visited") != std::string::npos);

  // bowtie figure-eight: each triangle walked separately; junction at s is
  // disconnected even though no U-turn occurs
  Graph bow = fixtures::graph(fixtures::kBowtie);
  auto r3 = verify_walk(bow, ThreadingWalk::parse("s,a,b,s,c,d"));
  CHECK_FALSE(r3.ok);
  CHECK(r3.error.find("junction graph at vertex s") != std::string::npos);

  auto r4 = verify_walk(k4, ThreadingWalk::parse("a,b,z"));
  CHECK_FALSE(r4.ok);
  CHECK(r4.error.find("unknown vertex") != std::string::npos);
}

TEST_CASE("walk text round trip") {
  ThreadingWalk w = ThreadingWalk::parse("a, b,c\n# tail comment\n");
  CHECK(w.vertices == std::vector<std::string>{"a", "b", "c"});
  CHECK(ThreadingWalk::parse(w.to_text()).vertices == w.vertices);
}

TEST_CASE("round trip: realized walks reproduce their count vectors") {
  std::mt19937 rng(37);
  for (int t = 0; t < 40; ++t) {
    Graph g = generators::random_graph(rng, 9, t % 2 == 1);
    auto opt = oracle_optimal(g);
    REQUIRE(opt.has_value());
    ThreadingWalk w = realize_walk(g, opt->counts);
    CHECK(w.vertices.size() == static_cast<std::size_t>(
        std::accumulate(opt->counts.counts.begin(), opt->counts.counts.end(), 0LL)));
    auto report = verify_walk(g, w);
    REQUIRE(report.ok);
    CHECK(report.counts == opt->counts);
  }
}
