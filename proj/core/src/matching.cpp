#include "threading/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace threading {

int MatchingInstance::add_node(std::string label) {
  labels_.push_back(std::move(label));
  return static_cast<int>(labels_.size()) - 1;
}

void MatchingInstance::add_edge(int a, int b, const Rational& weight) {
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count())
    throw std::invalid_argument("matching edge endpoint out of range");
  if (a == b) throw std::invalid_argument("matching instance must be simple (self-loop)");
  edges_.push_back(WeightedEdge{a, b, weight});
}

int MatchingSolution::mate(int v) const {
  for (const auto& [a, b] : pairs) {
    if (a == v) return b;
    if (b == v) return a;
  }
  return -1;
}

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Dense primal-dual blossom solver for maximum weight matching, the classic
// O(n^3) formulation with explicit flower (blossom) bookkeeping. Weights are
// nonnegative integers; duals live in doubled units so that all updates stay
// integral. Indices are 1-based; index 0 is the null sentinel.
class BlossomSolver {
 public:
  explicit BlossomSolver(int n) : n_(n), cap_(n + n / 2 + 8) {
    g_.assign(cap_ + 1, std::vector<Arc>(cap_ + 1));
    for (int u = 0; u <= cap_; ++u)
      for (int v = 0; v <= cap_; ++v) g_[u][v] = Arc{u, v, 0};
    lab_.assign(cap_ + 1, 0);
    match_.assign(cap_ + 1, 0);
    slack_.assign(cap_ + 1, 0);
    st_.assign(cap_ + 1, 0);
    pa_.assign(cap_ + 1, 0);
    s_.assign(cap_ + 1, -1);
    vis_.assign(cap_ + 1, 0);
    flower_.assign(cap_ + 1, {});
    flower_from_.assign(cap_ + 1, std::vector<int>(n_ + 1, 0));
  }

  void set_weight(int u, int v, long long w) {
    g_[u][v].w = w;
    g_[v][u].w = w;
  }

  // Runs phases until no augmenting path improves the matching. Returns the
  // number of matched pairs.
  int run() {
    n_x_ = n_;
    for (int x = 0; x <= n_; ++x) st_[x] = x;
    long long w_max = 0;
    for (int u = 1; u <= n_; ++u) {
      flower_from_[u][u] = u;
      for (int v = 1; v <= n_; ++v) w_max = std::max(w_max, g_[u][v].w);
    }
    for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
    int matches = 0;
    while (phase()) ++matches;
    return matches;
  }

  int mate_of(int u) const { return match_[u]; }
  long long node_dual(int u) const { return lab_[u]; }  // doubled units

  // Alive blossoms (top-level and nested), each with its member leaves and
  // doubled dual value.
  std::vector<std::pair<std::vector<int>, long long>> blossoms() const {
    std::vector<std::pair<std::vector<int>, long long>> out;
    for (int b = n_ + 1; b <= n_x_; ++b)
      if (st_[b] == b) collect(b, out);
    return out;
  }

 private:
  struct Arc {
    int u;
    int v;
    long long w;
  };

  void collect(int b, std::vector<std::pair<std::vector<int>, long long>>& out) const {
    std::vector<int> members;
    gather(b, members);
    std::sort(members.begin(), members.end());
    out.emplace_back(std::move(members), lab_[b]);
    for (int child : flower_[b])
      if (child > n_) collect(child, out);
  }

  void gather(int b, std::vector<int>& members) const {
    if (b <= n_) {
      members.push_back(b);
      return;
    }
    for (int child : flower_[b]) gather(child, members);
  }

  long long arc_delta(const Arc& a) const { return lab_[a.u] + lab_[a.v] - a.w * 2; }

  void update_slack(int u, int x) {
    if (!slack_[x] || arc_delta(g_[u][x]) < arc_delta(g_[slack_[x]][x])) slack_[x] = u;
  }

  void set_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; ++u)
      if (g_[u][x].w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
  }

  void q_push(int x) {
    if (x <= n_) {
      q_.push_back(x);
    } else {
      for (int i : flower_[x]) q_push(i);
    }
  }

  void set_st(int x, int b) {
    st_[x] = b;
    if (x > n_)
      for (int i : flower_[x]) set_st(i, b);
  }

  int get_pr(int b, int xr) {
    auto& f = flower_[b];
    int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
    if (pr % 2 == 1) {
      std::reverse(f.begin() + 1, f.end());
      return static_cast<int>(f.size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match_[u] = g_[u][v].v;
    if (u <= n_) return;
    const Arc e = g_[u][v];
    int xr = flower_from_[u][e.u];
    int pr = get_pr(u, xr);
    for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
    set_match(xr, v);
    std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
  }

  void augment(int u, int v) {
    for (;;) {
      int xnv = st_[match_[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st_[pa_[xnv]]);
      u = st_[pa_[xnv]];
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    for (++timer_; u || v; std::swap(u, v)) {
      if (u == 0) continue;
      if (vis_[u] == timer_) return u;
      vis_[u] = timer_;
      u = st_[match_[u]];
      if (u) u = st_[pa_[u]];
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[b]) ++b;
    if (b > n_x_) ++n_x_;
    if (n_x_ > cap_) throw std::logic_error("blossom capacity exceeded");
    lab_[b] = 0;
    s_[b] = 0;
    match_[b] = match_[lca];
    flower_[b].clear();
    flower_[b].push_back(lca);
    for (int x = u, y; x != lca; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      flower_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    std::reverse(flower_[b].begin() + 1, flower_[b].end());
    for (int x = v, y; x != lca; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      flower_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) g_[b][x].w = g_[x][b].w = 0;
    for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
    for (int xs : flower_[b]) {
      for (int x = 1; x <= n_x_; ++x)
        if (g_[xs][x].w > 0 &&
            (g_[b][x].w == 0 || arc_delta(g_[xs][x]) < arc_delta(g_[b][x]))) {
          g_[b][x] = g_[xs][x];
          g_[x][b] = g_[x][xs];
        }
      for (int x = 1; x <= n_; ++x)
        if (flower_from_[xs][x]) flower_from_[b][x] = xs;
    }
    set_slack(b);
  }

  void expand_blossom(int b) {
    for (int i : flower_[b]) set_st(i, i);
    int xr = flower_from_[b][g_[b][pa_[b]].u];
    int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      int xs = flower_[b][i];
      int xns = flower_[b][i + 1];
      pa_[xs] = g_[xns][xs].u;
      s_[xs] = 1;
      s_[xns] = 0;
      slack_[xs] = 0;
      set_slack(xns);
      q_push(xns);
    }
    s_[xr] = 1;
    pa_[xr] = pa_[b];
    for (std::size_t i = pr + 1; i < flower_[b].size(); ++i) {
      int xs = flower_[b][i];
      s_[xs] = -1;
      set_slack(xs);
    }
    st_[b] = 0;
  }

  bool on_found_edge(const Arc& e) {
    int u = st_[e.u];
    int v = st_[e.v];
    if (s_[v] == -1) {
      pa_[v] = e.u;
      s_[v] = 1;
      int nu = st_[match_[v]];
      slack_[v] = slack_[nu] = 0;
      s_[nu] = 0;
      q_push(nu);
    } else if (s_[v] == 0) {
      int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  bool phase() {
    std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
    std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
    q_.clear();
    for (int x = 1; x <= n_x_; ++x)
      if (st_[x] == x && !match_[x]) {
        pa_[x] = 0;
        s_[x] = 0;
        q_push(x);
      }
    if (q_.empty()) return false;
    for (;;) {
      while (!q_.empty()) {
        int u = q_.front();
        q_.pop_front();
        if (s_[st_[u]] == 1) continue;
        for (int v = 1; v <= n_; ++v)
          if (g_[u][v].w > 0 && st_[u] != st_[v]) {
            if (arc_delta(g_[u][v]) == 0) {
              if (on_found_edge(g_[u][v])) return true;
            } else {
              update_slack(u, st_[v]);
            }
          }
      }
      // Dual adjustment. The step is capped by the smallest outer label so
      // labels never go negative; hitting zero certifies the matching is
      // already maximum-weight and ends the search.
      long long d = kInf;
      for (int u = 1; u <= n_; ++u)
        if (s_[st_[u]] == 0) d = std::min(d, lab_[u]);
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x]) {
          if (s_[x] == -1)
            d = std::min(d, arc_delta(g_[slack_[x]][x]));
          else if (s_[x] == 0)
            d = std::min(d, arc_delta(g_[slack_[x]][x]) / 2);
        }
      for (int u = 1; u <= n_; ++u) {
        if (s_[st_[u]] == 0)
          lab_[u] -= d;
        else if (s_[st_[u]] == 1)
          lab_[u] += d;
      }
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b) {
          if (s_[b] == 0)
            lab_[b] += d * 2;
          else if (s_[b] == 1)
            lab_[b] -= d * 2;
        }
      for (int u = 1; u <= n_; ++u)
        if (s_[st_[u]] == 0 && lab_[u] == 0) return false;
      q_.clear();
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
            arc_delta(g_[slack_[x]][x]) == 0)
          if (on_found_edge(g_[slack_[x]][x])) return true;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
    }
  }

  int n_;
  int cap_;
  int n_x_ = 0;
  int timer_ = 0;
  std::vector<std::vector<Arc>> g_;
  std::vector<long long> lab_;
  std::vector<int> match_, slack_, st_, pa_, s_, vis_;
  std::vector<std::vector<int>> flower_;
  std::vector<std::vector<int>> flower_from_;
  std::deque<int> q_;
};

long long checked_lcm(long long a, long long b) {
  long long l = std::lcm(a, b);
  if (l <= 0 || l > 1000000000000LL) throw std::overflow_error("weight denominators too large");
  return l;
}

}  // namespace

std::optional<MatchingSolution> solve_perfect_matching(const MatchingInstance& inst,
                                                       Objective objective) {
  int n = inst.node_count();
  if (n % 2 != 0) return std::nullopt;
  MatchingSolution sol;
  sol.weight = Rational(0);
  sol.node_duals.assign(n, Rational(0));
  if (n == 0) return sol;

  long long sign = objective == Objective::Maximize ? 1 : -1;

  // Scale all weights to integers, then orient and shift so that the dense
  // maximum-weight engine sees positive weights under which any larger
  // matching beats any smaller one; its maximum then has maximum cardinality
  // and, among perfect matchings, optimal original weight.
  long long scale = 1;
  for (const auto& e : inst.edges()) scale = checked_lcm(scale, e.weight.denominator());
  std::vector<long long> oriented(inst.edges().size());
  long long lo = kInf, hi = -kInf;
  for (std::size_t i = 0; i < inst.edges().size(); ++i) {
    const auto& e = inst.edges()[i];
    long long w = e.weight.numerator() * (scale / e.weight.denominator());
    if (w > kInf / (4 * n) || w < -kInf / (4 * n))
      throw std::overflow_error("matching weights out of range");
    oriented[i] = sign * w;
    lo = std::min(lo, oriented[i]);
    hi = std::max(hi, oriented[i]);
  }
  if (inst.edges().empty()) return std::nullopt;  // n >= 2 with no edges
  long long shift = (static_cast<long long>(n) / 2) * (hi - lo) - lo + 1;

  BlossomSolver solver(n);
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < inst.edges().size(); ++i) {
    const auto& e = inst.edges()[i];
    if (present[e.a][e.b])
      throw std::invalid_argument("matching instance must be simple (duplicate edge)");
    present[e.a][e.b] = present[e.b][e.a] = 1;
    solver.set_weight(e.a + 1, e.b + 1, oriented[i] + shift);
  }
  int matches = solver.run();
  if (matches * 2 != n) return std::nullopt;

  for (int u = 1; u <= n; ++u) {
    int v = solver.mate_of(u);
    if (v == 0) return std::nullopt;
    if (u < v) sol.pairs.emplace_back(u - 1, v - 1);
  }
  std::sort(sol.pairs.begin(), sol.pairs.end());
  for (const auto& e : inst.edges()) {
    std::pair<int, int> key{std::min(e.a, e.b), std::max(e.a, e.b)};
    if (std::binary_search(sol.pairs.begin(), sol.pairs.end(), key)) sol.weight += e.weight;
  }

  // Duals: the engine's labels live in doubled, shifted, scaled units. Undo
  // the shift on node duals (each edge sees it twice) and rescale.
  Rational unit(1, 2 * scale);
  for (int u = 1; u <= n; ++u)
    sol.node_duals[u - 1] = Rational(solver.node_dual(u) - shift) * unit;
  for (auto& [members, z2] : solver.blossoms()) {
    BlossomDual bd;
    bd.members.reserve(members.size());
    for (int m : members) bd.members.push_back(m - 1);
    bd.z = Rational(z2) * unit;
    sol.blossom_duals.push_back(std::move(bd));
  }

  if (!verify_matching_certificate(inst, objective, sol))
    throw std::logic_error("matching dual certificate failed verification");
  return sol;
}

bool verify_matching_certificate(const MatchingInstance& inst, Objective objective,
                                 const MatchingSolution& sol) {
  int n = inst.node_count();
  if (static_cast<int>(sol.pairs.size()) * 2 != n) return false;
  std::vector<int> mate(n, -1);
  for (const auto& [a, b] : sol.pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) return false;
    if (mate[a] != -1 || mate[b] != -1) return false;
    mate[a] = b;
    mate[b] = a;
  }

  Rational sign(objective == Objective::Maximize ? 1 : -1);

  std::vector<std::vector<char>> in_blossom;
  for (const auto& bd : sol.blossom_duals) {
    if (bd.z < Rational(0)) return false;
    if (bd.members.size() < 3 || bd.members.size() % 2 == 0) return false;
    std::vector<char> flags(n, 0);
    for (int m : bd.members) {
      if (m < 0 || m >= n || flags[m]) return false;
      flags[m] = 1;
    }
    in_blossom.push_back(std::move(flags));
  }

  bool edge_matched_found = false;
  Rational matched_weight(0);
  std::vector<char> pair_seen(sol.pairs.size(), 0);
  for (const auto& e : inst.edges()) {
    Rational reduced = sol.node_duals[e.a] + sol.node_duals[e.b];
    for (std::size_t i = 0; i < sol.blossom_duals.size(); ++i)
      if (in_blossom[i][e.a] && in_blossom[i][e.b]) reduced += sol.blossom_duals[i].z;
    reduced -= sign * e.weight;
    if (reduced < Rational(0)) return false;
    if (mate[e.a] == e.b) {
      if (reduced != Rational(0)) return false;
      std::pair<int, int> key{std::min(e.a, e.b), std::max(e.a, e.b)};
      auto it = std::lower_bound(sol.pairs.begin(), sol.pairs.end(), key);
      if (it == sol.pairs.end() || *it != key) return false;
      std::size_t idx = it - sol.pairs.begin();
      if (pair_seen[idx]) return false;  // duplicate edge between matched pair
      pair_seen[idx] = 1;
      matched_weight += e.weight;
      edge_matched_found = true;
    }
  }
  // Every matched pair must be an actual instance edge.
  for (char seen : pair_seen)
    if (!seen) return false;
  if (matched_weight != sol.weight) return false;
  (void)edge_matched_found;

  // Strong duality: dual objective equals the (oriented) matching weight.
  Rational dual_obj(0);
  for (const auto& y : sol.node_duals) dual_obj += y;
  for (const auto& bd : sol.blossom_duals)
    dual_obj += bd.z * Rational(static_cast<long long>(bd.members.size()) - 1, 2);
  return dual_obj == sign * sol.weight;
}

}  // namespace threading
