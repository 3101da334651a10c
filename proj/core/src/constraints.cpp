#include "threading/constraints.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "threading/special_cases.hpp"

namespace threading {

CountVector CountVector::parse(const Graph& g, const std::string& text) {
  std::vector<long long> counts(g.edge_count(), -1);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string u, v;
    long long c;
    if (!(ls >> u)) continue;
    if (!(ls >> v >> c)) throw ParseError(lineno, "expected `u v count`");
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing token: " + rest);
    int ui = g.vertex_index(u);
    int vi = g.vertex_index(v);
    if (ui < 0 || vi < 0) throw ParseError(lineno, "unknown vertex in `" + u + " " + v + "`");
    int e = g.edge_index(ui, vi);
    if (e < 0) throw ParseError(lineno, "no such edge " + u + " " + v);
    if (counts[e] != -1) throw ParseError(lineno, "duplicate count for edge " + u + " " + v);
    counts[e] = c;
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (counts[e] == -1) {
      EdgeId id = g.edge_id(e);
      throw ValidationError("missing count for edge " + id.u + " " + id.v);
    }
  return CountVector{std::move(counts)};
}

std::string CountVector::to_text(const Graph& g) const {
  std::string out;
  for (int e = 0; e < g.edge_count(); ++e) {
    EdgeId id = g.edge_id(e);
    out += id.u + " " + id.v + " " + std::to_string(counts[e]) + "\n";
  }
  return out;
}

std::string ConstraintViolation::describe(const Graph& g) const {
  switch (kind) {
    case C1: {
      EdgeId id = g.edge_id(edge);
      return "C1 violated at edge " + id.u + " " + id.v;
    }
    case C2:
      return "C2 violated at vertex " + g.label(vertex);
    case C3: {
      EdgeId id = g.edge_id(edge);
      return "C3 violated at vertex " + g.label(vertex) + " for edge " + id.u + " " + id.v;
    }
    case C4:
      return "C4 violated at vertex " + g.label(vertex);
  }
  return "unknown violation";
}

ValidationReport check_local_threading(const Graph& g, const CountVector& x) {
  if (static_cast<int>(x.counts.size()) != g.edge_count())
    throw std::invalid_argument("count vector domain does not match E(g)");
  ValidationReport report;
  for (int e = 0; e < g.edge_count(); ++e)
    if (x.counts[e] < 1)
      report.violations.push_back(ConstraintViolation{ConstraintViolation::C1, -1, e});
  for (int v = 0; v < g.vertex_count(); ++v) {
    long long sum = 0;
    for (const auto& inc : g.incident(v)) sum += x.counts[inc.edge];
    if (sum % 2 != 0)
      report.violations.push_back(ConstraintViolation{ConstraintViolation::C2, v, -1});
    for (const auto& inc : g.incident(v)) {
      long long others = sum - x.counts[inc.edge];
      if (others < x.counts[inc.edge])
        report.violations.push_back(ConstraintViolation{ConstraintViolation::C3, v, inc.edge});
    }
    if (sum < 2LL * (g.degree(v) - 1))
      report.violations.push_back(ConstraintViolation{ConstraintViolation::C4, v, -1});
  }
  report.ok = report.violations.empty();
  return report;
}

Rational threading_length(const Graph& g, const CountVector& x) {
  if (static_cast<int>(x.counts.size()) != g.edge_count())
    throw std::invalid_argument("count vector domain does not match E(g)");
  Rational sum(0);
  for (int e = 0; e < g.edge_count(); ++e) sum += g.edge(e).length * Rational(x.counts[e]);
  return sum;
}

bool is_perfect(const Graph& g, const CountVector& x) {
  if (!check_local_threading(g, x).ok)
    throw std::invalid_argument("is_perfect: counts are not a local threading");
  for (int v = 0; v < g.vertex_count(); ++v) {
    long long sum = 0;
    for (const auto& inc : g.incident(v)) sum += x.counts[inc.edge];
    if (sum != 2LL * (g.degree(v) - 1)) return false;
  }
  return true;
}

BoundsReport bounds(const Graph& g) {
  BoundsReport r;
  long long n = g.vertex_count();
  long long m = g.edge_count();
  long long london = static_cast<long long>(london_vertices(g).size());
  r.lower_basic = 2 * m - n;
  r.lower_london = 2 * m - n + london;
  r.upper_trivial = 2 * m;

  CyclePacking unit_packing = max_disjoint_cycles(g, PackingObjective::EdgeCount);
  r.upper_cycles = 2 * m - unit_packing.total_edges;

  Rational total = g.total_length();
  r.lower_weighted = total;
  r.upper_trivial_weighted = Rational(2) * total;
  if (g.unit_lengths()) {
    r.upper_cycles_weighted = Rational(r.upper_cycles);
  } else {
    CyclePacking weighted_packing = max_disjoint_cycles(g, PackingObjective::TotalLength);
    r.upper_cycles_weighted = Rational(2) * total - weighted_packing.total_length;
  }
  return r;
}

}  // namespace threading
