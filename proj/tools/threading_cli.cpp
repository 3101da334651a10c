// Command-line front end: solve, verify, bounds, oracle, export-dot.
// Exit codes: 0 ok, 1 input error, 2 infeasible / failed verification,
// 3 internal error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "threading/constraints.hpp"
#include "threading/graph.hpp"
#include "threading/junction.hpp"
#include "threading/oracle.hpp"
#include "threading/reductions.hpp"
#include "threading/special_cases.hpp"

using json = nlohmann::ordered_json;
using namespace threading;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitInternal = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

Graph load_graph(const std::string& path) { return Graph::parse(read_file(path)); }

// Cap file: lines of `u v cap`, # comments, blank lines ignored.
std::map<EdgeId, long long> parse_caps(const std::string& text) {
  std::map<EdgeId, long long> caps;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string u, v;
    long long c;
    if (!(fields >> u)) continue;
    if (!(fields >> v >> c))
      throw ParseError(lineno, "expected `u v cap`");
    std::string rest;
    if (fields >> rest) throw ParseError(lineno, "trailing input: " + rest);
    auto id = EdgeId::canonical(u, v);
    if (!caps.emplace(id, c).second)
      throw ParseError(lineno, "duplicate cap for edge " + id.u + " " + id.v);
  }
  return caps;
}

json graph_stats(const Graph& g) {
  return json{{"n", g.vertex_count()},
              {"m", g.edge_count()},
              {"max_degree", g.max_degree()},
              {"bridges", bridges(g).size()},
              {"london", london_vertices(g).size()}};
}

std::string stats_line(const Graph& g) {
  std::ostringstream out;
  out << "graph: n=" << g.vertex_count() << " m=" << g.edge_count()
      << " max_degree=" << g.max_degree() << " bridges=" << bridges(g).size()
      << " london=" << london_vertices(g).size();
  return out.str();
}

json length_json(const Rational& r) {
  return json{{"fraction", to_fraction_string(r)}, {"decimal", to_decimal_string(r)}};
}

json counts_json(const Graph& g, const CountVector& x) {
  json out = json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    EdgeId id = g.edge_id(e);
    out.push_back(json{{"u", id.u}, {"v", id.v}, {"count", x.counts[e]}});
  }
  return out;
}

std::string walk_line(const ThreadingWalk& w) {
  std::string s = w.to_text();
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

int cmd_solve(const std::string& graph_file, const std::string& capped_file, bool want_double,
              bool want_cubic, const std::string& walk_out, bool as_json) {
  Graph g = load_graph(graph_file);
  auto t0 = std::chrono::steady_clock::now();

  CountVector counts = CountVector::all(g, 1);
  Rational length(0);
  std::string mode = "optimal";
  long long doubled = -1;
  if (want_double) {
    mode = "double";
    SpecialSolve s = solve_double(g);
    counts = std::move(s.counts);
    length = s.length;
    doubled = 0;
    for (long long c : counts.counts) doubled += c == 2;
  } else if (want_cubic) {
    mode = "cubic";
    SpecialSolve s = solve_cubic(g);
    counts = std::move(s.counts);
    length = s.length;
  } else if (!capped_file.empty()) {
    mode = "capped";
    auto result = solve_capped(g, parse_caps(read_file(capped_file)));
    if (!result) throw InfeasibleError("no threading satisfies the caps");
    counts = std::move(result->counts);
    length = result->length;
  } else {
    SolveResult r = solve_optimal(g);
    counts = std::move(r.counts);
    length = r.length;
  }
  ThreadingWalk walk = realize_walk(g, counts);
  auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);

  if (!walk_out.empty()) write_file(walk_out, walk.to_text());

  if (as_json) {
    json out{{"command", "solve"},
             {"mode", mode},
             {"graph", graph_stats(g)},
             {"length", length_json(length)}};
    if (doubled >= 0) out["doubled_edges"] = doubled;
    out["counts"] = counts_json(g, counts);
    out["walk"] = walk_line(walk);
    out["time_ms"] = elapsed.count();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << stats_line(g) << "\n";
    std::cout << "length " << to_fraction_string(length) << " ("
              << to_decimal_string(length) << ")";
    if (doubled >= 0) std::cout << ", doubled edges: " << doubled;
    std::cout << "\ncounts:\n" << counts.to_text(g);
    std::cout << "walk: " << walk_line(walk) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& graph_file, const std::string& walk_file,
               const std::string& counts_file) {
  Graph g = load_graph(graph_file);
  if (!walk_file.empty()) {
    ThreadingWalk walk = ThreadingWalk::parse(read_file(walk_file));
    WalkReport report = verify_walk(g, walk);
    if (!report.ok) {
      std::cout << "invalid: " << report.error << "\n";
      return kExitInfeasible;
    }
    std::cout << "ok: walk of length " << walk.vertices.size() << ", induced counts:\n"
              << report.counts.to_text(g);
    return kExitOk;
  }
  CountVector x = CountVector::parse(g, read_file(counts_file));
  ValidationReport report = check_local_threading(g, x);
  if (!report.ok) {
    for (const auto& violation : report.violations)
      std::cout << "invalid: " << violation.describe(g) << "\n";
    return kExitInfeasible;
  }
  std::cout << "ok: length " << to_fraction_string(threading_length(g, x))
            << (is_perfect(g, x) ? " (perfect threading)" : "") << "\n";
  return kExitOk;
}

int cmd_bounds(const std::string& graph_file, bool as_json) {
  Graph g = load_graph(graph_file);
  BoundsReport b = bounds(g);
  if (as_json) {
    json out{{"command", "bounds"},
             {"graph", graph_stats(g)},
             {"lower_basic", b.lower_basic},
             {"lower_london", b.lower_london},
             {"upper_cycles", b.upper_cycles},
             {"upper_trivial", b.upper_trivial},
             {"lower_weighted", length_json(b.lower_weighted)},
             {"upper_cycles_weighted", length_json(b.upper_cycles_weighted)},
             {"upper_trivial_weighted", length_json(b.upper_trivial_weighted)}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << stats_line(g) << "\n";
  std::cout << "lower_basic " << b.lower_basic << "\n";
  std::cout << "lower_london " << b.lower_london << "\n";
  std::cout << "upper_cycles " << b.upper_cycles << "\n";
  std::cout << "upper_trivial " << b.upper_trivial << "\n";
  if (!g.unit_lengths()) {
    std::cout << "lower_weighted " << to_fraction_string(b.lower_weighted) << "\n";
    std::cout << "upper_cycles_weighted " << to_fraction_string(b.upper_cycles_weighted) << "\n";
    std::cout << "upper_trivial_weighted " << to_fraction_string(b.upper_trivial_weighted) << "\n";
    std::cout << to_fraction_string(b.lower_weighted) << " <= OPT <= "
              << to_fraction_string(b.upper_cycles_weighted) << "\n";
  } else {
    std::cout << b.lower_london << " <= OPT <= " << b.upper_cycles << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const std::string& graph_file, bool as_json) {
  Graph g = load_graph(graph_file);
  auto result = oracle_optimal(g);
  if (!result) throw InfeasibleError("search box admits no threading");
  if (as_json) {
    json out{{"command", "oracle"},
             {"graph", graph_stats(g)},
             {"length", length_json(result->length)},
             {"counts", counts_json(g, result->counts)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << stats_line(g) << "\n";
    std::cout << "length " << to_fraction_string(result->length) << " ("
              << to_decimal_string(result->length) << ")\n";
    std::cout << "counts:\n" << result->counts.to_text(g);
  }
  return kExitOk;
}

std::string dot_quote(const std::string& s) { return "\"" + s + "\""; }

int cmd_export_dot(const std::string& graph_file, bool threading_graph) {
  Graph g = load_graph(graph_file);
  std::ostringstream out;
  if (!threading_graph) {
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << dot_quote(g.label(v)) << ";\n";
    for (int e = 0; e < g.edge_count(); ++e) {
      EdgeId id = g.edge_id(e);
      out << "  " << dot_quote(id.u) << " -- " << dot_quote(id.v);
      if (!g.unit_lengths())
        out << " [label=" << dot_quote(to_fraction_string(g.edge(e).length)) << "]";
      out << ";\n";
    }
    out << "}\n";
    std::cout << out.str();
    return kExitOk;
  }

  SolveResult r = solve_optimal(g);
  std::vector<JunctionGraph> junctions;
  for (int v = 0; v < g.vertex_count(); ++v) junctions.push_back(build_junction(g, v, r.counts));
  ThreadingGraph tg = build_threading_graph(g, junctions);
  std::vector<int> link_order;
  euler_no_uturn(g, tg, &link_order);

  static const char* kPalette[] = {"crimson",  "royalblue", "forestgreen", "darkorange",
                                   "purple",   "teal",      "saddlebrown", "deeppink",
                                   "goldenrod", "slategray"};
  auto tube_name = [&](int e) {
    EdgeId id = g.edge_id(e);
    return id.u + "|" + id.v;
  };
  out << "graph threading {\n";
  for (int e = 0; e < g.edge_count(); ++e)
    out << "  " << dot_quote(tube_name(e)) << ";\n";
  for (std::size_t l = 0; l < tg.links.size(); ++l) {
    const auto& link = tg.links[l];
    out << "  " << dot_quote(tube_name(link.tube_a)) << " -- " << dot_quote(tube_name(link.tube_b))
        << " [color=" << kPalette[link.owner % 10] << " label=" << dot_quote(std::to_string(link_order[l]))
        << "];\n";
  }
  out << "}\n";
  std::cout << out.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for minimum-length no-U-turn closed walks with connected junctions"};
  app.require_subcommand(1);

  std::string graph_file, capped_file, walk_out, walk_file, counts_file;
  bool want_double = false, want_cubic = false, as_json = false, threading_graph = false;

  auto* solve = app.add_subcommand("solve", "Compute an optimal threading");
  solve->add_option("graph", graph_file, "edge-list file")->required();
  solve->add_option("--capped", capped_file, "per-edge visit caps (`u v cap` lines)");
  solve->add_flag("--double", want_double, "double threading (counts in {1,2})");
  solve->add_flag("--cubic", want_cubic, "cubic fast path (3-regular input)");
  solve->add_option("--walk-out", walk_out, "write the realizing walk to this file");
  solve->add_flag("--json", as_json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "Verify a walk or a count vector");
  verify->add_option("graph", graph_file, "edge-list file")->required();
  auto* wopt = verify->add_option("--walk", walk_file, "walk file (comma-separated vertices)");
  auto* copt = verify->add_option("--counts", counts_file, "count-vector file (`u v count` lines)");
  wopt->excludes(copt);

  auto* bounds_cmd = app.add_subcommand("bounds", "Report lower/upper threading-length bounds");
  bounds_cmd->add_option("graph", graph_file, "edge-list file")->required();
  bounds_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference solve (small inputs)");
  oracle_cmd->add_option("graph", graph_file, "edge-list file")->required();
  oracle_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* dot = app.add_subcommand("export-dot", "Render the graph (or its threading graph) as DOT");
  dot->add_option("graph", graph_file, "edge-list file")->required();
  dot->add_flag("--threading", threading_graph, "solve and render the threading graph");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      if (want_double && want_cubic) throw InputError("--double and --cubic are exclusive");
      if ((want_double || want_cubic) && !capped_file.empty())
        throw InputError("--capped cannot combine with --double/--cubic");
      return cmd_solve(graph_file, capped_file, want_double, want_cubic, walk_out, as_json);
    }
    if (verify->parsed()) {
      if (walk_file.empty() == counts_file.empty())
        throw InputError("verify needs exactly one of --walk or --counts");
      return cmd_verify(graph_file, walk_file, counts_file);
    }
    if (bounds_cmd->parsed()) return cmd_bounds(graph_file, as_json);
    if (oracle_cmd->parsed()) return cmd_oracle(graph_file, as_json);
    if (dot->parsed()) return cmd_export_dot(graph_file, threading_graph);
    throw InputError("no command");
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const OracleGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
