// relnet: survivable network design with relative fault tolerance.
//
// Subcommands: solve, verify, exact, decompose, report. Graphs are text
// files ("n m" then "u v w" lines); demands are "s t k" lines; outputs are
// schema-1 JSON (or CSV for report). Exit codes: 0 ok, 1 infeasible verify
// verdict, 2 input/format error, 3 enumeration cap exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "relnet/corpus.hpp"
#include "relnet/flow.hpp"
#include "relnet/io.hpp"
#include "relnet/oracle.hpp"
#include "relnet/rsnd3.hpp"
#include "relnet/sdk.hpp"
#include "relnet/snd.hpp"

namespace {

using namespace relnet;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct CapFlags {
  long long fault_sets = -1;
  long long vertex_subsets = -1;
  long long edge_subsets = -1;
};

OracleCaps resolve_caps(const CapFlags& flags) {
  OracleCaps caps;
  // RELNET_CAPS="fault_sets=...,vertex_subsets=...,edge_subsets=..."
  if (const char* env = std::getenv("RELNET_CAPS")) {
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw Error("RELNET_CAPS: expected key=value pairs");
      std::string key = item.substr(0, eq);
      long long value = std::stoll(item.substr(eq + 1));
      if (key == "fault_sets")
        caps.max_fault_sets = value;
      else if (key == "vertex_subsets")
        caps.max_vertex_subsets = value;
      else if (key == "edge_subsets")
        caps.max_edge_subsets = value;
      else
        throw Error("RELNET_CAPS: unknown key '" + key + "'");
    }
  }
  if (flags.fault_sets > 0) caps.max_fault_sets = flags.fault_sets;
  if (flags.vertex_subsets > 0) caps.max_vertex_subsets = flags.vertex_subsets;
  if (flags.edge_subsets > 0) caps.max_edge_subsets = flags.edge_subsets;
  return caps;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file: " + path);
  return parse_graph_text(in);
}

std::vector<Demand> load_demands(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open demands file: " + path);
  return parse_demands(in);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + output_path);
    out << text;
  }
}

int run_solve(const std::string& problem, const std::string& graph_path,
              const std::string& demands_path, int k, bool bridge_peeling,
              bool componentwise, const std::string& output_path) {
  Graph g = load_graph(graph_path);
  std::string json;
  if (problem == "3rsnd") {
    std::vector<Demand> demands = load_demands(demands_path);
    Solution sol;
    if (componentwise) {
      if (demands.size() != 1 || demands[0].k != 3)
        throw Error("--componentwise needs exactly one 3-demand");
      sol = solve_sd3_componentwise(g, demands[0].s, demands[0].t);
    } else {
      sol = solve_3rsnd(g, demands);
    }
    json = solution_json("3rsnd", g, sol);
  } else if (problem == "sdk") {
    std::vector<Demand> demands = load_demands(demands_path);
    if (demands.size() != 1) throw Error("sdk solves a single demand");
    SdkOptions options;
    options.bridge_peeling = bridge_peeling;
    SdkTrace trace;
    Solution sol = solve_sdk(g, demands[0].s, demands[0].t, demands[0].k, options, &trace);
    json = sdk_solution_json(g, sol, demands[0].k, trace);
  } else if (problem == "kefts") {
    if (k < 1) throw Error("kefts needs --k");
    Solution sol = solve_kefts(g, k);
    json = solution_json("kefts", g, sol);
  } else {
    throw Error("unknown problem: " + problem);
  }
  emit(json, output_path);
  return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& demands_path,
               const std::string& solution_path, const OracleCaps& caps, bool timing,
               const std::string& output_path) {
  Graph g = load_graph(graph_path);
  std::vector<Demand> demands = load_demands(demands_path);
  std::ifstream in(solution_path);
  if (!in) throw Error("cannot open solution file: " + solution_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  EdgeSet edges = parse_solution_edges(buffer.str());

  auto start = std::chrono::steady_clock::now();
  FeasibilityReport report = feasible_by_fault_enumeration(g, edges, demands, caps);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  if (timing) std::cerr << "verify wall time: " << elapsed.count() << " ms\n";

  emit(feasibility_json(report), output_path);
  return report.feasible ? kExitOk : kExitInfeasible;
}

int run_exact(const std::string& graph_path, const std::string& demands_path,
              const OracleCaps& caps, const std::string& output_path) {
  Graph g = load_graph(graph_path);
  std::vector<Demand> demands = load_demands(demands_path);
  Solution sol = exact_optimum(g, demands, caps);
  emit(exact_json(g, sol), output_path);
  return kExitOk;
}

int run_decompose(const std::string& mode, const std::string& graph_path,
                  const std::string& demands_path, int s, int t, int k,
                  const std::string& output_path) {
  Graph g = load_graph(graph_path);
  if ((s < 0 || t < 0) && !demands_path.empty()) {
    std::vector<Demand> demands = load_demands(demands_path);
    if (demands.empty()) throw Error("decompose: demands file is empty");
    s = demands[0].s;
    t = demands[0].t;
    if (k < 1) k = demands[0].k;
  }
  if (mode == "cactus") {
    CactusModel cactus = build_cactus(g);
    std::optional<StChain> chain;
    if (s >= 0 && t >= 0) chain = st_chain(cactus, s, t);
    emit(cactus_json(g, cactus, chain), output_path);
    return kExitOk;
  }
  if (mode == "chain") {
    if (s < 0 || t < 0) throw Error("decompose --mode chain needs --s/--t or --demands");
    if (k < 2) throw Error("decompose --mode chain needs --k >= 2");
    emit(hierarchy_json(build_hierarchy(g, s, t, k)), output_path);
    return kExitOk;
  }
  throw Error("unknown decompose mode: " + mode);
}

int run_report(const std::string& problem, uint64_t seed, const OracleCaps& caps,
               const std::string& output_path) {
  std::ostringstream csv;
  csv << "instance,k,alg_weight,opt_weight,ratio,bound\n";
  csv.setf(std::ios::fixed);
  csv.precision(6);
  Rng rng(seed);
  auto add_row = [&](const std::string& name, int k, double alg, double opt, long long bound) {
    csv << name << ',' << k << ',' << alg << ',' << opt << ','
        << (opt > 0 ? alg / opt : 1.0) << ',' << bound << '\n';
  };
  auto kefts_opt = [&](const Graph& g, int k) {
    std::vector<Demand> all_pairs;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (VertexId v = u + 1; v < g.vertex_count(); ++v) all_pairs.push_back({u, v, k});
    return exact_optimum(g, all_pairs, caps);
  };

  for (const auto& [name, g] : fixtures::named_two_edge_connected()) {
    if (g.edge_count() > 16) continue;
    VertexId s = 0, t = g.vertex_count() - 1;
    if (problem == "3rsnd") {
      add_row(name, 3, solve_3rsnd(g, {{s, t, 3}}).weight,
              exact_optimum(g, {{s, t, 3}}, caps).weight, 2);
    } else if (problem == "sdk") {
      for (int k = 2; k <= 4; ++k)
        add_row(name, k, solve_sdk(g, s, t, k).weight, exact_optimum(g, {{s, t, k}}, caps).weight,
                ratio_bound(k));
    } else if (problem == "kefts") {
      for (int k = 1; k <= 3; ++k)
        add_row(name, k, solve_kefts(g, k).weight, kefts_opt(g, k).weight, 2);
    } else {
      throw Error("unknown problem: " + problem);
    }
  }
  // A seeded random slice rounds out the table.
  for (int i = 0; i < 10; ++i) {
    Graph g = random_two_edge_connected_multigraph(rng, 7, 12);
    VertexId s = 0, t = g.vertex_count() - 1;
    std::string name = "random_" + std::to_string(i);
    if (problem == "3rsnd") {
      add_row(name, 3, solve_3rsnd(g, {{s, t, 3}}).weight,
              exact_optimum(g, {{s, t, 3}}, caps).weight, 2);
    } else if (problem == "sdk") {
      int k = 2 + static_cast<int>(rng.below(3));
      add_row(name, k, solve_sdk(g, s, t, k).weight, exact_optimum(g, {{s, t, k}}, caps).weight,
              ratio_bound(k));
    } else {
      int k = 1 + static_cast<int>(rng.below(3));
      add_row(name, k, solve_kefts(g, k).weight, kefts_opt(g, k).weight, 2);
    }
  }
  emit(csv.str(), output_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative survivable network design toolkit"};
  app.require_subcommand(1);

  std::string graph_path, demands_path, solution_path, output_path;
  std::string problem = "3rsnd", mode = "cactus";
  int k = -1, s = -1, t = -1;
  uint64_t seed = 1;
  bool bridge_peeling = true, componentwise = false, timing = false;
  CapFlags cap_flags;

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--max-fault-sets", cap_flags.fault_sets, "oracle fault-set cap");
    cmd->add_option("--max-vertex-subsets", cap_flags.vertex_subsets, "oracle vertex-subset cap");
    cmd->add_option("--max-edge-subsets", cap_flags.edge_subsets, "oracle edge-subset cap");
  };

  CLI::App* solve = app.add_subcommand("solve", "run an approximation solver");
  solve->add_option("--problem", problem, "3rsnd | sdk | kefts")->required();
  solve->add_option("--graph", graph_path, "graph file")->required();
  solve->add_option("--demands", demands_path, "demands file (3rsnd, sdk)");
  solve->add_option("--k", k, "requirement (kefts)");
  solve->add_option("--out", output_path, "output path (default stdout)");
  solve->add_flag(
      "--no-bridge-peeling", [&](size_t) { bridge_peeling = false; },
      "fail on derived instances with terminal-separating bridges");
  solve->add_flag("--componentwise", componentwise,
                  "use the component-wise single-demand pipeline");

  CLI::App* verify = app.add_subcommand("verify", "fault-enumeration feasibility check");
  verify->add_option("--graph", graph_path, "graph file")->required();
  verify->add_option("--demands", demands_path, "demands file")->required();
  verify->add_option("--solution", solution_path, "solution JSON")->required();
  verify->add_option("--out", output_path, "output path (default stdout)");
  verify->add_flag("--timing", timing, "report wall time on stderr");
  add_caps(verify);

  CLI::App* exact = app.add_subcommand("exact", "exhaustive exact optimum");
  exact->add_option("--graph", graph_path, "graph file")->required();
  exact->add_option("--demands", demands_path, "demands file")->required();
  exact->add_option("--out", output_path, "output path (default stdout)");
  add_caps(exact);

  CLI::App* decompose = app.add_subcommand("decompose", "cactus or hierarchy dump");
  decompose->add_option("--mode", mode, "cactus | chain")->required();
  decompose->add_option("--graph", graph_path, "graph file")->required();
  decompose->add_option("--demands", demands_path, "demands file (terminals from first line)");
  decompose->add_option("--s", s, "source vertex");
  decompose->add_option("--t", t, "target vertex");
  decompose->add_option("--k", k, "hierarchy depth (chain mode)");
  decompose->add_option("--out", output_path, "output path (default stdout)");

  CLI::App* report = app.add_subcommand("report", "fixture/random corpus ratio table (CSV)");
  report->add_option("--problem", problem, "3rsnd | sdk | kefts")->required();
  report->add_option("--seed", seed, "random corpus seed");
  report->add_option("--out", output_path, "output path (default stdout)");
  add_caps(report);

  CLI11_PARSE(app, argc, argv);

  try {
    OracleCaps caps = resolve_caps(cap_flags);
    if (solve->parsed())
      return run_solve(problem, graph_path, demands_path, k, bridge_peeling, componentwise,
                       output_path);
    if (verify->parsed())
      return run_verify(graph_path, demands_path, solution_path, caps, timing, output_path);
    if (exact->parsed()) return run_exact(graph_path, demands_path, caps, output_path);
    if (decompose->parsed())
      return run_decompose(mode, graph_path, demands_path, s, t, k, output_path);
    if (report->parsed()) return run_report(problem, seed, caps, output_path);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
