#include "relnet/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace relnet {

namespace {

using Json = nlohmann::ordered_json;

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Json edge_array(const EdgeSet& edges) {
  Json arr = Json::array();
  for (EdgeId e : edges) arr.push_back(e);
  return arr;
}

Json vertex_array(const VertexSet& vertices) {
  Json arr = Json::array();
  for (VertexId v : vertices) arr.push_back(v);
  return arr;
}

}  // namespace

Graph parse_graph_text(std::istream& in) {
  std::string line;
  long line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!skippable(line)) {
        out = line;
        return true;
      }
    }
    return false;
  };

  std::string header;
  if (!next_line(header)) throw ParseError("graph: missing header line", line_no);
  std::istringstream hs(header);
  long long n = -1, m = -1;
  std::string extra;
  if (!(hs >> n >> m) || (hs >> extra)) throw ParseError("graph: header must be 'n m'", line_no);
  if (n < 0 || m < 0 || n > 1'000'000 || m > 1'000'000)
    throw ParseError("graph: header out of range", line_no);

  std::vector<std::tuple<VertexId, VertexId, double>> edges;
  for (long long i = 0; i < m; ++i) {
    std::string body;
    if (!next_line(body)) throw ParseError("graph: missing edge line", line_no);
    std::istringstream es(body);
    long long u = -1, v = -1;
    double w = 0.0;
    if (!(es >> u >> v >> w) || (es >> extra))
      throw ParseError("graph: edge line must be 'u v w'", line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("graph: endpoint out of range", line_no);
    if (u == v) throw ParseError("graph: self-loop rejected", line_no);
    if (w < 0) throw ParseError("graph: negative weight rejected", line_no);
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v), w);
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_text(in);
}

std::string format_graph_text(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ';
    Json w = e.weight;
    out << w.dump() << '\n';
  }
  return out.str();
}

std::vector<Demand> parse_demands(std::istream& in) {
  std::string line;
  long line_no = 0;
  std::vector<Demand> parsed;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream ls(line);
    long long s = -1, t = -1, k = -1;
    std::string extra;
    if (!(ls >> s >> t >> k) || (ls >> extra))
      throw ParseError("demands: line must be 's t k'", line_no);
    if (s < 0 || t < 0) throw ParseError("demands: negative vertex id", line_no);
    if (s == t) throw ParseError("demands: s = t", line_no);
    if (k < 1) throw ParseError("demands: k must be >= 1", line_no);
    parsed.push_back(Demand{static_cast<VertexId>(std::min(s, t)),
                            static_cast<VertexId>(std::max(s, t)), static_cast<int>(k)});
  }
  std::sort(parsed.begin(), parsed.end());
  std::vector<Demand> merged;
  for (const Demand& d : parsed) {
    if (!merged.empty() && merged.back().s == d.s && merged.back().t == d.t)
      merged.back().k = std::max(merged.back().k, d.k);
    else
      merged.push_back(d);
  }
  return merged;
}

std::vector<Demand> parse_demands(const std::string& text) {
  std::istringstream in(text);
  return parse_demands(in);
}

std::string solution_json(const std::string& problem, const Graph& g, const Solution& solution) {
  Json j;
  j["schema"] = 1;
  j["problem"] = problem;
  j["weight"] = solution.weight;
  j["edges"] = edge_array(solution.edges);
  j["edge_count"] = solution.edges.size();
  j["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
  return j.dump(2) + "\n";
}

std::string sdk_solution_json(const Graph& g, const Solution& solution, int k,
                              const SdkTrace& trace) {
  Json j;
  j["schema"] = 1;
  j["problem"] = "sdk";
  j["k"] = k;
  j["weight"] = solution.weight;
  j["edges"] = edge_array(solution.edges);
  j["edge_count"] = solution.edges.size();
  j["ratio_bound"] = ratio_bound(k);
  j["separator_edges"] = edge_array(trace.separator_edges);
  j["forced_bridges"] = edge_array(trace.forced_bridges);
  Json breakdown = Json::array();
  for (const SdkContribution& c : trace.contributions) {
    Json item;
    item["level"] = c.level;
    item["node"] = c.node_index;
    item["shortest_path_edges"] = edge_array(c.shortest_path_edges);
    item["recursive_edges"] = edge_array(c.recursive_edges);
    item["final_recursive_edges"] = edge_array(c.final_recursive_edges);
    item["flow_edges"] = edge_array(c.flow_edges);
    breakdown.push_back(std::move(item));
  }
  j["breakdown"] = std::move(breakdown);
  if (trace.decomposition) {
    Json nodes = Json::array();
    for (const HierarchyNode& node : trace.decomposition->nodes) {
      Json item;
      item["level"] = node.level;
      item["parent"] = node.parent;
      item["vertices"] = vertex_array(node.vertices);
      item["left_boundary"] = vertex_array(node.left_boundary);
      item["right_boundary"] = vertex_array(node.right_boundary);
      item["left_separator"] = edge_array(node.left_separator);
      item["right_separator"] = edge_array(node.right_separator);
      nodes.push_back(std::move(item));
    }
    j["hierarchy"] = std::move(nodes);
  } else {
    j["hierarchy"] = nullptr;  // ordinary or base-case solve, no decomposition
  }
  j["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
  return j.dump(2) + "\n";
}

std::string feasibility_json(const FeasibilityReport& report) {
  Json j;
  j["schema"] = 1;
  j["feasible"] = report.feasible;
  if (report.witness) {
    Json w;
    w["x"] = vertex_array(report.witness->demand.x);
    w["y"] = vertex_array(report.witness->demand.y);
    w["d"] = report.witness->demand.d;
    w["faults"] = edge_array(report.witness->faults);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["checked_fault_sets"] = report.checked_fault_sets;
  return j.dump(2) + "\n";
}

std::string exact_json(const Graph& g, const Solution& solution) {
  Json j;
  j["schema"] = 1;
  j["problem"] = "exact";
  j["weight"] = solution.weight;
  j["edges"] = edge_array(solution.edges);
  j["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
  return j.dump(2) + "\n";
}

std::string cactus_json(const Graph& g, const CactusModel& cactus,
                        const std::optional<StChain>& chain) {
  Json j;
  j["schema"] = 1;
  j["mode"] = "cactus";
  Json classes = Json::array();
  for (const VertexSet& c : cactus.classes.classes) classes.push_back(vertex_array(c));
  j["classes"] = std::move(classes);
  Json cycles = Json::array();
  for (const auto& cycle : cactus.cycles) {
    Json arr = Json::array();
    for (EdgeId ce : cycle) arr.push_back(cactus.edge_origin[ce]);
    cycles.push_back(std::move(arr));
  }
  j["cycles"] = std::move(cycles);
  if (chain) {
    j["s"] = chain->s;
    j["t"] = chain->t;
    j["forced_edges"] = edge_array(chain->forced_edges);
    Json rel = Json::array();
    for (const RelevantClass& rc : chain->relevant_classes) {
      Json item;
      item["class"] = rc.class_index;
      item["members"] = vertex_array(rc.members);
      item["attachment_nodes"] = vertex_array(rc.attachment_nodes);
      Json edges = Json::array();
      for (EdgeId e : rc.attachment_edges) edges.push_back(e);
      item["attachment_edges"] = std::move(edges);
      item["central"] = rc.is_central;
      rel.push_back(std::move(item));
    }
    j["relevant_classes"] = std::move(rel);
  }
  j["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
  return j.dump(2) + "\n";
}

std::string hierarchy_json(const HierarchicalDecomposition& decomp) {
  Json j;
  j["schema"] = 1;
  j["mode"] = "chain";
  j["k"] = decomp.k;
  j["s"] = decomp.s;
  j["t"] = decomp.t;
  Json nodes = Json::array();
  for (const HierarchyNode& node : decomp.nodes) {
    Json item;
    item["level"] = node.level;
    item["parent"] = node.parent;
    item["vertices"] = vertex_array(node.vertices);
    item["left_boundary"] = vertex_array(node.left_boundary);
    item["right_boundary"] = vertex_array(node.right_boundary);
    item["left_separator"] = edge_array(node.left_separator);
    item["right_separator"] = edge_array(node.right_separator);
    Json children = Json::array();
    for (int c : node.children) children.push_back(c);
    item["children"] = std::move(children);
    nodes.push_back(std::move(item));
  }
  j["components"] = std::move(nodes);
  j["separator_edges"] = edge_array(decomp.all_separator_edges);
  return j.dump(2) + "\n";
}

EdgeSet parse_solution_edges(const std::string& json_text) {
  Json j = Json::parse(json_text);
  if (!j.contains("edges") || !j["edges"].is_array())
    throw Error("solution JSON: missing 'edges' array");
  EdgeSet out;
  for (const auto& e : j["edges"]) out.insert(e.get<EdgeId>());
  return out;
}

}  // namespace relnet
